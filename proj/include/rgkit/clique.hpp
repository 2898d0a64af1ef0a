#pragma once

#include "rgkit/dial.hpp"
#include "rgkit/graph.hpp"
#include "rgkit/realization_graph.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rgkit {

enum class TriangleCase { kTwoK2, kC4, kD3 };

std::string to_string(TriangleCase c);

/// Four vertices inducing 2K_2 or C_4.
struct InducedQuad {
    TriangleCase kind = TriangleCase::kTwoK2;
    std::array<Vertex, 4> vertices{};

    friend bool operator==(const InducedQuad&, const InducedQuad&) = default;
};

/// Why a realization lies in a clique: an alternating 4-cycle (size 2), an
/// induced 2K_2 / C_4 (size 3), or a dial embedding (D_3 for size 3, D_n for n >= 4).
using CliqueWitness = std::variant<AlternatingFourCycle, InducedQuad, DialEmbedding>;

std::string describe(const CliqueWitness& w);

std::optional<InducedQuad> find_induced_two_k2(const LabeledGraph& r);
std::optional<InducedQuad> find_induced_c4(const LabeledGraph& r);

/// Predicate for "r lies in a triangle of G(d)": induced 2K_2, induced C_4, or D_3.
std::optional<CliqueWitness> triangle_witness(const LabeledGraph& r);

/// Decides from the structure of r alone whether r lies in an n-clique of
/// G(d); returns the witness when it does. n >= 2.
std::optional<CliqueWitness> in_clique(const LabeledGraph& r, int n);

struct CliqueReport {
    LabeledGraph realization;
    int clique_number_predicted = 1;
    std::optional<CliqueWitness> witness;
    std::optional<int> clique_number_oracle;
};

CliqueReport clique_number_of_realization(const LabeledGraph& r);

/// Exact maximum clique containing `node`, by branch and bound with a greedy
/// colouring bound. The result includes `node` and is sorted.
std::vector<std::size_t> oracle_max_clique_through(const AdjacencyGraph& g, std::size_t node);

int oracle_clique_number(const RealizationGraph& rg, std::size_t node);

/// clique_number_of_realization plus the oracle value from G(d) built here.
CliqueReport verified_clique_report(const LabeledGraph& r,
                                    std::size_t limit = kDefaultRealizationLimit);

} // namespace rgkit
