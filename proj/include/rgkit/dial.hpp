#pragma once

#include "rgkit/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rgkit {

/// An occurrence of the configuration D_n in a graph: hub_u is adjacent to
/// the needle spoke and to none of the other spokes, hub_v is adjacent to
/// every other spoke but not to the needle. The hub pair and spoke pairs are
/// unconstrained.
struct DialEmbedding {
    Vertex hub_u = 0;
    Vertex hub_v = 0;
    Vertex needle_spoke = 0;
    std::vector<Vertex> other_spokes; // ascending

    int size_n() const { return 1 + static_cast<int>(other_spokes.size()); }
    bool is_valid_in(const LabeledGraph& r) const;

    friend bool operator==(const DialEmbedding&, const DialEmbedding&) = default;
    friend auto operator<=>(const DialEmbedding&, const DialEmbedding&) = default;
};

/// A dial (W, P) with respect to a family of realizations.
struct Dial {
    std::vector<LabeledGraph> realizations;
    std::vector<Vertex> vertices;     // W, ascending
    std::vector<Edge> varying_pairs;  // P, sorted
    Vertex hub_u = 0;
    Vertex hub_v = 0;
    std::map<std::size_t, Vertex> needle_of; // realization index -> spoke
};

/// Lexicographically least (hub_u, hub_v, needle, spokes) witness of D_n, n >= 2.
std::optional<DialEmbedding> find_dial_embedding(const LabeledGraph& r, int n);

/// Largest n with a D_n embedding, or 0 if there is none for n >= 2.
int max_dial_size(const LabeledGraph& r);

/// Checks the dial conditions on a family of at least two pairwise distinct
/// realizations of one sequence. Throws MixedSequenceError if the degrees
/// differ, std::invalid_argument for fewer than two or repeated graphs.
std::optional<Dial> verify_dial(const std::vector<LabeledGraph>& family);

/// r followed by the n - 1 graphs obtained by rotating the needle onto each
/// other spoke. Throws InvalidEmbeddingError if e is not an embedding in r.
std::vector<LabeledGraph> dial_clique(const LabeledGraph& r, const DialEmbedding& e);

/// No D_3 configuration.
bool is_matrogenic(const LabeledGraph& r);

} // namespace rgkit
