#pragma once

#include "rgkit/graph.hpp"
#include "rgkit/realization.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgkit {

/// Undirected simple graph on nodes 0..order-1 with sorted neighbour lists.
class AdjacencyGraph {
public:
    explicit AdjacencyGraph(std::size_t order = 0) : adj_(order) {}

    void add_edge(std::size_t a, std::size_t b);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }
    bool adjacent(std::size_t a, std::size_t b) const;

    /// Node degrees sorted nonincreasing.
    std::vector<std::size_t> degree_sequence() const;
    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool is_complete() const;
    bool is_connected() const;

    friend bool operator==(const AdjacencyGraph&, const AdjacencyGraph&) = default;

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edge_count_ = 0;
};

/// True iff `mapping` is a bijection from a's nodes to b's nodes that maps
/// edges onto edges exactly.
bool is_isomorphism(const AdjacencyGraph& a, const AdjacencyGraph& b,
                    const std::vector<std::size_t>& mapping);

/// Nodes are the labeled realizations of `sequence` in canonical order; two
/// nodes are adjacent iff a single 2-switch turns one into the other.
struct RealizationGraph {
    DegreeSequence sequence;
    std::vector<LabeledGraph> nodes;
    AdjacencyGraph adjacency;

    std::size_t size() const noexcept { return nodes.size(); }
    std::optional<std::size_t> index_of(const LabeledGraph& g) const;
};

/// Adjacency comes from the symmetric difference of edge sets; every edge is
/// then confirmed by applying its witnessing 2-switch.
RealizationGraph build_realization_graph(const DegreeSequence& d,
                                         std::size_t limit = kDefaultRealizationLimit);

RealizationGraph build_realization_graph(RealizationSet realizations);

bool is_connected(const RealizationGraph& rg);

struct ComplementIsomorphism {
    RealizationGraph graph;            // G(d)
    RealizationGraph complement_graph; // G(d̄)
    /// node i of G(d) maps to node mapping[i] of G(d̄)
    std::vector<std::size_t> mapping;
};

/// Maps each realization R of d to complement(R) with labels reversed, which
/// is a realization of the complementary sequence. Throws std::logic_error if
/// the resulting map is not an isomorphism.
ComplementIsomorphism complement_isomorphism(const DegreeSequence& d,
                                             std::size_t limit = kDefaultRealizationLimit);

/// Node (x, y) is numbered x * b.order() + y.
AdjacencyGraph cartesian_product(const AdjacencyGraph& a, const AdjacencyGraph& b);
AdjacencyGraph cartesian_product(const RealizationGraph& a, const RealizationGraph& b);

struct ProductCheck {
    bool holds = false;
    std::size_t factor_count = 0;
    std::size_t node_count = 0;
    std::string failure; // empty when holds
};

/// Builds G(d) and the realization graphs of its Tyshkevich pieces, splits
/// every realization of d into its pieces and checks that this is an
/// isomorphism onto the Cartesian product of the pieces' graphs.
ProductCheck check_product_theorem(const DegreeSequence& d,
                                   std::size_t limit = kDefaultRealizationLimit);

bool verify_product_theorem(const DegreeSequence& d, std::size_t limit = kDefaultRealizationLimit);

} // namespace rgkit
