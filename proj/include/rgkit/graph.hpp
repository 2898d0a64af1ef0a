#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgkit {

using Vertex = int;
/// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

/// Nonincreasing list of nonnegative integers with every term at most n - 1.
/// The constructor sorts, so the original order is not kept.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> terms);
    DegreeSequence(std::initializer_list<int> terms)
        : DegreeSequence(std::vector<int>(terms)) {}

    const std::vector<int>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    int operator[](std::size_t i) const { return terms_[i]; }
    int sum() const noexcept;

    /// (n-1-d_n, ..., n-1-d_1)
    DegreeSequence complement() const;

    /// "(2,2,2,1,1)"
    std::string to_string() const;
    /// "(6,4^(6))"
    std::string to_run_length_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
};

/// Simple labeled graph on vertices 0..n-1. Adjacency is kept as one bitmask
/// per vertex next to the canonical sorted edge list; equality and ordering
/// are defined by (vertex count, edge list).
class LabeledGraph {
public:
    explicit LabeledGraph(int vertex_count);
    LabeledGraph(int vertex_count, const std::vector<Edge>& edges);
    LabeledGraph(int vertex_count, std::initializer_list<Edge> edges)
        : LabeledGraph(vertex_count, std::vector<Edge>(edges)) {}

    /// Builds from symmetric neighbourhood masks; throws on asymmetry or loops.
    static LabeledGraph from_rows(std::vector<std::uint64_t> rows);

    int vertex_count() const noexcept { return static_cast<int>(rows_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

    bool adjacent(Vertex a, Vertex b) const { return (rows_[a] >> b) & 1U; }
    std::uint64_t neighbourhood(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const;
    /// Degree of every vertex in label order (not sorted).
    std::vector<int> degrees() const;

    LabeledGraph induced(const std::vector<Vertex>& vertices) const;

    /// "1-2 1-3 2-3" with 1-based labels.
    std::string edge_string() const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.rows_ == b.rows_;
    }
    friend std::strong_ordering operator<=>(const LabeledGraph& a, const LabeledGraph& b);

private:
    explicit LabeledGraph(std::vector<std::uint64_t> rows, bool);
    void rebuild_edges();

    std::vector<std::uint64_t> rows_;
    std::vector<Edge> edges_;
};

/// Witness [u,v:w,x]: uv and wx are edges, ux and vw are non-edges.
struct AlternatingFourCycle {
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;
    Vertex x = 0;

    /// Least of the four equivalent orderings.
    static AlternatingFourCycle canonical(Vertex u, Vertex v, Vertex w, Vertex x);

    bool is_valid_in(const LabeledGraph& g) const;
    /// [v,w:x,u], the cycle left behind by the switch (and the one that undoes it).
    AlternatingFourCycle residual() const { return {v, w, x, u}; }

    std::string to_string() const;

    friend bool operator==(const AlternatingFourCycle&, const AlternatingFourCycle&) = default;
    friend auto operator<=>(const AlternatingFourCycle&, const AlternatingFourCycle&) = default;
};

DegreeSequence degree_sequence_of(const LabeledGraph& g);

LabeledGraph complement(const LabeledGraph& g);

/// Every canonical alternating 4-cycle of g, sorted.
std::vector<AlternatingFourCycle> alternating_four_cycles(const LabeledGraph& g);

bool has_alternating_four_cycle(const LabeledGraph& g);

/// Deletes uv, wx and adds ux, vw. Throws InvalidCycleError if c is not an
/// alternating 4-cycle of g.
LabeledGraph two_switch(const LabeledGraph& g, const AlternatingFourCycle& c);

/// The canonical cycle c of `from` with two_switch(from, c) == to, if the two
/// graphs differ by exactly one 2-switch.
std::optional<AlternatingFourCycle> switch_between(const LabeledGraph& from,
                                                   const LabeledGraph& to);

/// Reverses vertex labels: i becomes n-1-i.
LabeledGraph reverse_labels(const LabeledGraph& g);

} // namespace rgkit
