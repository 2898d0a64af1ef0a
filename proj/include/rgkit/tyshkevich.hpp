#pragma once

#include "rgkit/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rgkit {

/// Degree sequence (p2; p1) of a split graph whose clique vertices carry p2
/// and whose independent vertices carry p1. Both parts are kept sorted
/// nonincreasing, and construction checks that such a split graph exists.
class SplittedSequence {
public:
    /// Throws NotGraphicError if no split realization exists.
    static SplittedSequence from_parts(std::vector<int> clique_part,
                                       std::vector<int> independent_part);

    const std::vector<int>& clique_part() const noexcept { return clique_; }
    const std::vector<int>& independent_part() const noexcept { return independent_; }
    std::size_t size() const noexcept { return clique_.size() + independent_.size(); }
    bool is_single_term() const noexcept { return size() == 1; }

    /// p2 followed by p1, which is already nonincreasing.
    DegreeSequence as_sequence() const;

    /// "(2,2;1,1)", "(0;)", "(;0)"
    std::string to_string() const;

    friend bool operator==(const SplittedSequence&, const SplittedSequence&) = default;

private:
    SplittedSequence(std::vector<int> c, std::vector<int> i)
        : clique_(std::move(c)), independent_(std::move(i)) {}

    std::vector<int> clique_;
    std::vector<int> independent_;
};

/// A split graph on vertices 0..a+b-1 whose first a vertices form a clique
/// with degrees clique_part and whose remaining vertices form an independent
/// set with degrees independent_part, or nothing if none exists.
std::optional<LabeledGraph> realize_split(const std::vector<int>& clique_part,
                                          const std::vector<int>& independent_part);

/// p2 + |q|, then q + |p2|, then p1.
DegreeSequence compose_sequences(const SplittedSequence& p, const DegreeSequence& q);

/// Composition of two splitted sequences, itself splitted: the clique side is
/// p2 + |q| followed by q2 + |p2|; the independent side is q1 + |p2| followed
/// by p1.
SplittedSequence compose_splitted(const SplittedSequence& p, const SplittedSequence& q);

/// (P, V1, V2) ∘ Q: disjoint union of P and Q plus every edge between Q and
/// V2. Result labels: V2 in the given order, then Q's vertices, then V1 in the
/// given order. Throws PartitionError unless V1 is independent in P, V2 is a
/// clique in P, and together they partition P's vertices.
LabeledGraph compose_graphs(const LabeledGraph& p, const std::vector<Vertex>& independent,
                            const std::vector<Vertex>& clique, const LabeledGraph& q);

/// d = α_1 ∘ ... ∘ α_k ∘ d_0 with every piece indecomposable.
struct TyshkevichDecomposition {
    std::vector<SplittedSequence> components;
    DegreeSequence tail;

    DegreeSequence recompose() const;
    /// "(2,2;1,1) ∘ (3,2;1,1,1) ∘ (0)"
    std::string to_string() const;

    /// Positions of d occupied by each piece: one list per component (clique
    /// positions then independent positions, matching as_sequence order),
    /// followed by one list for the tail.
    std::vector<std::vector<Vertex>> piece_positions() const;
};

/// Throws NotGraphicError.
TyshkevichDecomposition decompose(const DegreeSequence& d);

/// Every way of writing d = p ∘ q with |p| >= 1, |q| >= 1; used to check
/// indecomposability and the minimality of the chosen outer piece.
struct OuterSplit {
    SplittedSequence outer;
    DegreeSequence rest;
};
std::vector<OuterSplit> outer_splits(const DegreeSequence& d);

bool is_decomposable(const DegreeSequence& d);

/// Unique labeled realization. Throws NotGraphicError.
bool is_threshold(const DegreeSequence& d);

enum class CompleteFamily {
    kHubAndLeaves,     // (n,2,1^(n))
    kCliqueAndPendant, // (n^(n),n-1,1)
};

std::string family_name(CompleteFamily f);
/// The family member for a given n.
DegreeSequence family_sequence(CompleteFamily f, int n);

/// Witness for d = t ∘ α ∘ t' where α is a member of one of the two families
/// and t, t' consist of single-term pieces (possibly none).
struct CompleteWitness {
    int n = 0;
    CompleteFamily family = CompleteFamily::kHubAndLeaves;
    TyshkevichDecomposition decomposition;
    /// Index of α among the pieces; components.size() means the tail.
    std::size_t alpha_index = 0;

    bool alpha_is_tail() const { return alpha_index == decomposition.components.size(); }
    std::vector<SplittedSequence> prefix() const;
    std::string alpha_string() const;
    /// t' as a degree sequence, absent when α is the tail.
    std::optional<DegreeSequence> suffix() const;
    std::string to_string() const;
};

/// Present iff G(d) is the complete graph K_n for some n >= 4.
/// Throws NotGraphicError.
std::optional<CompleteWitness> is_complete_realization_graph(const DegreeSequence& d);

} // namespace rgkit
