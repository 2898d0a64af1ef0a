#pragma once

#include "rgkit/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace rgkit {

/// Subsets I of {1,2,3,4} are bitmasks: bit k-1 set iff k is in I.
using RealizationSubset = unsigned;

inline constexpr RealizationSubset kAllFour = 0xF;

/// coeff_m * m + constant
struct OverlapEntry {
    int coeff_m = 0;
    int constant = 0;

    int at(int m) const { return coeff_m * m + constant; }
    /// "1", "0", "m-4"
    std::string to_string() const;

    friend bool operator==(const OverlapEntry&, const OverlapEntry&) = default;
};

/// One solution of the edge-overlap system for four pairwise-adjacent
/// realizations, symbolic in the common edge count m. values[I] is the
/// number of edges present in exactly the realizations of I.
struct OverlapSolution {
    std::array<OverlapEntry, 16> values{};

    const OverlapEntry& operator[](RealizationSubset s) const { return values[s]; }

    friend bool operator==(const OverlapSolution&, const OverlapSolution&) = default;
};

/// s_1..s_4, s_12..s_34, s_234, s_134, s_124, s_123, s_1234
const std::array<RealizationSubset, 15>& overlap_columns();
std::string subset_name(RealizationSubset s); // "s_124"

/// All {0,1} assignments to the fourteen proper subsets for which
/// s_1234 = m - c satisfies both families of equations (and c <= 4, so the
/// value is nonnegative whenever m >= 4). Ordered by orbit under relabeling
/// the four realizations, then by the realization singled out within an orbit.
std::vector<OverlapSolution> solve_overlap_system();

/// Drops solutions with s_ij = s_ik = 1 for distinct i, j, k.
std::vector<OverlapSolution> filter_overlap_solutions(const std::vector<OverlapSolution>& sols);

/// Index of the orbit (under permutations of the four realizations) that a
/// solution belongs to, numbered in table order.
std::vector<int> overlap_orbits(const std::vector<OverlapSolution>& sols);

struct OverlapCounts {
    int edge_count = 0;
    std::array<int, 16> by_subset{};

    bool matches(const OverlapSolution& s) const;
};

/// Throws MixedSequenceError when the degrees differ and
/// std::invalid_argument unless given four distinct graphs.
OverlapCounts measure_overlaps(const std::vector<LabeledGraph>& four);

/// Text table, orbit groups separated by rules.
std::string format_overlap_table(const std::vector<OverlapSolution>& sols);

} // namespace rgkit
