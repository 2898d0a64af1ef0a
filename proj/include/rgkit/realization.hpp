#pragma once

#include "rgkit/graph.hpp"

#include <cstddef>
#include <vector>

namespace rgkit {

inline constexpr std::size_t kDefaultRealizationLimit = 100000;

/// All labeled realizations of a sequence, where vertex i has degree d_i.
/// Members are distinct and sorted by canonical encoding.
struct RealizationSet {
    DegreeSequence sequence;
    std::vector<LabeledGraph> realizations;
};

/// Erdős–Gallai test.
bool is_graphic(const DegreeSequence& d);
/// Same test on an arbitrary (not necessarily sorted) list of residual degrees.
bool is_graphic_list(std::vector<int> terms);

/// Throws NotGraphicError, or LimitExceededError once more than `limit`
/// realizations have been produced.
RealizationSet enumerate_realizations(const DegreeSequence& d,
                                      std::size_t limit = kDefaultRealizationLimit);

/// Counts realizations, stopping at limit + 1.
std::size_t count_realizations(const DegreeSequence& d, std::size_t limit);

} // namespace rgkit
