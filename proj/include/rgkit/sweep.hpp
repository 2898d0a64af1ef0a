#pragma once

#include "rgkit/formats.hpp"
#include "rgkit/graph.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace rgkit {

/// connectivity, theorem-iff, triangle, clique-dial, complement, product,
/// threshold, complete
const std::vector<std::string>& sweep_check_names();

struct SweepConfig {
    int max_vertices = 6;
    std::size_t max_realizations = 500;
    std::vector<int> clique_sizes{4, 5, 6};
    std::set<std::string> checks;
    int min_vertices = 1;
    unsigned threads = 0; // 0: hardware concurrency
};

/// Throws std::invalid_argument: max_vertices in 4..kMaxVertices, clique
/// sizes in 2..8, known check names.
void validate(const SweepConfig& cfg);

/// Every graphic sequence with min_vertices..max_vertices terms, by length
/// and then in decreasing lexicographic order.
std::vector<DegreeSequence> graphic_sequences(int max_vertices, int min_vertices = 1);

enum class SweepStatus { kPass, kFail, kSkipped };
std::string to_string(SweepStatus s);

struct SweepRecord {
    DegreeSequence sequence;
    std::string check;
    SweepStatus status = SweepStatus::kPass;
    std::size_t realizations = 0;
    std::size_t cases = 0; // individual comparisons made
    Json detail = Json::object();
};

Json to_json(const SweepRecord& r);

struct SweepSummary {
    std::size_t sequences = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t cases = 0;

    bool ok() const { return failed == 0; }
};

Json to_json(const SweepSummary& s);

/// Runs the selected checks on every sequence. Records reach `sink` in
/// sequence order, then check order, whatever the thread count. Sequences
/// with more than max_realizations realizations yield skipped records for
/// the checks that need G(d).
SweepSummary run_sweep(const SweepConfig& cfg,
                       const std::function<void(const SweepRecord&)>& sink = {});

/// All records for a single sequence.
std::vector<SweepRecord> sweep_sequence(const DegreeSequence& d, const SweepConfig& cfg);

} // namespace rgkit
