// One line per acceptance criterion: "PASS <id> ..." or "FAIL <id> ...".
// Exit status is the number of failures.

#include "rgkit/clique.hpp"
#include "rgkit/dial.hpp"
#include "rgkit/overlap.hpp"
#include "rgkit/realization.hpp"
#include "rgkit/realization_graph.hpp"
#include "rgkit/sweep.hpp"
#include "rgkit/tyshkevich.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace rgkit;

namespace {

using Clock = std::chrono::steady_clock;

// Tolerances. Counts are exact; only wall-clock limits carry slack.
constexpr double kFastSeconds = 1.0;
constexpr int kCorpusVertices = 7;
constexpr std::size_t kCorpusRealizations = 500;
constexpr int kComplementVertices = 6;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.pass)
        ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (out.pass ? "PASS" : "FAIL") << " AC" << id << " " << title << " | " << out.detail << " | "
         << secs << "s";
    std::cout << line.str() << std::endl;
}

struct SweepTally {
    SweepSummary summary;
    std::size_t cases = 0;
    std::size_t applicable = 0; // records whose check had something to do
    std::string first_failure;
};

SweepTally sweep(int max_vertices, std::size_t cap, std::set<std::string> checks, std::vector<int> sizes = {4, 5, 6})
{
    SweepConfig cfg;
    cfg.max_vertices = max_vertices;
    cfg.max_realizations = cap;
    cfg.checks = std::move(checks);
    cfg.clique_sizes = std::move(sizes);
    SweepTally t;
    t.summary = run_sweep(cfg, [&](const SweepRecord& r) {
        t.cases += r.cases;
        if (r.cases > 0)
            ++t.applicable;
        if (r.status == SweepStatus::kFail && t.first_failure.empty())
            t.first_failure = to_json(r).dump();
    });
    return t;
}

std::string tally_text(const SweepTally& t)
{
    std::ostringstream os;
    os << "sequences=" << t.summary.sequences << " pass=" << t.summary.passed << " fail=" << t.summary.failed
       << " skipped=" << t.summary.skipped << " cases=" << t.cases;
    if (!t.first_failure.empty())
        os << " first=" << t.first_failure;
    return os.str();
}

// Rows of the overlap table: s_1..s_4, s_12..s_34, s_234, s_134, s_124,
// s_123, then c in s_1234 = m - c.
const std::array<std::array<int, 15>, 10> kTable{{
    {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 3},
    {0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 3},
    {1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 3},
    {1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 3},
    {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 3},
    {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 4},
    {0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 4},
    {0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 4},
    {0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 4},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 4},
}};

bool row_matches(const OverlapSolution& s, const std::array<int, 15>& row)
{
    const auto& cols = overlap_columns();
    for (std::size_t i = 0; i < 14; ++i)
        if (s[cols[i]].coeff_m != 0 || s[cols[i]].constant != row[i])
            return false;
    return s[kAllFour].coeff_m == 1 && s[kAllFour].constant == -row[14];
}

} // namespace

int main()
{
    report(1, "G((2,2,2,1,1)) has 7 nodes and degrees (6,4^(6))", [] {
        const auto start = Clock::now();
        const auto rg = build_realization_graph(DegreeSequence{2, 2, 2, 1, 1});
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::vector<int> degrees;
        for (auto d : rg.adjacency.degree_sequence())
            degrees.push_back(static_cast<int>(d));
        const auto text = DegreeSequence(degrees).to_run_length_string();
        return Outcome{rg.size() == 7 && text == "(6,4^(6))" && secs < kFastSeconds,
                       "nodes=" + std::to_string(rg.size()) + " degrees=" + text};
    });

    report(2, "G((1,1,1,1)) is K_3, no dial, each node has induced 2K_2", [] {
        const auto rg = build_realization_graph(DegreeSequence{1, 1, 1, 1});
        const bool k3 = rg.size() == 3 && rg.adjacency.is_complete();
        const bool no_dial = !verify_dial(rg.nodes).has_value();
        bool all_2k2 = true;
        for (const auto& r : rg.nodes)
            all_2k2 = all_2k2 && find_induced_two_k2(r).has_value();
        return Outcome{k3 && no_dial && all_2k2, std::string("K_3=") + (k3 ? "yes" : "no") +
                                                     " dial=" + (no_dial ? "absent" : "present") +
                                                     " 2K_2 in all=" + (all_2k2 ? "yes" : "no")};
    });

    report(3, "overlap system: 10 rows in table order, unique survivor", [] {
        const auto start = Clock::now();
        const auto sols = solve_overlap_system();
        const auto kept = filter_overlap_solutions(sols);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::size_t matching = 0;
        for (std::size_t r = 0; r < sols.size() && r < kTable.size(); ++r)
            matching += row_matches(sols[r], kTable[r]);
        const bool survivor = kept.size() == 1 && row_matches(kept.front(), kTable.back());
        return Outcome{sols.size() == 10 && matching == 10 && survivor && secs < kFastSeconds,
                       "solutions=" + std::to_string(sols.size()) + " rows matching=" + std::to_string(matching) +
                           " survivors=" + std::to_string(kept.size())};
    });

    report(4, "(n,2,1^(n)) and (n^(n),n-1,1) give K_n for n=4,5,6", [] {
        std::string detail;
        bool ok = true;
        for (int n = 4; n <= 6; ++n)
            for (auto family : {CompleteFamily::kHubAndLeaves, CompleteFamily::kCliqueAndPendant}) {
                const auto d = family_sequence(family, n);
                const auto rg = build_realization_graph(d);
                const auto w = is_complete_realization_graph(d);
                const bool good = rg.size() == static_cast<std::size_t>(n) && rg.adjacency.is_complete() && w &&
                                  w->n == n && w->family == family;
                ok = ok && good;
                detail += d.to_string() + (good ? ":K_" + std::to_string(n) + " " : ":bad ");
            }
        return Outcome{ok, detail};
    });

    report(5, "D_n containment equals oracle n-clique membership, n=4..6", [] {
        const auto t = sweep(kCorpusVertices, kCorpusRealizations, {"theorem-iff"});
        return Outcome{t.summary.failed == 0 && t.cases > 0, tally_text(t)};
    });

    report(6, "every oracle clique of size >= 4 has a dial; 4-cliques match the survivor", [] {
        const auto t = sweep(kCorpusVertices, kCorpusRealizations, {"clique-dial"});
        return Outcome{t.summary.failed == 0 && t.cases > 0,
                       tally_text(t) + " sequences with cliques=" + std::to_string(t.applicable)};
    });

    report(7, "2K_2 / C_4 / D_3 predicate equals oracle triangle membership", [] {
        const auto t = sweep(kCorpusVertices, kCorpusRealizations, {"triangle"});
        return Outcome{t.summary.failed == 0 && t.cases > 0, tally_text(t)};
    });

    report(8, "complement map is an isomorphism G(d) -> G(complement d), n <= 6", [] {
        const auto t = sweep(kComplementVertices, kDefaultRealizationLimit, {"complement"});
        return Outcome{t.summary.failed == 0 && t.summary.skipped == 0, tally_text(t)};
    });

    report(9, "G(d) is the product of its pieces' graphs (n <= 7 and the 10-vertex example)", [] {
        const auto t = sweep(kCorpusVertices, kDefaultRealizationLimit, {"product"});
        const DegreeSequence example{8, 8, 6, 5, 4, 3, 3, 3, 1, 1};
        const auto decomposition = decompose(example);
        const bool shape = decomposition.to_string() == "(2,2;1,1) ∘ (3,2;1,1,1) ∘ (0)";
        const auto check = check_product_theorem(example);
        return Outcome{t.summary.failed == 0 && t.summary.skipped == 0 && shape && check.holds,
                       tally_text(t) + " decomposable=" + std::to_string(t.applicable) +
                           " example=" + decomposition.to_string() + " nodes=" + std::to_string(check.node_count)};
    });

    report(10, "every realization graph built in the sweeps is connected", [] {
        const auto t = sweep(kCorpusVertices, kDefaultRealizationLimit, {"connectivity"});
        return Outcome{t.summary.failed == 0 && t.summary.skipped == 0, tally_text(t)};
    });

    report(11, "is_threshold equals having exactly one realization, n <= 7", [] {
        const auto t = sweep(kCorpusVertices, kDefaultRealizationLimit, {"threshold"});
        return Outcome{t.summary.failed == 0 && t.summary.skipped == 0, tally_text(t)};
    });

    return failures;
}
