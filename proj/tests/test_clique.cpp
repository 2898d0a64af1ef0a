#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rgkit/clique.hpp"
#include "rgkit/errors.hpp"
#include "rgkit/overlap.hpp"

#include <map>
#include <random>

using namespace rgkit;

namespace {

// The ten rows, columns s_1 s_2 s_3 s_4 s_12 s_13 s_14 s_23 s_24 s_34
// s_234 s_134 s_124 s_123, then the constant c in s_1234 = m - c.
const std::vector<std::array<int, 15>> kTable{{
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

std::array<int, 15> row_of(const OverlapSolution& s)
{
    std::array<int, 15> out{};
    const auto& cols = overlap_columns();
    for (std::size_t i = 0; i < 14; ++i) {
        CHECK(s[cols[i]].coeff_m == 0);
        out[i] = s[cols[i]].constant;
    }
    CHECK(s[kAllFour].coeff_m == 1);
    out[14] = -s[kAllFour].constant;
    return out;
}

// |edges in exactly the graphs of I| by set arithmetic.
std::array<int, 16> venn(const std::vector<LabeledGraph>& four)
{
    std::array<int, 16> out{};
    std::set<Edge> all;
    for (const auto& g : four)
        for (const auto& e : g.edges())
            all.insert(e);
    for (const auto& e : all) {
        unsigned mask = 0;
        for (unsigned i = 0; i < 4; ++i)
            if (oracle::edge_set(four[i]).count(e))
                mask |= 1U << i;
        ++out[mask];
    }
    return out;
}

} // namespace

TEST_CASE("overlap system reproduces the ten-row table in order")
{
    const auto sols = solve_overlap_system();
    REQUIRE(sols.size() == kTable.size());
    for (std::size_t r = 0; r < sols.size(); ++r) {
        CAPTURE(r);
        CHECK(row_of(sols[r]) == kTable[r]);
    }
    CHECK(overlap_orbits(sols) == std::vector<int>{0, 1, 1, 1, 1, 2, 2, 2, 2, 3});
}

TEST_CASE("every solution satisfies both equation families for a range of m")
{
    for (const auto& s : solve_overlap_system())
        for (int m = 4; m <= 9; ++m) {
            for (int i = 0; i < 4; ++i) {
                int total = 0;
                for (unsigned set = 1; set <= kAllFour; ++set)
                    if ((set >> i) & 1U)
                        total += s[set].at(m);
                CHECK(total == m);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    int only = 0;
                    for (unsigned set = 1; set <= kAllFour; ++set)
                        if (((set >> i) & 1U) && !((set >> j) & 1U))
                            only += s[set].at(m);
                    CHECK(only == 2);
                }
        }
}

TEST_CASE("the filter leaves only the last row")
{
    const auto sols = solve_overlap_system();
    const auto kept = filter_overlap_solutions(sols);
    REQUIRE(kept.size() == 1);
    CHECK(row_of(kept.front()) == kTable.back());
    CHECK(filter_overlap_solutions(kept) == kept);
    CHECK(filter_overlap_solutions({}).empty());
}

TEST_CASE("overlap entry text and column names")
{
    CHECK(OverlapEntry{1, -4}.to_string() == "m-4");
    CHECK(OverlapEntry{0, 1}.to_string() == "1");
    CHECK(OverlapEntry{1, 0}.to_string() == "m");
    CHECK(subset_name(0b1011) == "s_124");
    CHECK(subset_name(kAllFour) == "s_1234");
    const auto text = format_overlap_table(solve_overlap_system());
    CHECK(text.find("s_1    s_2") == 0);
    CHECK(text.find("m-3") != std::string::npos);
}

TEST_CASE("measured overlaps of the four realizations of (4,2,1,1,1,1)")
{
    const auto rg = build_realization_graph(DegreeSequence{4, 2, 1, 1, 1, 1});
    REQUIRE(rg.size() == 4);
    const auto counts = measure_overlaps(rg.nodes);
    CHECK(counts.edge_count == 5);
    CHECK(counts.by_subset == venn(rg.nodes));
    for (unsigned set = 1; set < kAllFour; ++set)
        CHECK(counts.by_subset[set] == (std::popcount(set) == 2 ? 0 : 1));
    CHECK(counts.by_subset[kAllFour] == 1);
    CHECK(counts.matches(filter_overlap_solutions(solve_overlap_system()).front()));

    CHECK_THROWS_AS(measure_overlaps({rg.nodes[0], rg.nodes[0], rg.nodes[1], rg.nodes[2]}), std::invalid_argument);
    CHECK_THROWS_AS(measure_overlaps({rg.nodes[0], rg.nodes[1], rg.nodes[2]}), std::invalid_argument);
    CHECK_THROWS_AS(measure_overlaps({rg.nodes[0], rg.nodes[1], rg.nodes[2], LabeledGraph(6)}), MixedSequenceError);
}

TEST_CASE("induced 2K_2 and C_4")
{
    const LabeledGraph matching(4, {{0, 1}, {2, 3}});
    CHECK(find_induced_two_k2(matching).has_value());
    CHECK_FALSE(find_induced_c4(matching).has_value());
    const LabeledGraph square(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(find_induced_c4(square).has_value());
    CHECK_FALSE(find_induced_two_k2(square).has_value());
    const LabeledGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(find_induced_c4(path).has_value());
    CHECK_FALSE(find_induced_two_k2(path).has_value());

    const auto w = triangle_witness(matching);
    REQUIRE(w.has_value());
    CHECK(std::get<InducedQuad>(*w).kind == TriangleCase::kTwoK2);
    CHECK(describe(*w) == "induced 2K_2 on {1,2,3,4}");
}

TEST_CASE("oracle clique search agrees with subset enumeration")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + trial % 12;
        AdjacencyGraph g(n);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        std::bernoulli_distribution coin(0.3 + 0.5 * (trial % 5) / 4.0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (coin(rng)) {
                    g.add_edge(a, b);
                    adj[a][b] = adj[b][a] = true;
                }
        for (std::size_t v = 0; v < n; ++v) {
            const auto clique = oracle_max_clique_through(g, v);
            CHECK(clique.size() == oracle::max_clique_through(adj, v));
            CHECK(std::find(clique.begin(), clique.end(), v) != clique.end());
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t b = a + 1; b < clique.size(); ++b)
                    CHECK(adj[clique[a]][clique[b]]);
        }
    }
}

TEST_CASE("clique membership matches G(d) up to six vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& terms : oracle::nonincreasing_lists(n)) {
            const auto nodes = oracle::realizations(terms);
            if (nodes.empty())
                continue;
            const auto adj = oracle::realization_graph(nodes);
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const auto omega = oracle::max_clique_through(adj, i);
                for (int k = 2; k <= 6; ++k) {
                    CAPTURE(nodes[i].edge_string());
                    CAPTURE(k);
                    CHECK(in_clique(nodes[i], k).has_value() == (omega >= static_cast<std::size_t>(k)));
                }
            }
        }
}

TEST_CASE("clique number reports")
{
    const LabeledGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}});
    const auto report = verified_clique_report(star);
    CHECK(report.clique_number_predicted == 4);
    REQUIRE(report.clique_number_oracle.has_value());
    CHECK(*report.clique_number_oracle == 4);
    CHECK(std::holds_alternative<DialEmbedding>(*report.witness));

    const auto lone = clique_number_of_realization(LabeledGraph(3, {{0, 1}}));
    CHECK(lone.clique_number_predicted == 1);
    CHECK_FALSE(lone.witness.has_value());

    const auto rg = build_realization_graph(DegreeSequence{2, 2, 2, 1, 1});
    for (std::size_t i = 0; i < rg.size(); ++i)
        CHECK(clique_number_of_realization(rg.nodes[i]).clique_number_predicted == oracle_clique_number(rg, i));
    CHECK(oracle_clique_number(build_realization_graph(DegreeSequence{0}), 0) == 1);
    CHECK_THROWS_AS(in_clique(star, 1), std::invalid_argument);
}
