#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the LabeledGraph container and are only usable at small n.

#include "rgkit/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rgkit::Edge;
using rgkit::LabeledGraph;
using rgkit::Vertex;

inline std::vector<Edge> all_pairs(int n)
{
    std::vector<Edge> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            out.emplace_back(a, b);
    return out;
}

inline LabeledGraph graph_from_mask(int n, std::uint64_t mask)
{
    const auto pairs = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U)
            edges.push_back(pairs[i]);
    return LabeledGraph(n, edges);
}

inline std::set<Edge> edge_set(const LabeledGraph& g)
{
    return {g.edges().begin(), g.edges().end()};
}

inline bool has_edge(const std::set<Edge>& e, Vertex a, Vertex b)
{
    return e.count({std::min(a, b), std::max(a, b)}) > 0;
}

/// Every labeled graph on n vertices whose vertex i has degree terms[i],
/// found by scanning all 2^(n choose 2) graphs. n <= 6.
inline std::vector<LabeledGraph> realizations(const std::vector<int>& terms)
{
    const int n = static_cast<int>(terms.size());
    const auto pairs = all_pairs(n);
    std::vector<LabeledGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
            }
        if (deg == terms)
            out.push_back(graph_from_mask(n, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All nonincreasing lists of length n with terms in 0..n-1.
inline std::vector<std::vector<int>> nonincreasing_lists(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int cap) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int t = cap; t >= 0; --t) {
            cur.push_back(t);
            self(self, t);
            cur.pop_back();
        }
    };
    rec(rec, n - 1);
    return out;
}

/// Ordered quadruples (u,v,w,x) of distinct vertices with uv, wx edges and
/// ux, vw non-edges, reduced to the least of their four equivalent orderings.
inline std::set<std::array<Vertex, 4>> alternating_cycles(const LabeledGraph& g)
{
    const auto e = edge_set(g);
    const int n = g.vertex_count();
    std::set<std::array<Vertex, 4>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = 0; w < n; ++w)
                for (Vertex x = 0; x < n; ++x) {
                    const std::set<Vertex> distinct{u, v, w, x};
                    if (distinct.size() != 4)
                        continue;
                    if (has_edge(e, u, v) && has_edge(e, w, x) && !has_edge(e, u, x) && !has_edge(e, v, w)) {
                        std::array<std::array<Vertex, 4>, 4> forms{{{u, v, w, x}, {w, x, u, v}, {v, u, x, w}, {x, w, v, u}}};
                        out.insert(*std::min_element(forms.begin(), forms.end()));
                    }
                }
    return out;
}

/// True iff the edge sets differ by exactly one 2-switch: two edges leave and
/// two edges arrive, and they form an alternating 4-cycle.
inline bool one_switch_apart(const LabeledGraph& a, const LabeledGraph& b)
{
    const auto ea = edge_set(a);
    const auto eb = edge_set(b);
    std::vector<Edge> gone;
    std::vector<Edge> added;
    std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(gone));
    std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(added));
    if (gone.size() != 2 || added.size() != 2)
        return false;
    std::set<Vertex> vs{gone[0].first, gone[0].second, gone[1].first, gone[1].second};
    if (vs.size() != 4)
        return false;
    auto pair = [](Vertex x, Vertex y) { return Edge{std::min(x, y), std::max(x, y)}; };
    const auto [a0, b0] = gone[0];
    const auto [a1, b1] = gone[1];
    std::set<Edge> got{added[0], added[1]};
    return got == std::set<Edge>{pair(a0, a1), pair(b0, b1)} || got == std::set<Edge>{pair(a0, b1), pair(b0, a1)};
}

/// Adjacency matrix of G(d) built from pairwise edge-set comparison.
inline std::vector<std::vector<bool>> realization_graph(const std::vector<LabeledGraph>& nodes)
{
    std::vector<std::vector<bool>> adj(nodes.size(), std::vector<bool>(nodes.size(), false));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            adj[i][j] = adj[j][i] = one_switch_apart(nodes[i], nodes[j]);
    return adj;
}

/// Largest clique containing `node`, by trying every subset of its
/// neighbourhood. Neighbourhoods above 20 nodes are not supported.
inline std::size_t max_clique_through(const std::vector<std::vector<bool>>& adj, std::size_t node)
{
    std::vector<std::size_t> around;
    for (std::size_t j = 0; j < adj.size(); ++j)
        if (adj[node][j])
            around.push_back(j);
    std::size_t best = 1;
    for (std::uint32_t mask = 1; mask < (1U << around.size()); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t b = 0; b < around.size(); ++b)
            if ((mask >> b) & 1U)
                pick.push_back(around[b]);
        bool clique = true;
        for (std::size_t a = 0; a < pick.size() && clique; ++a)
            for (std::size_t b = a + 1; b < pick.size() && clique; ++b)
                clique = adj[pick[a]][pick[b]];
        if (clique)
            best = std::max(best, pick.size() + 1);
    }
    return best;
}

/// D_n by trying every injective placement of hubs u, v, the needle and an
/// (n-1)-set of other spokes.
inline bool contains_dial(const LabeledGraph& g, int n)
{
    const int size = g.vertex_count();
    const auto e = edge_set(g);
    for (Vertex u = 0; u < size; ++u)
        for (Vertex v = 0; v < size; ++v)
            for (Vertex needle = 0; needle < size; ++needle) {
                if (u == v || u == needle || v == needle)
                    continue;
                if (!has_edge(e, u, needle) || has_edge(e, v, needle))
                    continue;
                std::vector<Vertex> rest;
                for (Vertex s = 0; s < size; ++s)
                    if (s != u && s != v && s != needle)
                        rest.push_back(s);
                for (std::uint32_t mask = 0; mask < (1U << rest.size()); ++mask) {
                    if (std::popcount(mask) != n - 1)
                        continue;
                    bool ok = true;
                    for (std::size_t b = 0; b < rest.size() && ok; ++b)
                        if ((mask >> b) & 1U)
                            ok = has_edge(e, v, rest[b]) && !has_edge(e, u, rest[b]);
                    if (ok)
                        return true;
                }
            }
    return false;
}

/// A split graph with the given clique-side and independent-side degrees, by
/// trying every bipartite pattern between the two sides.
inline bool split_realizable(const std::vector<int>& clique, const std::vector<int>& independent)
{
    const std::size_t a = clique.size();
    const std::size_t b = independent.size();
    const std::size_t cells = a * b;
    if (cells > 20)
        return false;
    for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < a && ok; ++i) {
            int cross = 0;
            for (std::size_t j = 0; j < b; ++j)
                cross += (mask >> (i * b + j)) & 1U;
            ok = cross + static_cast<int>(a) - 1 == clique[i];
        }
        for (std::size_t j = 0; j < b && ok; ++j) {
            int cross = 0;
            for (std::size_t i = 0; i < a; ++i)
                cross += (mask >> (i * b + j)) & 1U;
            ok = cross == independent[j];
        }
        if (ok)
            return true;
    }
    return false;
}

inline LabeledGraph random_graph(int n, double p, std::mt19937& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng))
                edges.emplace_back(a, b);
    return LabeledGraph(n, edges);
}

/// Vertices relabeled so that degrees are nonincreasing (stable).
inline LabeledGraph positional(const LabeledGraph& g)
{
    const auto deg = g.degrees();
    std::vector<Vertex> order(deg.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    std::vector<Vertex> where(deg.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        where[order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        edges.emplace_back(std::min(where[a], where[b]), std::max(where[a], where[b]));
    return LabeledGraph(g.vertex_count(), edges);
}

inline bool connected(const std::vector<std::vector<bool>>& adj)
{
    if (adj.empty())
        return true;
    std::vector<bool> seen(adj.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (std::size_t w = 0; w < adj.size(); ++w)
            if (adj[v][w] && !seen[w]) {
                seen[w] = true;
                ++count;
                q.push(w);
            }
    }
    return count == adj.size();
}

} // namespace oracle
