#include "rgkit/graph.hpp"

#include "rgkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rgkit {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_vertex_count(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices));
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms))
{
    if (terms_.empty())
        throw std::invalid_argument("degree sequence must have at least one term");
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
    const int n = static_cast<int>(terms_.size());
    if (terms_.back() < 0)
        throw std::invalid_argument("degree sequence terms must be nonnegative");
    if (terms_.front() > n - 1)
        throw std::invalid_argument("degree sequence term " + std::to_string(terms_.front()) +
                                    " exceeds n - 1 = " + std::to_string(n - 1));
}

int DegreeSequence::sum() const noexcept
{
    return std::accumulate(terms_.begin(), terms_.end(), 0);
}

DegreeSequence DegreeSequence::complement() const
{
    const int n = static_cast<int>(terms_.size());
    std::vector<int> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.push_back(n - 1 - *it);
    return DegreeSequence(std::move(out));
}

std::string DegreeSequence::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < terms_.size(); ++i)
        os << (i ? "," : "") << terms_[i];
    os << ')';
    return os.str();
}

std::string DegreeSequence::to_run_length_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        os << (i ? "," : "") << terms_[i];
        if (j - i > 1)
            os << '^' << '(' << (j - i) << ')';
        i = j;
    }
    os << ')';
    return os.str();
}

LabeledGraph::LabeledGraph(int vertex_count)
{
    check_vertex_count(vertex_count);
    rows_.assign(static_cast<std::size_t>(vertex_count), 0);
}

LabeledGraph::LabeledGraph(int vertex_count, const std::vector<Edge>& edges)
    : LabeledGraph(vertex_count)
{
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("self-loops are not allowed");
        rows_[a] |= bit(b);
        rows_[b] |= bit(a);
    }
    rebuild_edges();
}

LabeledGraph::LabeledGraph(std::vector<std::uint64_t> rows, bool) : rows_(std::move(rows))
{
    rebuild_edges();
}

LabeledGraph LabeledGraph::from_rows(std::vector<std::uint64_t> rows)
{
    const int n = static_cast<int>(rows.size());
    check_vertex_count(n);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    for (Vertex a = 0; a < n; ++a) {
        if ((rows[a] & ~all) || (rows[a] & bit(a)))
            throw std::invalid_argument("adjacency row out of range or has a loop");
        for (Vertex b = 0; b < n; ++b)
            if (((rows[a] >> b) & 1U) != ((rows[b] >> a) & 1U))
                throw std::invalid_argument("adjacency rows are not symmetric");
    }
    return LabeledGraph(std::move(rows), true);
}

void LabeledGraph::rebuild_edges()
{
    edges_.clear();
    const int n = vertex_count();
    for (Vertex a = 0; a < n; ++a) {
        std::uint64_t higher = rows_[a] & ~((bit(a) << 1) - 1);
        while (higher) {
            const Vertex b = std::countr_zero(higher);
            edges_.emplace_back(a, b);
            higher &= higher - 1;
        }
    }
}

int LabeledGraph::degree(Vertex v) const
{
    return std::popcount(rows_[v]);
}

std::vector<int> LabeledGraph::degrees() const
{
    std::vector<int> out(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v)
        out[v] = std::popcount(rows_[v]);
    return out;
}

LabeledGraph LabeledGraph::induced(const std::vector<Vertex>& vertices) const
{
    const int k = static_cast<int>(vertices.size());
    std::vector<std::uint64_t> rows(vertices.size(), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && adjacent(vertices[i], vertices[j]))
                rows[i] |= bit(j);
    return from_rows(std::move(rows));
}

std::string LabeledGraph::edge_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        os << (i ? " " : "") << edges_[i].first + 1 << '-' << edges_[i].second + 1;
    return os.str();
}

std::strong_ordering operator<=>(const LabeledGraph& a, const LabeledGraph& b)
{
    if (auto c = a.vertex_count() <=> b.vertex_count(); c != 0)
        return c;
    return a.edges_ <=> b.edges_;
}

AlternatingFourCycle AlternatingFourCycle::canonical(Vertex u, Vertex v, Vertex w, Vertex x)
{
    return std::min({AlternatingFourCycle{u, v, w, x}, AlternatingFourCycle{w, x, u, v},
                     AlternatingFourCycle{v, u, x, w}, AlternatingFourCycle{x, w, v, u}});
}

bool AlternatingFourCycle::is_valid_in(const LabeledGraph& g) const
{
    const int n = g.vertex_count();
    for (Vertex a : {u, v, w, x})
        if (a < 0 || a >= n)
            return false;
    if (u == v || u == w || u == x || v == w || v == x || w == x)
        return false;
    return g.adjacent(u, v) && g.adjacent(w, x) && !g.adjacent(u, x) && !g.adjacent(v, w);
}

std::string AlternatingFourCycle::to_string() const
{
    std::ostringstream os;
    os << '[' << u + 1 << ',' << v + 1 << ':' << w + 1 << ',' << x + 1 << ']';
    return os.str();
}

DegreeSequence degree_sequence_of(const LabeledGraph& g)
{
    return DegreeSequence(g.degrees());
}

LabeledGraph complement(const LabeledGraph& g)
{
    const int n = g.vertex_count();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    std::vector<std::uint64_t> rows(g.rows());
    for (Vertex v = 0; v < n; ++v)
        rows[v] = ~rows[v] & all & ~bit(v);
    return LabeledGraph::from_rows(std::move(rows));
}

std::vector<AlternatingFourCycle> alternating_four_cycles(const LabeledGraph& g)
{
    std::set<AlternatingFourCycle> found;
    if (g.vertex_count() < 4)
        return {};
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                continue;
            // uv = ab, wx in both orientations; the other orientations of ab
            // are covered by the canonical quotient.
            for (auto [w, x] : {Edge{c, d}, Edge{d, c}})
                if (!g.adjacent(a, x) && !g.adjacent(b, w))
                    found.insert(AlternatingFourCycle::canonical(a, b, w, x));
        }
    }
    return {found.begin(), found.end()};
}

bool has_alternating_four_cycle(const LabeledGraph& g)
{
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                continue;
            if ((!g.adjacent(a, d) && !g.adjacent(b, c)) || (!g.adjacent(a, c) && !g.adjacent(b, d)))
                return true;
        }
    return false;
}

LabeledGraph two_switch(const LabeledGraph& g, const AlternatingFourCycle& c)
{
    if (!c.is_valid_in(g))
        throw InvalidCycleError(c.to_string() + " is not an alternating 4-cycle of the graph");
    std::vector<std::uint64_t> rows(g.rows());
    auto toggle = [&rows](Vertex a, Vertex b) {
        rows[a] ^= bit(b);
        rows[b] ^= bit(a);
    };
    toggle(c.u, c.v);
    toggle(c.w, c.x);
    toggle(c.u, c.x);
    toggle(c.v, c.w);
    return LabeledGraph::from_rows(std::move(rows));
}

std::optional<AlternatingFourCycle> switch_between(const LabeledGraph& from, const LabeledGraph& to)
{
    const int n = from.vertex_count();
    if (n != to.vertex_count() || n < 4)
        return std::nullopt;

    std::vector<Edge> removed;
    std::vector<Edge> added;
    int differing = 0;
    for (Vertex a = 0; a < n; ++a)
        differing += std::popcount(from.neighbourhood(a) ^ to.neighbourhood(a));
    if (differing != 8)
        return std::nullopt;

    for (Vertex a = 0; a < n; ++a) {
        std::uint64_t diff = (from.neighbourhood(a) ^ to.neighbourhood(a)) & ~((bit(a) << 1) - 1);
        while (diff) {
            const Vertex b = std::countr_zero(diff);
            diff &= diff - 1;
            (from.adjacent(a, b) ? removed : added).emplace_back(a, b);
        }
    }
    if (removed.size() != 2 || added.size() != 2)
        return std::nullopt;

    const auto [p, q] = removed[0];
    const auto [r, s] = removed[1];
    if (p == r || p == s || q == r || q == s)
        return std::nullopt;

    auto as_set = [](Edge a, Edge b) {
        auto norm = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
        std::set<Edge> out{norm(a), norm(b)};
        return out;
    };
    const std::set<Edge> got(added.begin(), added.end());
    if (got == as_set({p, s}, {q, r}))
        return AlternatingFourCycle::canonical(p, q, r, s);
    if (got == as_set({p, r}, {q, s}))
        return AlternatingFourCycle::canonical(p, q, s, r);
    return std::nullopt;
}

LabeledGraph reverse_labels(const LabeledGraph& g)
{
    const int n = g.vertex_count();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : g.edges()) {
        rows[n - 1 - a] |= bit(n - 1 - b);
        rows[n - 1 - b] |= bit(n - 1 - a);
    }
    return LabeledGraph::from_rows(std::move(rows));
}

} // namespace rgkit
