#include "rgkit/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rgkit {

std::string to_string(TriangleCase c)
{
    switch (c) {
    case TriangleCase::kTwoK2: return "2K_2";
    case TriangleCase::kC4: return "C_4";
    case TriangleCase::kD3: return "D_3";
    }
    return "?";
}

std::string describe(const CliqueWitness& w)
{
    std::ostringstream os;
    if (const auto* c = std::get_if<AlternatingFourCycle>(&w)) {
        os << "alternating 4-cycle " << c->to_string();
    } else if (const auto* q = std::get_if<InducedQuad>(&w)) {
        os << "induced " << to_string(q->kind) << " on {";
        for (std::size_t i = 0; i < 4; ++i)
            os << (i ? "," : "") << q->vertices[i] + 1;
        os << '}';
    } else {
        const auto& e = std::get<DialEmbedding>(w);
        os << "D_" << e.size_n() << " with hubs u=" << e.hub_u + 1 << " v=" << e.hub_v + 1
           << " needle=" << e.needle_spoke + 1;
    }
    return os.str();
}

namespace {

// 2K_2 is the 1-regular graph on four vertices, C_4 the 2-regular one.
std::optional<InducedQuad> find_induced_quad(const LabeledGraph& r, TriangleCase kind)
{
    const int n = r.vertex_count();
    const int want_edges = kind == TriangleCase::kTwoK2 ? 2 : 4;
    const int want_degree = kind == TriangleCase::kTwoK2 ? 1 : 2;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const std::uint64_t quad = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                               (std::uint64_t{1} << c) | (std::uint64_t{1} << d);
                    int edges = 0;
                    bool regular = true;
                    for (Vertex x : {a, b, c, d}) {
                        const int deg = std::popcount(r.neighbourhood(x) & quad);
                        regular = regular && deg == want_degree;
                        edges += deg;
                    }
                    if (regular && edges / 2 == want_edges)
                        return InducedQuad{kind, {a, b, c, d}};
                }
    return std::nullopt;
}

// Vertices listed in order of decreasing degree (stable), so the relabeled
// graph is a positional realization of its own degree sequence.
LabeledGraph sorted_by_degree(const LabeledGraph& r)
{
    const auto degrees = r.degrees();
    std::vector<Vertex> order(degrees.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return degrees[a] > degrees[b]; });
    return r.induced(order);
}

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<std::vector<std::uint64_t>> adj)
        : adj_(std::move(adj)), words_(adj_.empty() ? 0 : adj_.front().size()) {}

    std::vector<std::size_t> run()
    {
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t v = 0; v < adj_.size(); ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> current;
        expand(current, all);
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> candidates)
    {
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        colour_sort(candidates, order, colour);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + colour[k] <= best_.size())
                return;
            const std::size_t v = order[k];
            current.push_back(v);
            std::vector<std::uint64_t> next(words_);
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = candidates[w] & adj_[v][w];
                any = any || next[w];
            }
            if (!any) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    // Greedy sequential colouring; colour[k] bounds the clique size within
    // order[0..k].
    void colour_sort(const std::vector<std::uint64_t>& candidates, std::vector<std::size_t>& order,
                     std::vector<std::size_t>& colour) const
    {
        std::vector<std::uint64_t> uncoloured(candidates);
        std::size_t c = 0;
        auto empty = [](const std::vector<std::uint64_t>& s) {
            return std::all_of(s.begin(), s.end(), [](std::uint64_t x) { return x == 0; });
        };
        while (!empty(uncoloured)) {
            ++c;
            std::vector<std::uint64_t> q(uncoloured);
            while (!empty(q)) {
                std::size_t w = 0;
                while (q[w] == 0)
                    ++w;
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
                for (std::size_t i = 0; i < words_; ++i)
                    q[i] &= ~adj_[v][i];
                q[w] &= ~(std::uint64_t{1} << (v % 64));
                order.push_back(v);
                colour.push_back(c);
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> adj_;
    std::size_t words_;
    std::vector<std::size_t> best_;
};

} // namespace

std::optional<InducedQuad> find_induced_two_k2(const LabeledGraph& r)
{
    return find_induced_quad(r, TriangleCase::kTwoK2);
}

std::optional<InducedQuad> find_induced_c4(const LabeledGraph& r)
{
    return find_induced_quad(r, TriangleCase::kC4);
}

std::optional<CliqueWitness> triangle_witness(const LabeledGraph& r)
{
    if (auto q = find_induced_two_k2(r))
        return CliqueWitness{*q};
    if (auto q = find_induced_c4(r))
        return CliqueWitness{*q};
    if (auto e = find_dial_embedding(r, 3))
        return CliqueWitness{*e};
    return std::nullopt;
}

std::optional<CliqueWitness> in_clique(const LabeledGraph& r, int n)
{
    if (n < 2)
        throw std::invalid_argument("clique size must be at least 2");
    if (n == 2) {
        const auto cycles = alternating_four_cycles(r);
        if (cycles.empty())
            return std::nullopt;
        return CliqueWitness{cycles.front()};
    }
    if (n == 3)
        return triangle_witness(r);
    if (auto e = find_dial_embedding(r, n))
        return CliqueWitness{*e};
    return std::nullopt;
}

CliqueReport clique_number_of_realization(const LabeledGraph& r)
{
    CliqueReport report{r, 1, std::nullopt, std::nullopt};
    if (const int dial = max_dial_size(r); dial >= 4) {
        report.clique_number_predicted = dial;
        report.witness = CliqueWitness{*find_dial_embedding(r, dial)};
    } else if (auto t = triangle_witness(r)) {
        report.clique_number_predicted = 3;
        report.witness = t;
    } else if (auto c = in_clique(r, 2)) {
        report.clique_number_predicted = 2;
        report.witness = c;
    }
    return report;
}

std::vector<std::size_t> oracle_max_clique_through(const AdjacencyGraph& g, std::size_t node)
{
    const auto& around = g.neighbours(node);
    const std::size_t k = around.size();
    const std::size_t words = (k + 63) / 64;
    std::vector<std::vector<std::uint64_t>> local(k, std::vector<std::uint64_t>(std::max<std::size_t>(words, 1), 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.adjacent(around[i], around[j])) {
                local[i][j / 64] |= std::uint64_t{1} << (j % 64);
                local[j][i / 64] |= std::uint64_t{1} << (i % 64);
            }
    std::vector<std::size_t> clique{node};
    if (k > 0)
        for (std::size_t i : MaxCliqueSearch(std::move(local)).run())
            clique.push_back(around[i]);
    std::sort(clique.begin(), clique.end());
    return clique;
}

int oracle_clique_number(const RealizationGraph& rg, std::size_t node)
{
    return static_cast<int>(oracle_max_clique_through(rg.adjacency, node).size());
}

CliqueReport verified_clique_report(const LabeledGraph& r, std::size_t limit)
{
    const auto positional = sorted_by_degree(r);
    auto report = clique_number_of_realization(r);
    const auto rg = build_realization_graph(degree_sequence_of(positional), limit);
    const auto node = rg.index_of(positional);
    if (!node)
        throw std::logic_error("realization missing from its own realization graph");
    report.clique_number_oracle = oracle_clique_number(rg, *node);
    return report;
}

} // namespace rgkit
