#include "rgkit/dial.hpp"

#include "rgkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rgkit {

namespace {

std::vector<Vertex> members(std::uint64_t mask)
{
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Spokes available to (u, v, needle): adjacent to v, not to u.
std::uint64_t spoke_candidates(const LabeledGraph& r, Vertex u, Vertex v, Vertex needle)
{
    return r.neighbourhood(v) & ~r.neighbourhood(u) & ~(bit(u) | bit(v) | bit(needle));
}

} // namespace

bool DialEmbedding::is_valid_in(const LabeledGraph& r) const
{
    const int n = r.vertex_count();
    std::vector<Vertex> all{hub_u, hub_v, needle_spoke};
    all.insert(all.end(), other_spokes.begin(), other_spokes.end());
    for (Vertex x : all)
        if (x < 0 || x >= n)
            return false;
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (!r.adjacent(hub_u, needle_spoke) || r.adjacent(hub_v, needle_spoke))
        return false;
    return std::all_of(other_spokes.begin(), other_spokes.end(), [&](Vertex s) {
        return r.adjacent(hub_v, s) && !r.adjacent(hub_u, s);
    });
}

std::optional<DialEmbedding> find_dial_embedding(const LabeledGraph& r, int n)
{
    if (n < 2)
        throw std::invalid_argument("dial size must be at least 2");
    const int order = r.vertex_count();
    if (order < n + 2)
        return std::nullopt;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = 0; v < order; ++v) {
            if (u == v)
                continue;
            for (Vertex needle : members(r.neighbourhood(u) & ~r.neighbourhood(v) & ~bit(v))) {
                auto spokes = members(spoke_candidates(r, u, v, needle));
                if (static_cast<int>(spokes.size()) < n - 1)
                    continue;
                spokes.resize(static_cast<std::size_t>(n - 1));
                return DialEmbedding{u, v, needle, std::move(spokes)};
            }
        }
    return std::nullopt;
}

int max_dial_size(const LabeledGraph& r)
{
    const int order = r.vertex_count();
    int best = 0;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = 0; v < order; ++v) {
            if (u == v)
                continue;
            for (Vertex needle : members(r.neighbourhood(u) & ~r.neighbourhood(v) & ~bit(v)))
                best = std::max(best, 1 + std::popcount(spoke_candidates(r, u, v, needle)));
        }
    return best >= 2 ? best : 0;
}

std::optional<Dial> verify_dial(const std::vector<LabeledGraph>& family)
{
    if (family.size() < 2)
        throw std::invalid_argument("a dial needs at least two realizations");
    const auto& first = family.front();
    const auto degrees = first.degrees();
    for (const auto& g : family)
        if (g.vertex_count() != first.vertex_count() || g.degrees() != degrees)
            throw MixedSequenceError("realizations do not share one degree sequence");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j])
                throw std::invalid_argument("realizations must be pairwise distinct");

    // (a): P is every pair whose status is not constant over the family
    const int n = first.vertex_count();
    std::vector<std::uint64_t> varying(static_cast<std::size_t>(n), 0);
    for (const auto& g : family)
        for (Vertex a = 0; a < n; ++a)
            varying[a] |= g.neighbourhood(a) ^ first.neighbourhood(a);
    std::uint64_t w_mask = 0;
    std::vector<Edge> p;
    for (Vertex a = 0; a < n; ++a) {
        if (varying[a])
            w_mask |= bit(a);
        for (Vertex b : members(varying[a]))
            if (a < b)
                p.emplace_back(a, b);
    }
    const auto w = members(w_mask);
    if (w.size() < 4)
        return std::nullopt;

    for (Vertex u : w)
        for (Vertex v : w) {
            if (u == v)
                continue;
            // (b): P is exactly {uw, vw : w in W \ {u, v}}
            const std::uint64_t spokes = w_mask & ~(bit(u) | bit(v));
            bool shape = p.size() == 2 * (w.size() - 2);
            for (Vertex a = 0; a < n && shape; ++a) {
                std::uint64_t expected = 0;
                if (a == u || a == v)
                    expected = spokes;
                else if ((spokes >> a) & 1U)
                    expected = bit(u) | bit(v);
                shape = varying[a] == expected;
            }
            if (!shape)
                continue;

            // (c): in each realization u has exactly one spoke neighbour (the
            // needle) and v is adjacent to exactly the other spokes
            Dial dial{family, w, p, u, v, {}};
            bool ok = true;
            for (std::size_t i = 0; i < family.size() && ok; ++i) {
                const std::uint64_t u_side = family[i].neighbourhood(u) & spokes;
                if (std::popcount(u_side) != 1) {
                    ok = false;
                    break;
                }
                ok = (family[i].neighbourhood(v) & spokes) == (spokes & ~u_side);
                dial.needle_of[i] = std::countr_zero(u_side);
            }
            if (ok)
                return dial;
        }
    return std::nullopt;
}

std::vector<LabeledGraph> dial_clique(const LabeledGraph& r, const DialEmbedding& e)
{
    if (!e.is_valid_in(r))
        throw InvalidEmbeddingError("dial embedding is not valid in the realization");
    std::vector<LabeledGraph> out{r};
    for (Vertex s : e.other_spokes)
        out.push_back(two_switch(r, AlternatingFourCycle{e.hub_u, e.needle_spoke, e.hub_v, s}));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!switch_between(out[i], out[j]))
                throw std::logic_error("dial rotations are not pairwise one 2-switch apart");
    return out;
}

bool is_matrogenic(const LabeledGraph& r)
{
    return !find_dial_embedding(r, 3).has_value();
}

} // namespace rgkit
