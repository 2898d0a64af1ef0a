#include "rgkit/realization_graph.hpp"

#include "rgkit/tyshkevich.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace rgkit {

void AdjacencyGraph::add_edge(std::size_t a, std::size_t b)
{
    if (a == b || a >= order() || b >= order())
        throw std::invalid_argument("invalid edge for adjacency graph");
    auto insert = [](std::vector<std::size_t>& list, std::size_t v) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v)
            return false;
        list.insert(it, v);
        return true;
    };
    if (insert(adj_[a], b)) {
        insert(adj_[b], a);
        ++edge_count_;
    }
}

bool AdjacencyGraph::adjacent(std::size_t a, std::size_t b) const
{
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::size_t> AdjacencyGraph::degree_sequence() const
{
    std::vector<std::size_t> out;
    out.reserve(order());
    for (const auto& list : adj_)
        out.push_back(list.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> AdjacencyGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b : adj_[a])
            if (a < b)
                out.emplace_back(a, b);
    return out;
}

bool AdjacencyGraph::is_complete() const
{
    const std::size_t n = order();
    return edge_count_ == n * (n - (n ? 1 : 0)) / 2;
}

bool AdjacencyGraph::is_connected() const
{
    if (order() <= 1)
        return true;
    std::vector<bool> seen(order(), false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const auto v = frontier.front();
        frontier.pop();
        for (auto w : adj_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
    }
    return reached == order();
}

bool is_isomorphism(const AdjacencyGraph& a, const AdjacencyGraph& b,
                    const std::vector<std::size_t>& mapping)
{
    if (a.order() != b.order() || mapping.size() != a.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<bool> hit(b.order(), false);
    for (auto image : mapping) {
        if (image >= b.order() || hit[image])
            return false;
        hit[image] = true;
    }
    // a bijection that maps every edge to an edge, with equal edge counts,
    // also maps non-edges to non-edges
    for (auto [x, y] : a.edges())
        if (!b.adjacent(mapping[x], mapping[y]))
            return false;
    return true;
}

std::optional<std::size_t> RealizationGraph::index_of(const LabeledGraph& g) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), g);
    if (it == nodes.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

RealizationGraph build_realization_graph(RealizationSet realizations)
{
    RealizationGraph rg{std::move(realizations.sequence), std::move(realizations.realizations),
                        AdjacencyGraph(0)};
    const std::size_t n = rg.nodes.size();
    rg.adjacency = AdjacencyGraph(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto witness = switch_between(rg.nodes[i], rg.nodes[j]);
            if (!witness)
                continue;
            if (!(two_switch(rg.nodes[i], *witness) == rg.nodes[j]))
                throw std::logic_error("2-switch witness " + witness->to_string() +
                                       " does not reproduce the adjacent realization");
            rg.adjacency.add_edge(i, j);
        }
    return rg;
}

RealizationGraph build_realization_graph(const DegreeSequence& d, std::size_t limit)
{
    return build_realization_graph(enumerate_realizations(d, limit));
}

bool is_connected(const RealizationGraph& rg)
{
    return rg.adjacency.is_connected();
}

ComplementIsomorphism complement_isomorphism(const DegreeSequence& d, std::size_t limit)
{
    ComplementIsomorphism out{build_realization_graph(d, limit),
                              build_realization_graph(d.complement(), limit),
                              {}};
    out.mapping.reserve(out.graph.size());
    for (const auto& node : out.graph.nodes) {
        auto image = out.complement_graph.index_of(reverse_labels(complement(node)));
        if (!image)
            throw std::logic_error("complement of a realization is not a realization of " +
                                   d.complement().to_string());
        out.mapping.push_back(*image);
    }
    if (!is_isomorphism(out.graph.adjacency, out.complement_graph.adjacency, out.mapping))
        throw std::logic_error("complement map is not an isomorphism for " + d.to_string());
    return out;
}

AdjacencyGraph cartesian_product(const AdjacencyGraph& a, const AdjacencyGraph& b)
{
    const std::size_t nb = b.order();
    AdjacencyGraph out(a.order() * nb);
    for (std::size_t x = 0; x < a.order(); ++x)
        for (auto [y1, y2] : b.edges())
            out.add_edge(x * nb + y1, x * nb + y2);
    for (auto [x1, x2] : a.edges())
        for (std::size_t y = 0; y < nb; ++y)
            out.add_edge(x1 * nb + y, x2 * nb + y);
    return out;
}

AdjacencyGraph cartesian_product(const RealizationGraph& a, const RealizationGraph& b)
{
    return cartesian_product(a.adjacency, b.adjacency);
}

ProductCheck check_product_theorem(const DegreeSequence& d, std::size_t limit)
{
    ProductCheck result;
    const auto decomposition = decompose(d);
    result.factor_count = decomposition.components.size() + 1;
    if (decomposition.components.empty()) {
        result.holds = true;
        return result;
    }

    const auto whole = build_realization_graph(d, limit);
    result.node_count = whole.size();

    std::vector<RealizationGraph> factors;
    for (const auto& component : decomposition.components)
        factors.push_back(build_realization_graph(component.as_sequence(), limit));
    factors.push_back(build_realization_graph(decomposition.tail, limit));

    AdjacencyGraph product = factors.front().adjacency;
    for (std::size_t k = 1; k < factors.size(); ++k)
        product = cartesian_product(product, factors[k].adjacency);

    const auto positions = decomposition.piece_positions();
    const int n = static_cast<int>(d.size());
    std::vector<std::size_t> owner(static_cast<std::size_t>(n));
    std::vector<bool> on_clique_side(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const std::size_t clique_size =
            k < decomposition.components.size() ? decomposition.components[k].clique_part().size() : 0;
        for (std::size_t i = 0; i < positions[k].size(); ++i) {
            owner[positions[k][i]] = k;
            on_clique_side[positions[k][i]] = i < clique_size;
        }
    }

    auto fail = [&result](std::string why) {
        result.holds = false;
        result.failure = std::move(why);
        return result;
    };

    std::vector<std::size_t> mapping;
    mapping.reserve(whole.size());
    for (const auto& node : whole.nodes) {
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                if (owner[x] == owner[y])
                    continue;
                const Vertex outer = owner[x] < owner[y] ? x : y;
                if (node.adjacent(x, y) != on_clique_side[outer])
                    return fail("realization " + node.edge_string() +
                                " does not have the composed cross-piece structure");
            }
        std::size_t index = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            auto local = factors[k].index_of(node.induced(positions[k]));
            if (!local)
                return fail("realization " + node.edge_string() + " does not restrict to piece " +
                            std::to_string(k + 1));
            index = index * factors[k].size() + *local;
        }
        mapping.push_back(index);
    }

    if (whole.size() != product.order())
        return fail("G(d) has " + std::to_string(whole.size()) + " nodes but the product has " +
                    std::to_string(product.order()));
    if (!is_isomorphism(whole.adjacency, product, mapping))
        return fail("splitting realizations into pieces is not an isomorphism onto the product");
    result.holds = true;
    return result;
}

bool verify_product_theorem(const DegreeSequence& d, std::size_t limit)
{
    return check_product_theorem(d, limit).holds;
}

} // namespace rgkit
