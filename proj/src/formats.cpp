#include "rgkit/formats.hpp"

#include "rgkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace rgkit {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view whole)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed degree sequence \"" + std::string(whole) + "\"");
    return value;
}

Json vertex_list(const std::vector<Vertex>& vs)
{
    Json out = Json::array();
    for (Vertex v : vs)
        out.push_back(v + 1);
    return out;
}

} // namespace

DegreeSequence parse_sequence(std::string_view text)
{
    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    if (body.empty())
        throw ParseError("empty degree sequence");

    std::vector<int> terms;
    while (!body.empty()) {
        const auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (comma != std::string_view::npos && trim(body).empty())
            throw ParseError("trailing comma in \"" + std::string(text) + "\"");

        int repeat = 1;
        if (const auto caret = item.find('^'); caret != std::string_view::npos) {
            std::string_view count = trim(item.substr(caret + 1));
            if (count.size() >= 2 && count.front() == '(' && count.back() == ')')
                count = count.substr(1, count.size() - 2);
            repeat = parse_int(count, text);
            item = item.substr(0, caret);
            if (repeat < 1)
                throw ParseError("run length must be positive in \"" + std::string(text) + "\"");
        }
        const int value = parse_int(item, text);
        if (value < 0)
            throw ParseError("negative degree in \"" + std::string(text) + "\"");
        terms.insert(terms.end(), static_cast<std::size_t>(repeat), value);
    }
    // Well-formed but too large for a simple graph on this many vertices.
    if (*std::max_element(terms.begin(), terms.end()) >= static_cast<int>(terms.size()))
        throw NotGraphicError("degree sequence " + std::string(trim(text)) + " has a term above n - 1");
    try {
        return DegreeSequence(std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json graph_to_json(const LabeledGraph& g)
{
    Json edges = Json::array();
    for (auto [a, b] : g.edges())
        edges.push_back({a + 1, b + 1});
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw ParseError("graph JSON \"n\" must be an integer");
    const auto n = j["n"].get<long long>();
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph JSON \"n\" must be in 1.." + std::to_string(kMaxVertices));
    if (!j["edges"].is_array())
        throw ParseError("graph JSON \"edges\" must be an array");
    std::set<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        const auto a = e[0].get<long long>();
        const auto b = e[1].get<long long>();
        if (a < 1 || b < 1 || a > n || b > n)
            throw ParseError("edge endpoint out of range 1.." + std::to_string(n));
        if (a == b)
            throw ParseError("self-loop in graph JSON");
        const Edge edge{static_cast<Vertex>(std::min(a, b) - 1), static_cast<Vertex>(std::max(a, b) - 1)};
        if (!edges.insert(edge).second)
            throw ParseError("repeated edge in graph JSON");
    }
    return LabeledGraph(static_cast<int>(n), std::vector<Edge>(edges.begin(), edges.end()));
}

LabeledGraph parse_graph_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

Json sequence_to_json(const DegreeSequence& d)
{
    return Json(d.terms());
}

std::string to_dot(const RealizationGraph& rg)
{
    std::ostringstream os;
    os << "graph realization_graph {\n";
    os << "  label=\"" << rg.sequence.to_string() << "\";\n";
    for (std::size_t i = 0; i < rg.size(); ++i)
        os << "  " << i + 1 << " [label=\"" << rg.nodes[i].edge_string() << "\"];\n";
    for (auto [a, b] : rg.adjacency.edges())
        os << "  " << a + 1 << " -- " << b + 1 << ";\n";
    os << "}\n";
    return os.str();
}

Json to_json(const RealizationGraph& rg)
{
    Json nodes = Json::array();
    for (std::size_t i = 0; i < rg.size(); ++i) {
        Json node = graph_to_json(rg.nodes[i]);
        nodes.push_back(Json{{"id", i + 1}, {"edges", node["edges"]}});
    }
    Json edges = Json::array();
    for (auto [a, b] : rg.adjacency.edges())
        edges.push_back({a + 1, b + 1});
    Json degrees = Json::array();
    for (auto d : rg.adjacency.degree_sequence())
        degrees.push_back(d);
    return Json{{"sequence", sequence_to_json(rg.sequence)},
                {"n", rg.sequence.size()},
                {"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"degree_sequence", std::move(degrees)},
                {"connected", is_connected(rg)}};
}

Json to_json(const DialEmbedding& e)
{
    return Json{{"u", e.hub_u + 1},
                {"v", e.hub_v + 1},
                {"needle", e.needle_spoke + 1},
                {"spokes", vertex_list(e.other_spokes)},
                {"n", e.size_n()}};
}

Json to_json(const Dial& d)
{
    Json pairs = Json::array();
    for (auto [a, b] : d.varying_pairs)
        pairs.push_back({a + 1, b + 1});
    Json needles = Json::array();
    for (const auto& [index, spoke] : d.needle_of)
        needles.push_back(spoke + 1);
    return Json{{"u", d.hub_u + 1},
                {"v", d.hub_v + 1},
                {"W", vertex_list(d.vertices)},
                {"P", std::move(pairs)},
                {"needles", std::move(needles)}};
}

Json to_json(const CliqueWitness& w)
{
    if (const auto* c = std::get_if<AlternatingFourCycle>(&w))
        return Json{{"kind", "alternating-4-cycle"}, {"cycle", {c->u + 1, c->v + 1, c->w + 1, c->x + 1}}};
    if (const auto* q = std::get_if<InducedQuad>(&w))
        return Json{{"kind", to_string(q->kind)},
                    {"vertices", vertex_list({q->vertices.begin(), q->vertices.end()})}};
    const auto& e = std::get<DialEmbedding>(w);
    Json out{{"kind", "D_" + std::to_string(e.size_n())}};
    out["dial"] = to_json(e);
    return out;
}

Json to_json(const CliqueReport& r)
{
    Json out{{"realization", graph_to_json(r.realization)},
             {"clique_number_predicted", r.clique_number_predicted},
             {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
    out["clique_number_oracle"] = r.clique_number_oracle ? Json(*r.clique_number_oracle) : Json(nullptr);
    return out;
}

Json to_json(const OverlapSolution& s)
{
    Json out = Json::object();
    for (auto col : overlap_columns())
        out[subset_name(col)] = s[col].to_string();
    return out;
}

Json to_json(const TyshkevichDecomposition& t)
{
    Json components = Json::array();
    for (const auto& c : t.components)
        components.push_back(Json{{"clique", c.clique_part()}, {"independent", c.independent_part()}});
    return Json{{"sequence", sequence_to_json(t.recompose())},
                {"components", std::move(components)},
                {"tail", sequence_to_json(t.tail)},
                {"text", t.to_string()}};
}

Json to_json(const CompleteWitness& w)
{
    Json prefix = Json::array();
    for (const auto& p : w.prefix())
        prefix.push_back(p.to_string());
    const auto suffix = w.suffix();
    return Json{{"n", w.n},
                {"family", family_name(w.family)},
                {"t", std::move(prefix)},
                {"alpha", w.alpha_string()},
                {"t_prime", suffix ? Json(suffix->to_string()) : Json(nullptr)},
                {"decomposition", w.decomposition.to_string()}};
}

} // namespace rgkit
