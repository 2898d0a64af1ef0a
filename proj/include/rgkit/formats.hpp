#pragma once

#include "rgkit/clique.hpp"
#include "rgkit/dial.hpp"
#include "rgkit/graph.hpp"
#include "rgkit/overlap.hpp"
#include "rgkit/realization_graph.hpp"
#include "rgkit/tyshkevich.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace rgkit {

using Json = nlohmann::ordered_json;

/// "2,2,2,1,1", with run-length terms "1^4" or "1^(4)" expanded. Throws ParseError, or
/// NotGraphicError when a term exceeds n - 1.
DegreeSequence parse_sequence(std::string_view text);

/// {"n": 5, "edges": [[1,2], ...]} with 1-based labels, edges sorted.
Json graph_to_json(const LabeledGraph& g);
/// Throws ParseError on malformed input.
LabeledGraph graph_from_json(const Json& j);
LabeledGraph parse_graph_json(std::string_view text);

Json sequence_to_json(const DegreeSequence& d);

/// Node ids are 1-based indices, labels are edge lists, edges listed in
/// lexicographic order.
std::string to_dot(const RealizationGraph& rg);
Json to_json(const RealizationGraph& rg);

/// {"u", "v", "needle", "spokes", "n"} with 1-based labels.
Json to_json(const DialEmbedding& e);
Json to_json(const Dial& d);
Json to_json(const CliqueWitness& w);
Json to_json(const CliqueReport& r);
Json to_json(const OverlapSolution& s);
Json to_json(const TyshkevichDecomposition& t);
Json to_json(const CompleteWitness& w);

} // namespace rgkit
