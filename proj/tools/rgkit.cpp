#include "rgkit/clique.hpp"
#include "rgkit/dial.hpp"
#include "rgkit/errors.hpp"
#include "rgkit/formats.hpp"
#include "rgkit/overlap.hpp"
#include "rgkit/realization.hpp"
#include "rgkit/realization_graph.hpp"
#include "rgkit/sweep.hpp"
#include "rgkit/tyshkevich.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace rgkit;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_limit()
{
    const char* env = std::getenv("RGKIT_LIMIT");
    if (env == nullptr || *env == '\0')
        return kDefaultRealizationLimit;
    try {
        std::size_t used = 0;
        const long long value = std::stoll(env, &used);
        if (used != std::string(env).size() || value < 1)
            throw std::invalid_argument("");
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw UsageError(std::string("RGKIT_LIMIT must be a positive integer, got \"") + env + "\"");
    }
}

LabeledGraph read_graph(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot read \"" + path + "\"");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_graph_json(text);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

int run_enum(const std::string& seq, std::size_t limit, bool json, bool count)
{
    const auto d = parse_sequence(seq);
    if (count) {
        if (!is_graphic(d)) {
            std::cout << 0 << '\n';
            return kNegative;
        }
        const auto c = count_realizations(d, limit);
        if (c > limit)
            throw LimitExceededError(limit, c);
        std::cout << c << '\n';
        return kOk;
    }
    const auto set = enumerate_realizations(d, limit);
    if (json) {
        Json out = Json::array();
        for (const auto& r : set.realizations)
            out.push_back(graph_to_json(r));
        std::cout << out.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < set.realizations.size(); ++i)
            std::cout << i + 1 << ": " << set.realizations[i].edge_string() << '\n';
    }
    return kOk;
}

int run_graph(const std::string& seq, std::size_t limit, bool dot, bool json)
{
    const auto rg = build_realization_graph(parse_sequence(seq), limit);
    if (dot) {
        std::cout << to_dot(rg);
    } else if (json) {
        std::cout << to_json(rg).dump() << '\n';
    } else {
        std::vector<int> degrees;
        for (auto x : rg.adjacency.degree_sequence())
            degrees.push_back(static_cast<int>(x));
        std::cout << "sequence: " << rg.sequence.to_string() << '\n'
                  << "nodes: " << rg.size() << '\n'
                  << "edges: " << rg.adjacency.edge_count() << '\n'
                  << "degree sequence: "
                  << (degrees.empty() ? std::string("()") : DegreeSequence(degrees).to_run_length_string())
                  << '\n'
                  << "connected: " << (is_connected(rg) ? "yes" : "no") << '\n';
    }
    return kOk;
}

int run_dial(const std::string& path, std::optional<int> n, bool json)
{
    const auto g = read_graph(path);
    const int size = n ? *n : max_dial_size(g);
    if (n && *n < 2)
        throw UsageError("--n must be at least 2");
    const auto e = size >= 2 ? find_dial_embedding(g, size) : std::nullopt;
    if (!e) {
        if (json)
            std::cout << "null\n";
        else
            std::cout << "no D_" << (n ? std::to_string(*n) : std::string("n")) << " configuration\n";
        return kNegative;
    }
    if (json) {
        std::cout << to_json(*e).dump() << '\n';
    } else {
        std::cout << "D_" << e->size_n() << ": u=" << e->hub_u + 1 << " v=" << e->hub_v + 1
                  << " needle=" << e->needle_spoke + 1 << " spokes=";
        for (std::size_t i = 0; i < e->other_spokes.size(); ++i)
            std::cout << (i ? "," : "") << e->other_spokes[i] + 1;
        std::cout << '\n';
    }
    return kOk;
}

int run_clique(const std::string& path, std::optional<int> n, bool verify, std::size_t limit, bool json)
{
    const auto g = read_graph(path);
    if (n) {
        if (*n < 2)
            throw UsageError("--n must be at least 2");
        const auto w = in_clique(g, *n);
        bool agree = true;
        Json out{{"n", *n}, {"in_clique", w.has_value()}, {"witness", w ? to_json(*w) : Json(nullptr)}};
        if (verify) {
            const auto report = verified_clique_report(g, limit);
            const bool oracle = *report.clique_number_oracle >= *n;
            out["oracle_in_clique"] = oracle;
            agree = oracle == w.has_value();
        }
        if (json) {
            std::cout << out.dump() << '\n';
        } else {
            std::cout << (w ? "in a " + std::to_string(*n) + "-clique: " + describe(*w)
                            : "not in a " + std::to_string(*n) + "-clique")
                      << '\n';
            if (verify)
                std::cout << "oracle: " << (out["oracle_in_clique"].get<bool>() ? "agrees" : "disagrees") << '\n';
        }
        if (verify && !agree)
            return kNegative;
        return w ? kOk : kNegative;
    }

    const auto report = verify ? verified_clique_report(g, limit) : clique_number_of_realization(g);
    if (json) {
        std::cout << to_json(report).dump() << '\n';
    } else {
        std::cout << "clique number: " << report.clique_number_predicted << '\n';
        if (report.witness)
            std::cout << "witness: " << describe(*report.witness) << '\n';
        if (report.clique_number_oracle)
            std::cout << "oracle: " << *report.clique_number_oracle << '\n';
    }
    if (report.clique_number_oracle && *report.clique_number_oracle != report.clique_number_predicted)
        return kNegative;
    return kOk;
}

int run_venn_table()
{
    const auto sols = solve_overlap_system();
    const auto kept = filter_overlap_solutions(sols);
    std::cout << format_overlap_table(sols) << '\n'
              << "survivor:\n"
              << format_overlap_table(kept) << '\n';
    Json all = Json::array();
    for (const auto& s : sols)
        all.push_back(to_json(s));
    Json survivors = Json::array();
    for (const auto& s : kept)
        survivors.push_back(to_json(s));
    std::cout << Json{{"solutions", std::move(all)}, {"survivors", std::move(survivors)}}.dump() << '\n';
    return kept.size() == 1 ? kOk : kNegative;
}

int run_decompose(const std::string& seq, bool json)
{
    const auto d = parse_sequence(seq);
    const auto t = decompose(d);
    if (json) {
        Json out = to_json(t);
        out["threshold"] = is_threshold(d);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << t.to_string() << '\n';
        if (is_threshold(d))
            std::cout << "threshold\n";
    }
    return kOk;
}

int run_complete(const std::string& seq, bool json)
{
    const auto w = is_complete_realization_graph(parse_sequence(seq));
    if (json)
        std::cout << (w ? to_json(*w) : Json(nullptr)).dump() << '\n';
    else
        std::cout << (w ? w->to_string() : std::string("not complete")) << '\n';
    return w ? kOk : kNegative;
}

int run_sweep_command(SweepConfig cfg, const std::string& checks, const std::string& sizes)
{
    if (checks == "all")
        cfg.checks = {sweep_check_names().begin(), sweep_check_names().end()};
    else if (checks != "none")
        for (const auto& c : split_list(checks))
            cfg.checks.insert(c);
    cfg.clique_sizes.clear();
    for (const auto& s : split_list(sizes)) {
        try {
            cfg.clique_sizes.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw UsageError("bad clique size \"" + s + "\"");
        }
    }
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto summary = run_sweep(cfg, [](const SweepRecord& r) { std::cout << to_json(r).dump() << '\n'; });
    if (!cfg.checks.empty())
        std::cout << to_json(summary).dump() << '\n';
    return summary.ok() ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Realization graphs of degree sequences"};
    app.require_subcommand(1);

    std::string seq;
    std::string path;
    std::optional<std::size_t> limit;
    bool json = false;
    bool count = false;
    bool dot = false;
    bool verify = false;
    bool max = false;
    std::optional<int> n;

    auto* enum_cmd = app.add_subcommand("enum", "List the labeled realizations of a sequence");
    enum_cmd->add_option("sequence", seq, "Degree sequence, e.g. 2,2,2,1,1 or 4,2,1^4")->required();
    enum_cmd->add_option("--limit", limit, "Maximum number of realizations");
    auto* enum_json = enum_cmd->add_flag("--json", json, "Print graph JSON");
    enum_cmd->add_flag("--count", count, "Print only the number of realizations")->excludes(enum_json);

    auto* graph_cmd = app.add_subcommand("graph", "Build the realization graph G(d)");
    graph_cmd->add_option("sequence", seq, "Degree sequence")->required();
    graph_cmd->add_option("--limit", limit, "Maximum number of realizations");
    auto* graph_dot = graph_cmd->add_flag("--dot", dot, "Print Graphviz DOT");
    graph_cmd->add_flag("--json", json, "Print JSON")->excludes(graph_dot);

    auto* dial_cmd = app.add_subcommand("dial", "Find a D_n configuration in a graph");
    dial_cmd->add_option("graph", path, "Graph JSON file, or - for stdin")->required();
    auto* dial_n = dial_cmd->add_option("--n", n, "Size of the configuration");
    dial_cmd->add_flag("--max", max, "Largest configuration (default)")->excludes(dial_n);
    dial_cmd->add_flag("--json", json, "Print JSON");

    auto* clique_cmd = app.add_subcommand("clique", "Clique membership of a realization in G(d)");
    clique_cmd->add_option("graph", path, "Graph JSON file, or - for stdin")->required();
    clique_cmd->add_option("--n", n, "Decide membership in an n-clique");
    clique_cmd->add_flag("--verify", verify, "Build G(d) and compare with an exact clique search");
    clique_cmd->add_option("--limit", limit, "Maximum number of realizations for --verify");
    clique_cmd->add_flag("--json", json, "Print JSON");

    auto* venn_cmd = app.add_subcommand("venn-table", "Solve the four-realization overlap system");

    auto* decompose_cmd = app.add_subcommand("decompose", "Canonical decomposition of a sequence");
    decompose_cmd->add_option("sequence", seq, "Degree sequence")->required();
    decompose_cmd->add_flag("--json", json, "Print JSON");

    auto* complete_cmd = app.add_subcommand("complete", "Decide whether G(d) is complete");
    complete_cmd->add_option("sequence", seq, "Degree sequence")->required();
    complete_cmd->add_flag("--json", json, "Print JSON");

    SweepConfig cfg;
    std::string checks = "all";
    std::string sizes = "4,5,6";
    auto* sweep_cmd = app.add_subcommand("sweep", "Check the theorems over all small sequences");
    sweep_cmd->add_option("--max-vertices", cfg.max_vertices, "Largest sequence length")->capture_default_str();
    sweep_cmd->add_option("--min-vertices", cfg.min_vertices, "Smallest sequence length")->capture_default_str();
    sweep_cmd->add_option("--max-realizations", cfg.max_realizations, "Skip sequences with more realizations")
        ->capture_default_str();
    sweep_cmd->add_option("--clique-sizes", sizes, "Comma-separated clique sizes")->capture_default_str();
    sweep_cmd->add_option("--checks", checks, "Comma-separated checks, all, or none")->capture_default_str();
    sweep_cmd->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const std::size_t lim = limit ? *limit : default_limit();
        if (*enum_cmd)
            return run_enum(seq, lim, json, count);
        if (*graph_cmd)
            return run_graph(seq, lim, dot, json);
        if (*dial_cmd)
            return run_dial(path, n, json);
        if (*clique_cmd)
            return run_clique(path, n, verify, lim, json);
        if (*venn_cmd)
            return run_venn_table();
        if (*decompose_cmd)
            return run_decompose(seq, json);
        if (*complete_cmd)
            return run_complete(seq, json);
        if (*sweep_cmd)
            return run_sweep_command(cfg, checks, sizes);
    } catch (const ParseError& e) {
        std::cerr << "rgkit: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "rgkit: " << e.what() << '\n';
        return kUsage;
    } catch (const NotGraphicError& e) {
        std::cout << "not graphic\n";
        std::cerr << "rgkit: " << e.what() << '\n';
        return kNegative;
    } catch (const LimitExceededError& e) {
        std::cerr << "rgkit: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "rgkit: " << e.what() << '\n';
        return kNegative;
    }
    return kUsage;
}
