#include "rgkit/sweep.hpp"

#include "rgkit/clique.hpp"
#include "rgkit/dial.hpp"
#include "rgkit/errors.hpp"
#include "rgkit/overlap.hpp"
#include "rgkit/realization.hpp"
#include "rgkit/realization_graph.hpp"
#include "rgkit/tyshkevich.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace rgkit {

namespace {

bool needs_graph(const std::string& check)
{
    return check != "threshold";
}

const OverlapSolution& overlap_survivor()
{
    static const OverlapSolution survivor = [] {
        const auto kept = filter_overlap_solutions(solve_overlap_system());
        if (kept.size() != 1)
            throw std::logic_error("overlap system does not leave a unique survivor");
        return kept.front();
    }();
    return survivor;
}

Json node_list(const std::vector<std::size_t>& nodes)
{
    Json out = Json::array();
    for (auto v : nodes)
        out.push_back(v + 1);
    return out;
}

// State shared by the checks of one sequence.
class SequenceContext {
public:
    SequenceContext(const DegreeSequence& d, const SweepConfig& cfg) : d_(d), cfg_(cfg) {}

    const RealizationGraph& graph()
    {
        if (!graph_)
            graph_ = build_realization_graph(d_, cfg_.max_realizations);
        return *graph_;
    }

    // Largest clique of G(d) through each node.
    const std::vector<std::vector<std::size_t>>& max_cliques()
    {
        if (!cliques_) {
            const auto& rg = graph();
            cliques_.emplace();
            for (std::size_t i = 0; i < rg.size(); ++i)
                cliques_->push_back(oracle_max_clique_through(rg.adjacency, i));
        }
        return *cliques_;
    }

    const DegreeSequence& sequence() const { return d_; }
    const SweepConfig& config() const { return cfg_; }

private:
    const DegreeSequence& d_;
    const SweepConfig& cfg_;
    std::optional<RealizationGraph> graph_;
    std::optional<std::vector<std::vector<std::size_t>>> cliques_;
};

void fail(SweepRecord& rec, Json counterexample)
{
    if (rec.status != SweepStatus::kFail) {
        rec.status = SweepStatus::kFail;
        rec.detail["counterexample"] = std::move(counterexample);
    }
    rec.detail["mismatches"] = rec.detail.value("mismatches", 0) + 1;
}

void check_connectivity(SequenceContext& ctx, SweepRecord& rec)
{
    const auto& rg = ctx.graph();
    rec.cases = 1;
    if (!is_connected(rg))
        fail(rec, Json{{"components_disconnected", true}});
}

void check_theorem_iff(SequenceContext& ctx, SweepRecord& rec, const std::vector<int>& sizes)
{
    const auto& rg = ctx.graph();
    const auto& cliques = ctx.max_cliques();
    rec.detail["mismatches"] = 0;
    for (std::size_t i = 0; i < rg.size(); ++i)
        for (int n : sizes) {
            ++rec.cases;
            const auto witness = in_clique(rg.nodes[i], n);
            const bool oracle = cliques[i].size() >= static_cast<std::size_t>(n);
            if (witness.has_value() != oracle)
                fail(rec, Json{{"realization", graph_to_json(rg.nodes[i])},
                               {"n", n},
                               {"predicted", witness.has_value()},
                               {"oracle_clique", node_list(cliques[i])}});
        }
}

void check_clique_dial(SequenceContext& ctx, SweepRecord& rec)
{
    const auto& rg = ctx.graph();
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& c : ctx.max_cliques())
        if (c.size() >= 4)
            distinct.insert(c);

    rec.detail["mismatches"] = 0;
    std::size_t quads = 0;
    auto check_family = [&](const std::vector<std::size_t>& nodes) {
        std::vector<LabeledGraph> family;
        for (auto v : nodes)
            family.push_back(rg.nodes[v]);
        ++rec.cases;
        if (!verify_dial(family))
            fail(rec, Json{{"clique", node_list(nodes)}, {"reason", "no dial"}});
        if (nodes.size() == 4) {
            ++quads;
            const auto counts = measure_overlaps(family);
            if (!counts.matches(overlap_survivor()))
                fail(rec, Json{{"clique", node_list(nodes)}, {"reason", "overlap pattern"}});
        }
    };

    for (const auto& clique : distinct) {
        const std::size_t k = clique.size();
        if (k <= 12) {
            for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
                if (std::popcount(mask) < 4)
                    continue;
                std::vector<std::size_t> nodes;
                for (std::size_t b = 0; b < k; ++b)
                    if ((mask >> b) & 1U)
                        nodes.push_back(clique[b]);
                check_family(nodes);
            }
        } else {
            check_family(clique);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    for (std::size_t c = b + 1; c < k; ++c)
                        for (std::size_t e = c + 1; e < k; ++e)
                            check_family({clique[a], clique[b], clique[c], clique[e]});
        }
    }
    rec.detail["cliques"] = distinct.size();
    rec.detail["four_cliques"] = quads;
}

void check_complement(SequenceContext& ctx, SweepRecord& rec)
{
    const auto iso = complement_isomorphism(ctx.sequence(), ctx.config().max_realizations);
    rec.cases = iso.graph.size();
    if (!is_isomorphism(iso.graph.adjacency, iso.complement_graph.adjacency, iso.mapping))
        fail(rec, Json{{"reason", "mapping does not preserve adjacency"}});
}

void check_product(SequenceContext& ctx, SweepRecord& rec)
{
    if (!is_decomposable(ctx.sequence())) {
        rec.detail["decomposable"] = false;
        return;
    }
    rec.detail["decomposable"] = true;
    const auto result = check_product_theorem(ctx.sequence(), ctx.config().max_realizations);
    rec.cases = result.node_count;
    rec.detail["factors"] = result.factor_count;
    if (!result.holds)
        fail(rec, Json{{"reason", result.failure}});
}

void check_threshold(SequenceContext& ctx, SweepRecord& rec)
{
    rec.cases = 1;
    const bool unique = count_realizations(ctx.sequence(), 1) == 1;
    bool threshold = false;
    try {
        threshold = is_threshold(ctx.sequence());
    } catch (const std::logic_error& e) {
        fail(rec, Json{{"reason", e.what()}});
        return;
    }
    rec.detail["threshold"] = threshold;
    if (threshold != unique)
        fail(rec, Json{{"is_threshold", threshold}, {"unique_realization", unique}});
}

void check_complete(SequenceContext& ctx, SweepRecord& rec)
{
    const auto& rg = ctx.graph();
    rec.cases = 1;
    const auto witness = is_complete_realization_graph(ctx.sequence());
    const bool complete = rg.size() >= 4 && rg.adjacency.is_complete();
    if (witness)
        rec.detail["witness"] = to_json(*witness);
    if (witness.has_value() != complete || (witness && static_cast<std::size_t>(witness->n) != rg.size()))
        fail(rec, Json{{"predicted", witness.has_value()}, {"complete", complete}, {"nodes", rg.size()}});
}

} // namespace

const std::vector<std::string>& sweep_check_names()
{
    static const std::vector<std::string> names{"connectivity", "theorem-iff", "triangle", "clique-dial",
                                                "complement",   "product",     "threshold", "complete"};
    return names;
}

void validate(const SweepConfig& cfg)
{
    if (cfg.max_vertices < 4 || cfg.max_vertices > kMaxVertices)
        throw std::invalid_argument("max_vertices must be in 4.." + std::to_string(kMaxVertices));
    if (cfg.min_vertices < 1 || cfg.min_vertices > cfg.max_vertices)
        throw std::invalid_argument("min_vertices must be in 1..max_vertices");
    for (int n : cfg.clique_sizes)
        if (n < 2 || n > 8)
            throw std::invalid_argument("clique sizes must be in 2..8");
    const auto& names = sweep_check_names();
    for (const auto& c : cfg.checks)
        if (std::find(names.begin(), names.end(), c) == names.end())
            throw std::invalid_argument("unknown check \"" + c + "\"");
}

std::vector<DegreeSequence> graphic_sequences(int max_vertices, int min_vertices)
{
    std::vector<DegreeSequence> out;
    for (int n = std::max(min_vertices, 1); n <= max_vertices; ++n) {
        std::vector<int> terms(static_cast<std::size_t>(n));
        auto extend = [&](auto&& self, std::size_t pos, int cap, int sum) -> void {
            if (pos == terms.size()) {
                if (sum % 2 == 0 && is_graphic_list(terms))
                    out.emplace_back(terms);
                return;
            }
            for (int t = cap; t >= 0; --t) {
                terms[pos] = t;
                self(self, pos + 1, t, sum + t);
            }
        };
        extend(extend, 0, n - 1, 0);
    }
    return out;
}

std::string to_string(SweepStatus s)
{
    switch (s) {
    case SweepStatus::kPass: return "pass";
    case SweepStatus::kFail: return "fail";
    case SweepStatus::kSkipped: return "skipped";
    }
    return "?";
}

Json to_json(const SweepRecord& r)
{
    Json out{{"sequence", r.sequence.to_string()},
             {"check", r.check},
             {"status", to_string(r.status)},
             {"realizations", r.realizations},
             {"cases", r.cases}};
    for (const auto& [key, value] : r.detail.items())
        out[key] = value;
    return out;
}

Json to_json(const SweepSummary& s)
{
    return Json{{"summary", true},   {"sequences", s.sequences}, {"passed", s.passed},
                {"failed", s.failed}, {"skipped", s.skipped},     {"cases", s.cases},
                {"ok", s.ok()}};
}

std::vector<SweepRecord> sweep_sequence(const DegreeSequence& d, const SweepConfig& cfg)
{
    std::vector<SweepRecord> records;
    if (cfg.checks.empty())
        return records;

    const std::size_t count = count_realizations(d, cfg.max_realizations);
    const bool too_many = count > cfg.max_realizations;
    SequenceContext ctx(d, cfg);

    std::vector<int> iff_sizes;
    for (int n : cfg.clique_sizes)
        if (n != 3)
            iff_sizes.push_back(n);

    for (const auto& name : sweep_check_names()) {
        if (!cfg.checks.contains(name))
            continue;
        SweepRecord rec{d, name};
        rec.realizations = count;
        if (too_many && needs_graph(name)) {
            rec.status = SweepStatus::kSkipped;
            rec.detail["reason"] = "more than " + std::to_string(cfg.max_realizations) + " realizations";
            records.push_back(std::move(rec));
            continue;
        }
        try {
            if (name == "connectivity")
                check_connectivity(ctx, rec);
            else if (name == "theorem-iff")
                check_theorem_iff(ctx, rec, iff_sizes);
            else if (name == "triangle")
                check_theorem_iff(ctx, rec, {3});
            else if (name == "clique-dial")
                check_clique_dial(ctx, rec);
            else if (name == "complement")
                check_complement(ctx, rec);
            else if (name == "product")
                check_product(ctx, rec);
            else if (name == "threshold")
                check_threshold(ctx, rec);
            else if (name == "complete")
                check_complete(ctx, rec);
        } catch (const std::exception& e) {
            fail(rec, Json{{"error", e.what()}});
        }
        records.push_back(std::move(rec));
    }
    return records;
}

SweepSummary run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& sink)
{
    validate(cfg);
    SweepSummary summary;
    if (cfg.checks.empty())
        return summary;

    const auto sequences = graphic_sequences(cfg.max_vertices, cfg.min_vertices);
    summary.sequences = sequences.size();

    unsigned workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(sequences.size(), 1)));

    std::vector<std::optional<std::vector<SweepRecord>>> slots(sequences.size());
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::condition_variable ready;

    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < sequences.size();) {
            auto records = sweep_sequence(sequences[i], cfg);
            {
                std::lock_guard lock(mutex);
                slots[i] = std::move(records);
            }
            ready.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);

    for (std::size_t i = 0; i < sequences.size(); ++i) {
        std::vector<SweepRecord> records;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            records = std::move(*slots[i]);
            slots[i].reset();
        }
        for (const auto& r : records) {
            summary.cases += r.cases;
            switch (r.status) {
            case SweepStatus::kPass: ++summary.passed; break;
            case SweepStatus::kFail: ++summary.failed; break;
            case SweepStatus::kSkipped: ++summary.skipped; break;
            }
            if (sink)
                sink(r);
        }
    }
    return summary;
}

} // namespace rgkit
