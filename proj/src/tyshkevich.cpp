#include "rgkit/tyshkevich.hpp"

#include "rgkit/errors.hpp"
#include "rgkit/realization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rgkit {

namespace {

std::string join_terms(const std::vector<int>& terms)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i)
        os << (i ? "," : "") << terms[i];
    return os.str();
}

std::vector<int> shifted(std::vector<int> terms, int by)
{
    for (int& t : terms)
        t += by;
    return terms;
}

// Gale–Ryser: a 0/1 matrix with row sums `rows` and column sums `cols` exists.
bool bipartite_feasible(std::vector<int> rows, const std::vector<int>& cols)
{
    const long long row_total = std::accumulate(rows.begin(), rows.end(), 0LL);
    const long long col_total = std::accumulate(cols.begin(), cols.end(), 0LL);
    if (row_total != col_total)
        return false;
    std::sort(rows.begin(), rows.end(), std::greater<>());
    long long prefix = 0;
    for (std::size_t k = 1; k <= rows.size(); ++k) {
        prefix += rows[k - 1];
        long long bound = 0;
        for (int c : cols)
            bound += std::min<long long>(c, static_cast<long long>(k));
        if (prefix > bound)
            return false;
    }
    return true;
}

// Searches clique-to-independent adjacency patterns row by row; the
// Gale–Ryser check on what is left prunes every dead branch.
class SplitSearch {
public:
    SplitSearch(std::vector<int> demand, std::vector<int> capacity)
        : demand_(std::move(demand)), capacity_(std::move(capacity)),
          chosen_(demand_.size(), 0) {}

    bool run() { return row(0); }
    const std::vector<std::uint64_t>& pattern() const { return chosen_; }

private:
    bool row(std::size_t i)
    {
        if (i == demand_.size())
            return std::all_of(capacity_.begin(), capacity_.end(), [](int c) { return c == 0; });
        return pick(i, 0, demand_[i]);
    }

    bool pick(std::size_t i, std::size_t next, int need)
    {
        if (need == 0) {
            std::vector<int> rest(demand_.begin() + static_cast<long>(i) + 1, demand_.end());
            return bipartite_feasible(std::move(rest), capacity_) && row(i + 1);
        }
        for (std::size_t j = next; j < capacity_.size(); ++j) {
            if (capacity_[j] == 0)
                continue;
            --capacity_[j];
            chosen_[i] |= std::uint64_t{1} << j;
            if (pick(i, j + 1, need - 1))
                return true;
            chosen_[i] &= ~(std::uint64_t{1} << j);
            ++capacity_[j];
        }
        return false;
    }

    std::vector<int> demand_;
    std::vector<int> capacity_;
    std::vector<std::uint64_t> chosen_;
};

bool all_single_term(const TyshkevichDecomposition& t)
{
    return t.tail.size() == 1 &&
           std::all_of(t.components.begin(), t.components.end(),
                       [](const SplittedSequence& s) { return s.is_single_term(); });
}

std::optional<OuterSplit> try_outer_split(const DegreeSequence& d, std::size_t a, std::size_t b)
{
    const auto& terms = d.terms();
    const std::size_t c = terms.size() - a - b;
    std::vector<int> clique(terms.begin(), terms.begin() + static_cast<long>(a));
    std::vector<int> middle(terms.begin() + static_cast<long>(a),
                            terms.begin() + static_cast<long>(a + c));
    std::vector<int> independent(terms.begin() + static_cast<long>(a + c), terms.end());
    clique = shifted(std::move(clique), -static_cast<int>(c));
    middle = shifted(std::move(middle), -static_cast<int>(a));
    if (std::any_of(clique.begin(), clique.end(), [](int t) { return t < 0; }))
        return std::nullopt;
    if (!is_graphic_list(middle))
        return std::nullopt;
    if (!realize_split(clique, independent))
        return std::nullopt;
    return OuterSplit{SplittedSequence::from_parts(std::move(clique), std::move(independent)),
                      DegreeSequence(std::move(middle))};
}

} // namespace

std::optional<LabeledGraph> realize_split(const std::vector<int>& clique_part,
                                          const std::vector<int>& independent_part)
{
    const int a = static_cast<int>(clique_part.size());
    const int b = static_cast<int>(independent_part.size());
    if (a + b < 1 || a + b > kMaxVertices)
        return std::nullopt;
    std::vector<int> demand;
    for (int t : clique_part) {
        if (t - (a - 1) < 0 || t - (a - 1) > b)
            return std::nullopt;
        demand.push_back(t - (a - 1));
    }
    for (int t : independent_part)
        if (t < 0 || t > a)
            return std::nullopt;
    if (!bipartite_feasible(demand, independent_part))
        return std::nullopt;

    SplitSearch search(demand, independent_part);
    if (!search.run())
        return std::nullopt;

    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            edges.emplace_back(i, j);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if ((search.pattern()[i] >> j) & 1U)
                edges.emplace_back(i, a + j);
    return LabeledGraph(a + b, edges);
}

SplittedSequence SplittedSequence::from_parts(std::vector<int> clique_part,
                                              std::vector<int> independent_part)
{
    std::sort(clique_part.begin(), clique_part.end(), std::greater<>());
    std::sort(independent_part.begin(), independent_part.end(), std::greater<>());
    if (!realize_split(clique_part, independent_part))
        throw NotGraphicError("(" + join_terms(clique_part) + ";" + join_terms(independent_part) +
                              ") has no split realization");
    return SplittedSequence(std::move(clique_part), std::move(independent_part));
}

DegreeSequence SplittedSequence::as_sequence() const
{
    std::vector<int> terms(clique_);
    terms.insert(terms.end(), independent_.begin(), independent_.end());
    return DegreeSequence(std::move(terms));
}

std::string SplittedSequence::to_string() const
{
    return "(" + join_terms(clique_) + ";" + join_terms(independent_) + ")";
}

DegreeSequence compose_sequences(const SplittedSequence& p, const DegreeSequence& q)
{
    std::vector<int> terms = shifted(p.clique_part(), static_cast<int>(q.size()));
    const auto middle = shifted(q.terms(), static_cast<int>(p.clique_part().size()));
    terms.insert(terms.end(), middle.begin(), middle.end());
    terms.insert(terms.end(), p.independent_part().begin(), p.independent_part().end());
    if (!std::is_sorted(terms.begin(), terms.end(), std::greater<>()))
        throw std::logic_error("composition is not nonincreasing");
    return DegreeSequence(std::move(terms));
}

SplittedSequence compose_splitted(const SplittedSequence& p, const SplittedSequence& q)
{
    const int p_clique = static_cast<int>(p.clique_part().size());
    std::vector<int> clique = shifted(p.clique_part(), static_cast<int>(q.size()));
    const auto q_clique = shifted(q.clique_part(), p_clique);
    clique.insert(clique.end(), q_clique.begin(), q_clique.end());
    std::vector<int> independent = shifted(q.independent_part(), p_clique);
    independent.insert(independent.end(), p.independent_part().begin(), p.independent_part().end());
    return SplittedSequence::from_parts(std::move(clique), std::move(independent));
}

LabeledGraph compose_graphs(const LabeledGraph& p, const std::vector<Vertex>& independent,
                            const std::vector<Vertex>& clique, const LabeledGraph& q)
{
    const int np = p.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(np), 0);
    for (const auto* part : {&independent, &clique})
        for (Vertex v : *part) {
            if (v < 0 || v >= np)
                throw PartitionError("partition vertex out of range");
            ++seen[v];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
        throw PartitionError("V1 and V2 must partition the vertices of P");
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (std::size_t j = i + 1; j < independent.size(); ++j)
            if (p.adjacent(independent[i], independent[j]))
                throw PartitionError("V1 is not an independent set of P");
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!p.adjacent(clique[i], clique[j]))
                throw PartitionError("V2 is not a clique of P");

    const int nq = q.vertex_count();
    const int a = static_cast<int>(clique.size());
    std::vector<Vertex> label(static_cast<std::size_t>(np));
    for (int i = 0; i < a; ++i)
        label[clique[i]] = i;
    for (std::size_t i = 0; i < independent.size(); ++i)
        label[independent[i]] = a + nq + static_cast<int>(i);

    std::vector<Edge> edges;
    for (auto [x, y] : p.edges())
        edges.emplace_back(label[x], label[y]);
    for (auto [x, y] : q.edges())
        edges.emplace_back(a + x, a + y);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < nq; ++j)
            edges.emplace_back(i, a + j);
    return LabeledGraph(np + nq, edges);
}

DegreeSequence TyshkevichDecomposition::recompose() const
{
    DegreeSequence out = tail;
    for (auto it = components.rbegin(); it != components.rend(); ++it)
        out = compose_sequences(*it, out);
    return out;
}

std::string TyshkevichDecomposition::to_string() const
{
    std::string out;
    for (const auto& c : components)
        out += c.to_string() + " ∘ ";
    return out + tail.to_string();
}

std::vector<std::vector<Vertex>> TyshkevichDecomposition::piece_positions() const
{
    std::vector<std::vector<Vertex>> out;
    Vertex lo = 0;
    Vertex hi = static_cast<Vertex>(recompose().size());
    for (const auto& c : components) {
        std::vector<Vertex> positions;
        const auto a = static_cast<Vertex>(c.clique_part().size());
        const auto b = static_cast<Vertex>(c.independent_part().size());
        for (Vertex v = lo; v < lo + a; ++v)
            positions.push_back(v);
        for (Vertex v = hi - b; v < hi; ++v)
            positions.push_back(v);
        lo += a;
        hi -= b;
        out.push_back(std::move(positions));
    }
    std::vector<Vertex> rest;
    for (Vertex v = lo; v < hi; ++v)
        rest.push_back(v);
    out.push_back(std::move(rest));
    return out;
}

std::vector<OuterSplit> outer_splits(const DegreeSequence& d)
{
    std::vector<OuterSplit> out;
    const std::size_t n = d.size();
    for (std::size_t s = 1; s < n; ++s)
        for (std::size_t a = 0; a <= s; ++a)
            if (auto split = try_outer_split(d, a, s - a))
                out.push_back(std::move(*split));
    return out;
}

bool is_decomposable(const DegreeSequence& d)
{
    return !outer_splits(d).empty();
}

TyshkevichDecomposition decompose(const DegreeSequence& d)
{
    if (!is_graphic(d))
        throw NotGraphicError(d.to_string() + " is not graphic");
    TyshkevichDecomposition out{{}, d};
    // The smallest outer piece is indecomposable: a proper split of it would
    // give an even smaller outer piece of d.
    for (;;) {
        std::optional<OuterSplit> first;
        const std::size_t n = out.tail.size();
        for (std::size_t s = 1; s < n && !first; ++s)
            for (std::size_t a = 0; a <= s && !first; ++a)
                first = try_outer_split(out.tail, a, s - a);
        if (!first)
            break;
        out.components.push_back(std::move(first->outer));
        out.tail = std::move(first->rest);
    }
    if (!(out.recompose() == d))
        throw std::logic_error("decomposition of " + d.to_string() + " does not recompose");
    return out;
}

bool is_threshold(const DegreeSequence& d)
{
    const bool by_decomposition = all_single_term(decompose(d));
    const bool unique = count_realizations(d, 1) == 1;
    if (by_decomposition != unique)
        throw std::logic_error("threshold test disagrees with realization count for " + d.to_string());
    return by_decomposition;
}

std::string family_name(CompleteFamily f)
{
    return f == CompleteFamily::kHubAndLeaves ? "(n,2,1^(n))" : "(n^(n),n-1,1)";
}

DegreeSequence family_sequence(CompleteFamily f, int n)
{
    std::vector<int> terms;
    if (f == CompleteFamily::kHubAndLeaves) {
        terms = {n, 2};
        terms.insert(terms.end(), static_cast<std::size_t>(n), 1);
    } else {
        terms.assign(static_cast<std::size_t>(n), n);
        terms.push_back(n - 1);
        terms.push_back(1);
    }
    return DegreeSequence(std::move(terms));
}

std::vector<SplittedSequence> CompleteWitness::prefix() const
{
    const auto& c = decomposition.components;
    return {c.begin(), c.begin() + static_cast<long>(std::min(alpha_index, c.size()))};
}

std::string CompleteWitness::alpha_string() const
{
    return alpha_is_tail() ? decomposition.tail.to_string()
                           : decomposition.components[alpha_index].to_string();
}

std::optional<DegreeSequence> CompleteWitness::suffix() const
{
    if (alpha_is_tail())
        return std::nullopt;
    TyshkevichDecomposition rest{{decomposition.components.begin() + static_cast<long>(alpha_index) + 1,
                                  decomposition.components.end()},
                                 decomposition.tail};
    return rest.recompose();
}

std::string CompleteWitness::to_string() const
{
    std::string t;
    for (const auto& piece : prefix())
        t += (t.empty() ? "" : " ∘ ") + piece.to_string();
    const auto t_prime = suffix();
    std::ostringstream os;
    os << "K_" << n << " via " << family_name(family) << " with n=" << n
       << ": t = " << (t.empty() ? "empty" : t) << "; alpha = " << alpha_string()
       << "; t' = " << (t_prime ? t_prime->to_string() : "empty");
    return os.str();
}

std::optional<CompleteWitness> is_complete_realization_graph(const DegreeSequence& d)
{
    auto decomposition = decompose(d);
    const std::size_t pieces = decomposition.components.size() + 1;
    std::optional<std::size_t> exceptional;
    for (std::size_t k = 0; k < pieces; ++k) {
        const std::size_t size = k < decomposition.components.size()
                                     ? decomposition.components[k].size()
                                     : decomposition.tail.size();
        if (size == 1)
            continue;
        if (exceptional)
            return std::nullopt;
        exceptional = k;
    }
    if (!exceptional)
        return std::nullopt;

    const bool is_tail = *exceptional == decomposition.components.size();
    const DegreeSequence alpha = is_tail ? decomposition.tail
                                         : decomposition.components[*exceptional].as_sequence();
    const int n = static_cast<int>(alpha.size()) - 2;
    if (n < 4)
        return std::nullopt;
    for (auto family : {CompleteFamily::kHubAndLeaves, CompleteFamily::kCliqueAndPendant}) {
        if (!(alpha == family_sequence(family, n)))
            continue;
        if (!is_tail) {
            // the split side of α is forced by its realizations: the two
            // highest degrees for (n,2,1^(n)), the n degree-n terms otherwise
            const auto& piece = decomposition.components[*exceptional];
            const std::size_t clique = family == CompleteFamily::kHubAndLeaves ? 2 : static_cast<std::size_t>(n);
            if (piece.clique_part().size() != clique)
                return std::nullopt;
        }
        return CompleteWitness{n, family, std::move(decomposition), *exceptional};
    }
    return std::nullopt;
}

} // namespace rgkit
