#include "rgkit/realization.hpp"

#include "rgkit/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace rgkit {

bool is_graphic_list(std::vector<int> terms)
{
    const auto n = static_cast<long long>(terms.size());
    if (n == 0)
        return true;
    std::sort(terms.begin(), terms.end(), std::greater<>());
    if (terms.back() < 0 || terms.front() > n - 1)
        return false;
    long long total = 0;
    for (int t : terms)
        total += t;
    if (total % 2 != 0)
        return false;

    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += terms[k - 1];
        long long rhs = k * (k - 1);
        for (long long i = k; i < n; ++i)
            rhs += std::min<long long>(terms[i], k);
        if (prefix > rhs)
            return false;
    }
    return true;
}

bool is_graphic(const DegreeSequence& d)
{
    return is_graphic_list(d.terms());
}

namespace {

// Vertices are completed in label order. Vertex i picks its remaining
// neighbours among higher labels; pairs among unprocessed vertices are all
// still free, so "the residual degrees of i+1..n-1 are graphic" is an exact
// feasibility test and every branch that passes it reaches a realization.
class Enumerator {
public:
    Enumerator(const DegreeSequence& d, std::size_t limit)
        : n_(static_cast<int>(d.size())), residual_(d.terms()),
          rows_(static_cast<std::size_t>(n_), 0), limit_(limit) {}

    void run(const std::function<void(const std::vector<std::uint64_t>&)>& emit)
    {
        emit_ = &emit;
        visit_vertex(0);
    }

private:
    void visit_vertex(int i)
    {
        if (i == n_) {
            if (++count_ > limit_)
                throw LimitExceededError(limit_, count_);
            (*emit_)(rows_);
            return;
        }
        choose(i, i + 1, residual_[i]);
    }

    void choose(int i, int next, int need)
    {
        if (need == 0) {
            if (residual_tail_graphic(i + 1))
                visit_vertex(i + 1);
            return;
        }
        for (int j = next; j < n_; ++j) {
            if (residual_[j] == 0)
                continue;
            rows_[i] |= std::uint64_t{1} << j;
            rows_[j] |= std::uint64_t{1} << i;
            --residual_[j];
            choose(i, j + 1, need - 1);
            ++residual_[j];
            rows_[i] &= ~(std::uint64_t{1} << j);
            rows_[j] &= ~(std::uint64_t{1} << i);
        }
    }

    bool residual_tail_graphic(int from) const
    {
        return is_graphic_list(std::vector<int>(residual_.begin() + from, residual_.end()));
    }

    int n_;
    std::vector<int> residual_;
    std::vector<std::uint64_t> rows_;
    std::size_t limit_;
    std::size_t count_ = 0;
    const std::function<void(const std::vector<std::uint64_t>&)>* emit_ = nullptr;
};

} // namespace

RealizationSet enumerate_realizations(const DegreeSequence& d, std::size_t limit)
{
    if (!is_graphic(d))
        throw NotGraphicError(d.to_string() + " is not graphic");
    RealizationSet out{d, {}};
    Enumerator(d, limit).run([&out](const std::vector<std::uint64_t>& rows) {
        out.realizations.push_back(LabeledGraph::from_rows(rows));
    });
    std::sort(out.realizations.begin(), out.realizations.end());
    return out;
}

std::size_t count_realizations(const DegreeSequence& d, std::size_t limit)
{
    if (!is_graphic(d))
        return 0;
    std::size_t count = 0;
    try {
        Enumerator(d, limit).run([&count](const std::vector<std::uint64_t>&) { ++count; });
    } catch (const LimitExceededError& e) {
        return e.partial_count();
    }
    return count;
}

} // namespace rgkit
