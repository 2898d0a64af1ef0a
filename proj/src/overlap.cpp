#include "rgkit/overlap.hpp"

#include "rgkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rgkit {

namespace {

bool contains(RealizationSubset s, int i) { return (s >> i) & 1U; }

std::vector<int> column_values(const OverlapSolution& s)
{
    std::vector<int> out;
    for (auto col : overlap_columns())
        out.push_back(col == kAllFour ? s[col].constant : s[col].at(0));
    return out;
}

RealizationSubset permute(RealizationSubset s, const std::array<int, 4>& perm)
{
    RealizationSubset out = 0;
    for (int i = 0; i < 4; ++i)
        if (contains(s, i))
            out |= 1U << perm[i];
    return out;
}

std::vector<int> orbit_representative(const OverlapSolution& s)
{
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<int> best;
    do {
        OverlapSolution moved;
        for (RealizationSubset m = 1; m <= kAllFour; ++m)
            moved.values[permute(m, perm)] = s.values[m];
        auto values = column_values(moved);
        if (best.empty() || values < best)
            best = std::move(values);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int pair_total(const OverlapSolution& s)
{
    int total = 0;
    for (RealizationSubset m = 1; m < kAllFour; ++m)
        if (std::popcount(m) == 2)
            total += s[m].constant;
    return total;
}

// The realization whose singleton count differs from the other three, or 0
// when all four agree.
int singled_out(const OverlapSolution& s)
{
    for (int i = 0; i < 4; ++i) {
        int same = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i && s[1U << j].constant == s[1U << i].constant)
                ++same;
        if (same == 0)
            return i + 1;
    }
    return 0;
}

} // namespace

std::string OverlapEntry::to_string() const
{
    if (coeff_m == 0)
        return std::to_string(constant);
    std::string out = coeff_m == 1 ? "m" : std::to_string(coeff_m) + "m";
    if (constant > 0)
        out += "+" + std::to_string(constant);
    else if (constant < 0)
        out += std::to_string(constant);
    return out;
}

const std::array<RealizationSubset, 15>& overlap_columns()
{
    static const std::array<RealizationSubset, 15> columns{
        0b0001, 0b0010, 0b0100, 0b1000,                 // s_1 .. s_4
        0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // s_12 .. s_34
        0b1110, 0b1101, 0b1011, 0b0111,                 // s_234, s_134, s_124, s_123
        0b1111};
    return columns;
}

std::string subset_name(RealizationSubset s)
{
    std::string out = "s_";
    for (int i = 0; i < 4; ++i)
        if (contains(s, i))
            out += static_cast<char>('1' + i);
    return out;
}

std::vector<OverlapSolution> solve_overlap_system()
{
    std::vector<OverlapSolution> out;
    // proper nonempty subsets are masks 1..14; assignment bit (mask - 1)
    for (unsigned assignment = 0; assignment < (1U << 14); ++assignment) {
        auto s = [assignment](RealizationSubset m) { return static_cast<int>((assignment >> (m - 1)) & 1U); };

        // edge count of R_i is s_1234 + c_i; all four must agree
        int c = -1;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            int ci = 0;
            for (RealizationSubset m = 1; m < kAllFour; ++m)
                if (contains(m, i))
                    ci += s(m);
            ok = c < 0 || ci == c;
            c = ci;
        }
        // R_i has exactly two edges that R_j lacks
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j) {
                int only = 0;
                for (RealizationSubset m = 1; m < kAllFour; ++m)
                    if (contains(m, i) && !contains(m, j))
                        only += s(m);
                ok = only == 2;
            }
        if (!ok || c > 4)
            continue;

        OverlapSolution sol;
        for (RealizationSubset m = 1; m < kAllFour; ++m)
            sol.values[m] = OverlapEntry{0, s(m)};
        sol.values[kAllFour] = OverlapEntry{1, -c};
        out.push_back(sol);
    }

    auto key = [](const OverlapSolution& s) {
        return std::make_tuple(-s[kAllFour].constant, -pair_total(s), orbit_representative(s),
                               singled_out(s), column_values(s));
    };
    std::sort(out.begin(), out.end(),
              [&key](const OverlapSolution& a, const OverlapSolution& b) { return key(a) < key(b); });
    return out;
}

std::vector<OverlapSolution> filter_overlap_solutions(const std::vector<OverlapSolution>& sols)
{
    std::vector<OverlapSolution> out;
    for (const auto& s : sols) {
        bool violates = false;
        for (int i = 0; i < 4 && !violates; ++i)
            for (int j = 0; j < 4 && !violates; ++j)
                for (int k = j + 1; k < 4 && !violates; ++k) {
                    if (i == j || i == k)
                        continue;
                    const auto a = static_cast<RealizationSubset>((1U << i) | (1U << j));
                    const auto b = static_cast<RealizationSubset>((1U << i) | (1U << k));
                    violates = s[a].at(0) + s[b].at(0) > 1;
                }
        if (!violates)
            out.push_back(s);
    }
    return out;
}

std::vector<int> overlap_orbits(const std::vector<OverlapSolution>& sols)
{
    std::vector<int> out;
    std::map<std::vector<int>, int> seen;
    for (const auto& s : sols) {
        auto rep = orbit_representative(s);
        auto [it, fresh] = seen.try_emplace(rep, static_cast<int>(seen.size()));
        out.push_back(it->second);
    }
    return out;
}

bool OverlapCounts::matches(const OverlapSolution& s) const
{
    for (RealizationSubset m = 1; m <= kAllFour; ++m)
        if (by_subset[m] != s[m].at(edge_count))
            return false;
    return true;
}

OverlapCounts measure_overlaps(const std::vector<LabeledGraph>& four)
{
    if (four.size() != 4)
        throw std::invalid_argument("overlap counts need exactly four realizations");
    const auto degrees = four.front().degrees();
    for (const auto& g : four)
        if (g.vertex_count() != four.front().vertex_count() || g.degrees() != degrees)
            throw MixedSequenceError("realizations do not share one degree sequence");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (four[i] == four[j])
                throw std::invalid_argument("overlap counts need four distinct realizations");

    OverlapCounts counts;
    counts.edge_count = static_cast<int>(four.front().edge_count());
    const int n = four.front().vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            RealizationSubset present = 0;
            for (int i = 0; i < 4; ++i)
                if (four[i].adjacent(a, b))
                    present |= 1U << i;
            if (present)
                ++counts.by_subset[present];
        }
    return counts;
}

std::string format_overlap_table(const std::vector<OverlapSolution>& sols)
{
    std::ostringstream os;
    const auto orbits = overlap_orbits(sols);
    std::vector<std::string> header;
    for (auto col : overlap_columns())
        header.push_back(subset_name(col));
    const std::size_t width = 7;
    auto cell = [width](const std::string& text) {
        return text + std::string(width > text.size() ? width - text.size() : 1, ' ');
    };
    std::string head;
    for (const auto& h : header)
        head += cell(h);
    while (!head.empty() && head.back() == ' ')
        head.pop_back();
    const std::string rule(head.size(), '-');
    os << head << '\n' << rule << '\n';
    for (std::size_t r = 0; r < sols.size(); ++r) {
        if (r > 0 && orbits[r] != orbits[r - 1])
            os << rule << '\n';
        std::string line;
        for (auto col : overlap_columns())
            line += cell(sols[r][col].to_string());
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

} // namespace rgkit
