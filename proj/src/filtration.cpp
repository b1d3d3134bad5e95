#include "pw/filtration.hpp"

#include <vector>

#include "pw/laurent.hpp"

namespace pw {

BigradedTable perverse_table(int g, int r, const ResourceGuard& guard)
{
    BigradedTable t;
    t.g = g;
    t.r = r;
    t.side = Side::dolbeault;
    std::map<int, long long> by_degree;
    for_each_invariant_representative(
        g, r, std::nullopt,
        [&](const std::vector<ExteriorMonomial>& rep) {
            int degree = 0;
            for (const auto& m : rep)
                degree += m.degree();
            ++by_degree[degree];
        },
        guard);
    for (const auto& [j, d] : by_degree)
        t.set(j, j, d); // perversity of a word equals its degree
    return t;
}

BigradedTable weight_table(int g, int r, const ResourceGuard& guard)
{
    guard.check_word_bits(g, r);
    // Count multisets of r torus classes, no odd-degree class repeated, by
    // total degree. Classes of degree d come in C(2g, d) flavors; choosing
    // s of them contributes C(C(2g,d), s) ways when d is odd (no repeats)
    // and multichoose C(C(2g,d)+s-1, s) ways when d is even.
    const int top = 2 * g;
    std::vector<std::vector<Integer>> count(
        static_cast<std::size_t>(r) + 1,
        std::vector<Integer>(static_cast<std::size_t>(top) * r + 1, Integer(0)));
    count[0][0] = 1;
    for (int d = 0; d <= top; ++d) {
        const Integer n_d = binomial(top, d);
        std::vector<std::vector<Integer>> next(
            count.size(), std::vector<Integer>(count[0].size(), Integer(0)));
        for (int used = 0; used <= r; ++used) {
            for (std::size_t j = 0; j < count[used].size(); ++j) {
                if (count[used][j] == 0)
                    continue;
                for (int s = 0; used + s <= r; ++s) {
                    const std::size_t nj = j + static_cast<std::size_t>(s) * d;
                    if (nj >= next[0].size())
                        break;
                    Integer ways;
                    if (d & 1) {
                        if (n_d < s)
                            break;
                        ways = binomial(n_d.get_si(), s);
                    } else {
                        ways = binomial(n_d.get_si() + s - 1, s);
                    }
                    next[used + s][nj] += count[used][j] * ways;
                }
            }
        }
        count.swap(next);
    }

    BigradedTable t;
    t.g = g;
    t.r = r;
    t.side = Side::betti;
    for (std::size_t j = 0; j < count[r].size(); ++j)
        if (count[r][j] != 0)
            t.set(static_cast<int>(j), static_cast<int>(j), to_longlong_checked(count[r][j]));
    return t;
}

BigradedTable closed_form_table(int g, int r, Side side)
{
    if (g < 1 || r < 1)
        throw std::invalid_argument("require g >= 1 and r >= 1");
    // Truncated power series in x with Laurent coefficients in (q, t).
    std::vector<ZLaurent> series(static_cast<std::size_t>(r) + 1);
    series[0] = ZLaurent::one();

    auto multiply_truncated = [&](const std::vector<ZLaurent>& factor) {
        std::vector<ZLaurent> out(series.size());
        for (std::size_t a = 0; a < series.size(); ++a) {
            if (series[a].is_zero())
                continue;
            for (std::size_t b = 0; a + b < out.size() && b < factor.size(); ++b)
                out[a + b] += series[a] * factor[b];
        }
        series.swap(out);
    };

    for (int d = 0; d <= 2 * g; ++d) {
        const Integer n_d = binomial(2 * g, d);
        std::vector<ZLaurent> factor(static_cast<std::size_t>(r) + 1);
        for (int s = 0; s <= r; ++s) {
            const Integer c = (d & 1) ? binomial(n_d.get_si(), s)
                                      : binomial(n_d.get_si() + s - 1, s);
            if (c != 0)
                factor[s] = ZLaurent::term(d * s, d * s, c);
        }
        multiply_truncated(factor);
    }

    BigradedTable t;
    t.g = g;
    t.r = r;
    t.side = side;
    for (const auto& [m, c] : series[r].terms())
        t.set(m.first, m.second, to_longlong_checked(c));
    return t;
}

PWReport verify_p_equals_w(int g, int r, const ResourceGuard& guard, bool debug_perturb)
{
    PWReport report;
    report.g = g;
    report.r = r;
    report.perverse = perverse_table(g, r, guard);
    report.weight = weight_table(g, r, guard);
    if (debug_perturb)
        report.perverse.dims[{0, 0}] += 1;
    report.odd_weight_classes = 0; // levels are half-weights; odd weights cannot occur
    report.mismatch = first_mismatch(report.perverse, report.weight);
    report.pass = !report.mismatch.has_value();
    return report;
}

} // namespace pw
