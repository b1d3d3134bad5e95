#include "pw/hodge.hpp"

#include <numeric>

#include "pw/filtration.hpp"

namespace pw {

int CycleType::r() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Integer CycleType::centralizer_order() const
{
    Integer z = 1;
    int run_length = 0;
    int prev = 0;
    for (int p : parts) {
        z *= p;
        if (p == prev)
            ++run_length;
        else
            run_length = 1;
        z *= run_length;
        prev = p;
    }
    return z;
}

Integer CycleType::class_size() const
{
    return divide_exact(factorial(r()), centralizer_order());
}

std::vector<CycleType> cycle_types(int r)
{
    std::vector<CycleType> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(CycleType{parts});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

ZLaurent mixed_hodge_polynomial(int g, int r)
{
    if (g < 1 || r < 1)
        throw std::invalid_argument("require g >= 1 and r >= 1");
    ZLaurent sum;
    for (const CycleType& lambda : cycle_types(r)) {
        ZLaurent term = ZLaurent::one();
        for (int len : lambda.parts) {
            // 1 - (-qt)^len
            ZLaurent cyc = ZLaurent::one();
            cyc.add(len, len, (len & 1) ? Integer(1) : Integer(-1));
            term = term * cyc;
        }
        sum += term.pow(2 * g) * lambda.class_size();
    }
    return sum.divide_exact_by(factorial(r));
}

DualityReport verify_curious_duality(int g, int r, bool debug_perturb)
{
    DualityReport report;
    report.g = g;
    report.r = r;
    report.polynomial = mixed_hodge_polynomial(g, r);

    ZLaurent h = report.polynomial;
    if (debug_perturb)
        h.add(0, 0, 1);

    // q -> 1/(q t^2) sends q^a t^b to q^-a t^(b-2a); then shift by (qt)^{2gr}.
    const ZLaurent lhs =
        h.map_exponents([](int a, int b) { return std::pair<int, int>{-a, b - 2 * a}; })
            .shifted(2 * g * r, 2 * g * r);
    ZLaurent difference = h;
    difference -= lhs;
    report.pass = difference.is_zero();
    if (!report.pass) {
        const auto& [m, c] = *difference.terms().begin();
        report.offending = {{m.first, m.second}, c};
    }
    return report;
}

HodgeTateReport hodge_tate_check(int g, int r, const ResourceGuard& guard, bool debug_perturb)
{
    HodgeTateReport report;
    report.g = g;
    report.r = r;

    const BigradedTable weights = weight_table(g, r, guard);

    // Weight support: each stored level k is the half-weight of a weight
    // 2k piece; collect (weight, dimension) and look for odd weights.
    std::vector<std::pair<long long, long long>> support;
    for (const auto& [kj, d] : weights.dims)
        support.push_back({2LL * kj.first, d});
    if (debug_perturb && !support.empty())
        support.front().first += 1;

    report.odd_weight_classes = 0;
    for (const auto& [w, d] : support) {
        report.classes += d;
        if (w % 2 != 0)
            report.odd_weight_classes += d;
    }

    // h^{k,k;j} from the cycle-type polynomial must reproduce the table.
    const ZLaurent h = mixed_hodge_polynomial(g, r);
    report.polynomial_matches_table = true;
    for (const auto& [m, c] : h.terms())
        if (Integer(static_cast<long>(weights.dim(m.first, m.second))) != c)
            report.polynomial_matches_table = false;
    for (const auto& [kj, d] : weights.dims)
        if (h.coefficient(kj.first, kj.second) != static_cast<long>(d))
            report.polynomial_matches_table = false;

    report.pass = report.odd_weight_classes == 0 && report.polynomial_matches_table;
    return report;
}

} // namespace pw
