#include "pw/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pw {

FGAbGroup FGAbGroup::cyclic(long long n)
{
    if (n < 0)
        throw std::invalid_argument("cyclic group order must be nonnegative");
    if (n == 0)
        return free_of_rank(1); // Z/0 = Z
    return canonical(0, {n});
}

std::string FGAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first)
            os << " \xE2\x8A\x95 "; // direct sum sign
        first = false;
    };
    if (free_rank > 0) {
        sep();
        os << "Z";
        if (free_rank > 1)
            os << "^" << free_rank;
    }
    for (long long d : invariant_factors) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

FGAbGroup canonical(long long free_rank, std::vector<long long> torsion_orders)
{
    for (long long d : torsion_orders)
        if (d < 1)
            throw std::invalid_argument("torsion order must be positive");
    std::erase(torsion_orders, 1LL);
    // Replace pairs (a, b) by (gcd, lcm) until the list is a chain. Each
    // exchange preserves the group and strictly increases divisibility
    // order, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < torsion_orders.size(); ++i)
            for (std::size_t j = i + 1; j < torsion_orders.size(); ++j) {
                long long a = torsion_orders[i];
                long long b = torsion_orders[j];
                if (b % a == 0 || a % b == 0)
                    continue;
                const long long g = std::gcd(a, b);
                torsion_orders[i] = g;
                torsion_orders[j] = (a / g) * b;
                changed = true;
            }
    }
    std::erase(torsion_orders, 1LL);
    std::sort(torsion_orders.begin(), torsion_orders.end());
    return FGAbGroup{free_rank, std::move(torsion_orders)};
}

FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b)
{
    std::vector<long long> torsion = a.invariant_factors;
    torsion.insert(torsion.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    return canonical(a.free_rank + b.free_rank, std::move(torsion));
}

FGAbGroup tensor(const FGAbGroup& a, const FGAbGroup& b)
{
    std::vector<long long> torsion;
    // free x torsion and torsion x torsion parts; free x free is free.
    for (long long d : b.invariant_factors)
        for (long long i = 0; i < a.free_rank; ++i)
            torsion.push_back(d);
    for (long long d : a.invariant_factors)
        for (long long i = 0; i < b.free_rank; ++i)
            torsion.push_back(d);
    for (long long da : a.invariant_factors)
        for (long long db : b.invariant_factors)
            torsion.push_back(std::gcd(da, db));
    return canonical(a.free_rank * b.free_rank, std::move(torsion));
}

FGAbGroup tor(const FGAbGroup& a, const FGAbGroup& b)
{
    std::vector<long long> torsion;
    for (long long da : a.invariant_factors)
        for (long long db : b.invariant_factors)
            torsion.push_back(std::gcd(da, db));
    return canonical(0, std::move(torsion));
}

} // namespace pw
