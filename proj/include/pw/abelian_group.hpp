// Finitely generated abelian groups in invariant-factor form, with the
// tensor and Tor functors needed by the Kuenneth formula for pairs.
#pragma once

#include <string>
#include <vector>

namespace pw {

struct FGAbGroup {
    long long free_rank = 0;
    // Ascending divisibility chain d_1 | d_2 | ..., every d_i >= 2. The
    // canonical form makes equality structural.
    std::vector<long long> invariant_factors;

    static FGAbGroup trivial() { return {}; }
    static FGAbGroup free_of_rank(long long n) { return {n, {}}; }
    static FGAbGroup cyclic(long long n);

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const; // "0", "Z^2 + Z/2 + Z/4", ...

    friend bool operator==(const FGAbGroup&, const FGAbGroup&) = default;
};

// Normalizes an arbitrary list of cyclic orders into the divisibility
// chain (pairwise gcd/lcm exchanges until stable); drops factors of 1.
FGAbGroup canonical(long long free_rank, std::vector<long long> torsion_orders);

FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b);

// Z tensor Z = Z, Z tensor Z/n = Z/n, Z/m tensor Z/n = Z/gcd(m, n).
FGAbGroup tensor(const FGAbGroup& a, const FGAbGroup& b);

// Tor(Z, -) = 0, Tor(Z/m, Z/n) = Z/gcd(m, n).
FGAbGroup tor(const FGAbGroup& a, const FGAbGroup& b);

} // namespace pw
