// Mixed Hodge polynomial of the character variety via cycle types, the
// curious Poincare duality functional equation, and the Hodge-Tate support
// check.
#pragma once

#include <optional>
#include <vector>

#include "pw/invariants.hpp"
#include "pw/laurent.hpp"
#include "pw/table.hpp"

namespace pw {

// A conjugacy class of S_r: the multiset of cycle lengths.
struct CycleType {
    std::vector<int> parts; // weakly decreasing, summing to r

    int r() const;
    // z_lambda = prod over part sizes i of i^{m_i} m_i!
    Integer centralizer_order() const;
    // |conjugacy class| = r! / z_lambda
    Integer class_size() const;
};

std::vector<CycleType> cycle_types(int r);

// H(q, t) = (1/r!) sum_sigma det(I_r + qt A_sigma)^{2g}, summed per cycle
// type; det(I + u A_sigma) = prod over cycles (1 - (-u)^len). Coefficient
// of q^k t^j equals the weight table entry at (k, j).
ZLaurent mixed_hodge_polynomial(int g, int r);

struct DualityReport {
    int g = 0, r = 0;
    bool pass = false;
    ZLaurent polynomial;
    // First monomial of H(q,t) - (qt)^{2gr} H(1/(q t^2), t) when nonzero.
    std::optional<std::pair<std::pair<int, int>, Integer>> offending;
};

// Curious Poincare duality: H(1/(q t^2), t) = (qt)^{-2gr} H(q, t) exactly.
DualityReport verify_curious_duality(int g, int r, bool debug_perturb = false);

struct HodgeTateReport {
    int g = 0, r = 0;
    bool pass = false;
    long long classes = 0;          // total dimension inspected
    long long odd_weight_classes = 0; // must stay 0
    bool polynomial_matches_table = false;
};

// Hodge-Tate support: every graded piece sits in even weight 2k, and the
// cycle-type polynomial agrees with the weight table coefficientwise (so
// h^{p,q;j} vanishes off p = q = k).
HodgeTateReport hodge_tate_check(int g, int r, const ResourceGuard& guard = {},
                                 bool debug_perturb = false);

} // namespace pw
