// The hyperplane class on the symmetric product, its cup-product matrices
// in the invariant basis, and the curious hard Lefschetz rank check.
#pragma once

#include <map>
#include <vector>

#include "pw/invariants.hpp"
#include "pw/linalg.hpp"

namespace pw {

// L = sum over slots of 1 x ... x omega x ... x 1 with the standard
// symplectic form omega = sum_i e_i ^ e_{g+i}; an integer combination of
// degree-2 invariant basis words.
InvariantClass hyperplane_class(int g, int r);

// Positive combinations sum_i c_i e_i ^ e_{g+i} stay inside the Kaehler
// cone; used to probe hardness beyond the canonical choice.
InvariantClass hyperplane_class_weighted(int g, int r, const std::vector<long>& weights);

// Cup-with-L as exact matrices between graded pieces of the invariant
// basis, one per degree.
struct LefschetzOperator {
    int g = 0, r = 0;
    InvariantClass L;
    std::vector<std::vector<InvariantWord>> basis_by_degree; // index = degree 0..2gr
    std::map<int, RationalMatrix> steps; // degree j -> matrix of L: H^j -> H^{j+2}

    // Matrix of L^k from degree j, the composition of k steps.
    RationalMatrix power_matrix(int j, int k) const;
};

LefschetzOperator make_lefschetz_operator(int g, int r, const InvariantClass& L,
                                          const ResourceGuard& guard = {});

struct HardLefschetzLevel {
    int k = 0;
    long long source_dim = 0;
    long long target_dim = 0;
    long long rank = 0;
    bool pass = false;
};

struct HardLefschetzReport {
    int g = 0, r = 0;
    bool pass = false;
    std::vector<HardLefschetzLevel> levels;
};

// Theorem B(ii) reduced to ranks: for k = 1..gr the matrix of L^k from
// degree gr-k to gr+k has rank equal to both graded dimensions. Both
// filtrations are concentrated on the diagonal, so this is the whole
// curious statement. `debug_perturb` zeroes one matrix column.
HardLefschetzReport verify_hard_lefschetz(int g, int r, const ResourceGuard& guard = {},
                                          bool debug_perturb = false);
HardLefschetzReport verify_hard_lefschetz(int g, int r, const InvariantClass& L,
                                          const ResourceGuard& guard = {},
                                          bool debug_perturb = false);

} // namespace pw
