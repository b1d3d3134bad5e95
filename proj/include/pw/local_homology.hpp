// Local homology of the sphere quotient S^{2gr-1}/S_r at a Z/2-stabilizer
// point, assembled by the Kuenneth formula for pairs, and the manifold
// obstruction / rational homology sphere checks that hang off it.
#pragma once

#include <map>
#include <string>

#include "pw/abelian_group.hpp"

namespace pw {

// Degreewise H_i(Z, Z - {p}); zero outside [0, top_degree].
struct PairHomologyTable {
    std::map<int, FGAbGroup> groups; // only nontrivial entries stored
    int top_degree = 0;

    FGAbGroup at(int i) const
    {
        auto it = groups.find(i);
        return it == groups.end() ? FGAbGroup::trivial() : it->second;
    }
    void set(int i, FGAbGroup grp)
    {
        if (!grp.is_trivial())
            groups[i] = std::move(grp);
    }

    friend bool operator==(const PairHomologyTable& a, const PairHomologyTable& b)
    {
        return a.groups == b.groups;
    }

    std::string to_string() const; // one "i: Z^a + Z/d + ..." line per degree
};

// H_s(B^k, B^k - {0}): Z in degree k, zero elsewhere.
PairHomologyTable ball_pair(int k);

// H_t(C(RP^m), C(RP^m) - {cone point}) for odd m: Z at t = m+1 and Z/2 at
// every even t with 1 < t < m+1. Even m is unsupported (never needed: here
// m = 2g-1).
PairHomologyTable cone_rp_pair(int m);

// Degree i of the product pair: sum over s+t=i of tensor terms plus
// s+t=i-1 of Tor terms.
PairHomologyTable kunneth_pairs(const PairHomologyTable& a, const PairHomologyTable& b);

// A point of an n-manifold: Z in degree n.
PairHomologyTable manifold_local_model(int n);

// What the Kuenneth computation must produce at a Z/2-stabilizer point of
// S^{2gr-1}/S_r: Z at N = 2gr-1, Z/2 at odd i with N-2g+1 < i < N.
PairHomologyTable stabilizer_local_homology_closed_form(int g, int r);

struct ManifoldReport {
    int g = 0, r = 0;
    bool vacuous = false; // r = 1: no stabilizer point to test
    bool is_obstructed = false;
    bool matches_closed_form = false;
    bool obstruction_as_predicted = false; // obstructed exactly when g,r >= 2
    bool pass = false;
    PairHomologyTable local_homology;
    PairHomologyTable manifold_model;
};

// Compares the Kuenneth local homology against the manifold model; the
// quotient fails to be a manifold exactly when the tables differ.
ManifoldReport manifold_obstruction(int g, int r, bool debug_perturb = false);

struct RationalSphereReport {
    int g = 0, r = 0;
    bool pass = false;
    bool determinant_one = false;         // block permutations preserve orientation
    std::map<int, long long> rational_dims; // dim_Q H_i(S^{2gr-1}/S_r; Q)
};

// H_*(S^{2gr-1}/S_r; Q) as invariants of the sphere homology: the block
// permutation action has determinant one (verified by exact determinants),
// so the result is Q in degrees 0 and 2gr-1 only.
RationalSphereReport rational_sphere_check(int g, int r, bool debug_perturb = false);

} // namespace pw
