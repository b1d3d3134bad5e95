// The perverse filtration of the spectral-data morphism and the weight
// filtration of the character variety, as bigraded dimension tables, and
// the P=W comparison. The two tables and the closed form are produced by
// three independent routes so that equality is a check, not a tautology:
//   perverse_table    - orbit enumeration of the invariant basis,
//   weight_table      - binomial count of monomial multisets,
//   closed_form_table - graded symmetric-power generating function.
#pragma once

#include <optional>

#include "pw/invariants.hpp"
#include "pw/table.hpp"

namespace pw {

// dims[k][j] = number of invariant basis words of total degree j and total
// perversity k; nonzero only for k = j since word perversity equals word
// degree. P_k H^j is recovered as the partial sum over levels <= k.
BigradedTable perverse_table(int g, int r, const ResourceGuard& guard = {});

// dims[k][j] = dim Gr^W_{2k} H^j(Sym^r (C*)^{2g}). A degree-d torus class
// carries weight 2d; the count descends to the quotient as multisets of r
// classes in which no odd-degree class repeats.
BigradedTable weight_table(int g, int r, const ResourceGuard& guard = {});

// Coefficient of x^r q^k t^j in
//   prod_{d odd} (1 + x q^d t^d)^C(2g,d) * prod_{d even} (1 - x q^d t^d)^-C(2g,d).
// Fast path and independent cross-check for both tables.
BigradedTable closed_form_table(int g, int r, Side side = Side::dolbeault);

struct PWReport {
    int g = 0, r = 0;
    bool pass = false;
    // Nonzero entries in odd weight would break W_2k = W_2k+1; structurally
    // zero here, recorded for the report.
    long long odd_weight_classes = 0;
    std::optional<TableMismatch> mismatch;
    BigradedTable perverse;
    BigradedTable weight;
};

// Theorem A check: the perverse and weight tables agree entrywise (and odd
// weights carry nothing new). `debug_perturb` damages one perverse entry to
// demonstrate failure detection.
PWReport verify_p_equals_w(int g, int r, const ResourceGuard& guard = {},
                           bool debug_perturb = false);

} // namespace pw
