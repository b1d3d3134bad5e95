// Exact dense linear algebra on GMP scalars: fraction-free Gaussian
// elimination for ranks and determinants. No thresholds anywhere.
#pragma once

#include <Eigen/Core>

#include "pw/exact.hpp"

namespace pw {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// Scales each row by its common denominator; preserves the row space.
IntegerMatrix clear_denominators(const RationalMatrix& a);

// Rank by fraction-free (Bareiss) elimination with full pivoting.
Eigen::Index rank_exact(IntegerMatrix a);
Eigen::Index rank_exact(const RationalMatrix& a);

// Determinant of a square integer matrix, same elimination.
Integer det_exact(IntegerMatrix a);

} // namespace pw
