#include "pw/linalg.hpp"

#include <stdexcept>

namespace pw {

namespace {

// Bareiss elimination in place. Returns the rank; when `det` is non-null
// the matrix must be square and *det receives the determinant.
Eigen::Index bareiss(IntegerMatrix& a, Integer* det)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Integer prev = 1;
    int det_sign = 1;
    Eigen::Index rank = 0;

    for (Eigen::Index step = 0; step < rows && step < cols; ++step) {
        // Full pivoting on the smallest nonzero entry (by bit length) keeps
        // the fraction-free minors from blowing up on sparse input.
        Eigen::Index pr = -1, pc = -1;
        std::size_t best = 0;
        for (Eigen::Index i = step; i < rows; ++i)
            for (Eigen::Index j = step; j < cols; ++j) {
                const Integer& v = a(i, j);
                if (v == 0)
                    continue;
                const std::size_t size = mpz_sizeinbase(v.get_mpz_t(), 2);
                if (pr < 0 || size < best) {
                    best = size;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        if (pr != step) {
            a.row(pr).swap(a.row(step));
            det_sign = -det_sign;
        }
        if (pc != step) {
            a.col(pc).swap(a.col(step));
            det_sign = -det_sign;
        }

        for (Eigen::Index i = step + 1; i < rows; ++i) {
            for (Eigen::Index j = step + 1; j < cols; ++j) {
                Integer v = a(step, step) * a(i, j) - a(i, step) * a(step, j);
                a(i, j) = divide_exact(v, prev);
            }
            a(i, step) = 0;
        }
        prev = a(step, step);
        ++rank;
    }

    if (det) {
        if (rows != cols)
            throw std::invalid_argument("determinant of a non-square matrix");
        if (rank < rows)
            *det = 0;
        else
            *det = det_sign > 0 ? prev : Integer(-prev);
    }
    return rank;
}

} // namespace

IntegerMatrix clear_denominators(const RationalMatrix& a)
{
    IntegerMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Integer lcm = 1;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Integer den = a(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Rational scaled = a(i, j) * Rational(lcm);
            if (scaled.get_den() != 1)
                throw std::logic_error("row denominator clearing failed");
            out(i, j) = scaled.get_num();
        }
    }
    return out;
}

Eigen::Index rank_exact(IntegerMatrix a)
{
    return bareiss(a, nullptr);
}

Eigen::Index rank_exact(const RationalMatrix& a)
{
    IntegerMatrix b = clear_denominators(a);
    return bareiss(b, nullptr);
}

Integer det_exact(IntegerMatrix a)
{
    Integer det;
    bareiss(a, &det);
    return det;
}

} // namespace pw
