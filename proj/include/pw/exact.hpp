// Exact scalar types shared across the library. Filtration dimensions,
// ranks and polynomial coefficients are kept in exact arithmetic; floating
// point only enters through the analytic correspondence maps (nah.hpp).
#pragma once

#include <stdexcept>

#include <Eigen/Core>
#include <gmpxx.h>

namespace pw {

using Rational = mpq_class;
using Integer = mpz_class;

// Quotient with a divisibility guarantee. Several formulas divide a summed
// integer quantity by a group order; a nonzero remainder means the
// surrounding sign or counting convention is wrong, so this throws instead
// of truncating.
inline Integer divide_exact(const Integer& a, const Integer& b)
{
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

inline long long to_longlong_checked(const Integer& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer value does not fit a machine long");
    return static_cast<long long>(v.get_si());
}

inline Integer factorial(int n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace pw

// Let Eigen handle dense matrices of GMP scalars; the library only relies
// on storage, coefficient access and the coefficient-wise product path.
namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <> struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 80
    };
};

} // namespace Eigen
