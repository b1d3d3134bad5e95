// Exterior algebra over Q on generators e_1 .. e_dim. Basis monomials are
// index subsets encoded as bitmasks; classes are finite rational linear
// combinations. This is the cohomology ring of a real torus of dimension
// `dim` and, degreewise, of an abelian variety of complex dimension dim/2.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pw/exact.hpp"

namespace pw {

// Generator index i in {1..dim} is present iff bit i-1 of `bits` is set.
struct ExteriorMonomial {
    std::uint32_t bits = 0;
    int dim = 0;

    int degree() const { return std::popcount(bits); }
    bool is_unit() const { return bits == 0; }
    bool contains(int generator) const { return (bits >> (generator - 1)) & 1u; }

    std::vector<int> generators() const
    {
        std::vector<int> out;
        for (int i = 1; i <= dim; ++i)
            if (contains(i))
                out.push_back(i);
        return out;
    }

    friend bool operator==(const ExteriorMonomial&, const ExteriorMonomial&) = default;
};

ExteriorMonomial monomial(int dim, std::initializer_list<int> generators);
ExteriorMonomial monomial(int dim, const std::vector<int>& generators);
inline ExteriorMonomial unit_monomial(int dim) { return ExteriorMonomial{0u, dim}; }

// Total order on monomials of a fixed algebra: degree first, then
// lexicographic on the sorted generator tuples. All bases and canonical
// representatives are listed in this order.
inline bool mask_less(std::uint32_t a, std::uint32_t b)
{
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    if (da != db)
        return da < db;
    if (a == b)
        return false;
    const std::uint32_t diff = a ^ b;
    const std::uint32_t lowest = diff & (~diff + 1u);
    return (a & lowest) != 0; // owning the lowest differing generator sorts first
}

inline bool monomial_less(const ExteriorMonomial& a, const ExteriorMonomial& b)
{
    return mask_less(a.bits, b.bits);
}

struct MonomialLess {
    bool operator()(const ExteriorMonomial& a, const ExteriorMonomial& b) const
    {
        return monomial_less(a, b);
    }
};

// Sign of e_S ^ e_T as +-1, or 0 when the index sets intersect. The sign is
// the parity of the pairs (s, t), s in S, t in T, with s > t.
int wedge_sign(const ExteriorMonomial& a, const ExteriorMonomial& b);

// All 2^dim monomials in canonical order.
std::vector<ExteriorMonomial> all_monomials(int dim);

// A finite rational combination of monomials of one fixed algebra. The zero
// class keeps its ambient dimension; coefficients of value zero are never
// stored.
class GradedClass {
public:
    using TermMap = std::map<ExteriorMonomial, Rational, MonomialLess>;

    GradedClass() = default;
    explicit GradedClass(int dim) : dim_(dim) {}
    GradedClass(const ExteriorMonomial& m, const Rational& c = 1) : dim_(m.dim)
    {
        add_term(m, c);
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const ExteriorMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExteriorMonomial& m, const Rational& c);

    GradedClass degree_component(int d) const;

    GradedClass& operator+=(const GradedClass& other);
    GradedClass& operator-=(const GradedClass& other);
    GradedClass& operator*=(const Rational& c);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
    friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }
    friend bool operator==(const GradedClass& a, const GradedClass& b)
    {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int dim_ = 0;
    TermMap terms_;
};

GradedClass wedge(const ExteriorMonomial& a, const ExteriorMonomial& b);
GradedClass wedge(const GradedClass& a, const GradedClass& b);

} // namespace pw
