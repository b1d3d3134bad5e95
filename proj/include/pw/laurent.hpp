// Bivariate Laurent polynomials with exact coefficients, dense enough for
// mixed Hodge polynomials and the graded symmetric-power generating
// function. Monomials are q^a t^b with integer (possibly negative)
// exponents; zero coefficients are never stored.
#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "pw/exact.hpp"

namespace pw {

template <class Coeff>
class BiLaurent {
public:
    // (exponent of q, exponent of t)
    using Monomial = std::pair<int, int>;
    using TermMap = std::map<Monomial, Coeff>;

    BiLaurent() = default;

    static BiLaurent term(int qe, int te, Coeff c)
    {
        BiLaurent p;
        p.add(qe, te, std::move(c));
        return p;
    }
    static BiLaurent one() { return term(0, 0, Coeff(1)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Coeff coefficient(int qe, int te) const
    {
        auto it = terms_.find({qe, te});
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(int qe, int te, const Coeff& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(Monomial{qe, te}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BiLaurent& operator+=(const BiLaurent& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m.first, m.second, c);
        return *this;
    }
    BiLaurent& operator-=(const BiLaurent& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m.first, m.second, -c);
        return *this;
    }
    BiLaurent& operator*=(const Coeff& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_)
            v *= c;
        return *this;
    }

    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
    friend BiLaurent operator*(BiLaurent a, const Coeff& c) { return a *= c; }
    friend BiLaurent operator*(const Coeff& c, BiLaurent a) { return a *= c; }

    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b)
    {
        BiLaurent out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return out;
    }

    friend bool operator==(const BiLaurent& a, const BiLaurent& b)
    {
        return a.terms_ == b.terms_;
    }

    BiLaurent pow(int n) const
    {
        if (n < 0)
            throw std::invalid_argument("negative power of a Laurent polynomial");
        BiLaurent result = one();
        BiLaurent base = *this;
        while (n > 0) {
            if (n & 1)
                result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    // q^a t^b  ->  q^(a+dq) t^(b+dt)
    BiLaurent shifted(int dq, int dt) const
    {
        BiLaurent out;
        for (const auto& [m, c] : terms_)
            out.add(m.first + dq, m.second + dt, c);
        return out;
    }

    // Monomial substitution along an exponent map, e.g. q -> 1/(q t^2) is
    // (a, b) -> (-a, b - 2a).
    BiLaurent map_exponents(const std::function<Monomial(int, int)>& f) const
    {
        BiLaurent out;
        for (const auto& [m, c] : terms_) {
            const Monomial n = f(m.first, m.second);
            out.add(n.first, n.second, c);
        }
        return out;
    }

    Coeff evaluate_ones() const
    {
        Coeff s(0);
        for (const auto& [m, c] : terms_)
            s += c;
        return s;
    }

    // Specialization q = 1: the coefficient map of the resulting t-polynomial.
    std::map<int, Coeff> specialize_q1() const
    {
        std::map<int, Coeff> out;
        for (const auto& [m, c] : terms_) {
            auto [it, inserted] = out.emplace(m.second, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
        return out;
    }

    // Divides every coefficient, throwing unless the division is exact.
    BiLaurent divide_exact_by(const Coeff& d) const
    {
        BiLaurent out;
        for (const auto& [m, c] : terms_) {
            const Coeff q = c / d;
            if (q * d != c)
                throw std::logic_error("coefficient not divisible in divide_exact_by");
            out.add(m.first, m.second, q);
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Coeff a = c;
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << "-";
            if (a < 0)
                a = -a;
            first = false;
            const bool unit_mon = m.first == 0 && m.second == 0;
            if (a != 1 || unit_mon)
                os << a;
            bool need_star = a != 1;
            if (m.first != 0) {
                if (need_star)
                    os << "*";
                os << "q";
                if (m.first != 1)
                    os << "^" << m.first;
                need_star = true;
            }
            if (m.second != 0) {
                if (need_star)
                    os << "*";
                os << "t";
                if (m.second != 1)
                    os << "^" << m.second;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

using ZLaurent = BiLaurent<Integer>;

} // namespace pw
