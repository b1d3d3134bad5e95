#include "pw/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace pw {

ExteriorMonomial monomial(int dim, std::initializer_list<int> generators)
{
    return monomial(dim, std::vector<int>(generators));
}

ExteriorMonomial monomial(int dim, const std::vector<int>& generators)
{
    if (dim < 0 || dim > 30)
        throw std::invalid_argument("ambient dimension out of range");
    ExteriorMonomial m{0u, dim};
    for (int i : generators) {
        if (i < 1 || i > dim)
            throw std::invalid_argument("generator index outside {1..dim}");
        if (m.contains(i))
            throw std::invalid_argument("repeated generator in monomial");
        m.bits |= 1u << (i - 1);
    }
    return m;
}

int wedge_sign(const ExteriorMonomial& a, const ExteriorMonomial& b)
{
    if (a.dim != b.dim)
        throw std::invalid_argument("wedge of monomials with mismatched ambient dimension");
    if (a.bits & b.bits)
        return 0;
    // For each generator t of b, count the generators of a above t.
    int crossings = 0;
    std::uint32_t tb = b.bits;
    while (tb) {
        const int t = std::countr_zero(tb) + 1;
        crossings += std::popcount(a.bits >> t);
        tb &= tb - 1;
    }
    return (crossings & 1) ? -1 : 1;
}

std::vector<ExteriorMonomial> all_monomials(int dim)
{
    std::vector<ExteriorMonomial> out;
    out.reserve(std::size_t{1} << dim);
    for (std::uint32_t bits = 0; bits < (1u << dim); ++bits)
        out.push_back(ExteriorMonomial{bits, dim});
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

void GradedClass::add_term(const ExteriorMonomial& m, const Rational& c)
{
    if (dim_ == 0 && terms_.empty())
        dim_ = m.dim;
    if (m.dim != dim_)
        throw std::invalid_argument("mixed ambient dimensions in one class");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedClass GradedClass::degree_component(int d) const
{
    GradedClass out(dim_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            out.add_term(m, c);
    return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string GradedClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational a = abs(c);
        if (a != 1 || m.is_unit())
            os << a.get_str() << (m.is_unit() ? "" : "*");
        if (!m.is_unit()) {
            os << "e{";
            bool g_first = true;
            for (int i : m.generators()) {
                if (!g_first)
                    os << ",";
                g_first = false;
                os << i;
            }
            os << "}";
        }
    }
    return os.str();
}

GradedClass wedge(const ExteriorMonomial& a, const ExteriorMonomial& b)
{
    GradedClass out(a.dim);
    const int s = wedge_sign(a, b);
    if (s != 0)
        out.add_term(ExteriorMonomial{a.bits | b.bits, a.dim}, s);
    return out;
}

GradedClass wedge(const GradedClass& a, const GradedClass& b)
{
    if (!a.is_zero() && !b.is_zero() && a.dim() != b.dim())
        throw std::invalid_argument("wedge of classes with mismatched ambient dimension");
    GradedClass out(a.dim() ? a.dim() : b.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const int s = wedge_sign(ma, mb);
            if (s != 0)
                out.add_term(ExteriorMonomial{ma.bits | mb.bits, ma.dim}, ca * cb * s);
        }
    return out;
}

} // namespace pw
