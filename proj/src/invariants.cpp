#include "pw/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pw {

namespace {

std::vector<std::uint32_t> masks_of(const std::vector<ExteriorMonomial>& factors)
{
    std::vector<std::uint32_t> key(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        key[i] = factors[i].bits;
    return key;
}

std::vector<ExteriorMonomial> factors_of(const std::vector<std::uint32_t>& key, int dim)
{
    std::vector<ExteriorMonomial> factors(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
        factors[i] = ExteriorMonomial{key[i], dim};
    return factors;
}

bool weakly_sorted(const std::vector<std::uint32_t>& key)
{
    for (std::size_t i = 1; i < key.size(); ++i)
        if (mask_less(key[i], key[i - 1]))
            return false;
    return true;
}

bool has_odd_repeat(const std::vector<std::uint32_t>& key)
{
    for (std::size_t i = 1; i < key.size(); ++i)
        if (key[i] == key[i - 1] && (std::popcount(key[i]) & 1))
            return true;
    return false;
}

// Sign of one arrangement relative to the sorted representative: parity of
// the inversions among the odd-degree factors. Well defined because a
// representative never repeats an odd-degree monomial.
int arrangement_sign(const std::vector<std::uint32_t>& arrangement)
{
    int inversions = 0;
    const std::size_t n = arrangement.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::popcount(arrangement[i]) & 1))
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(std::popcount(arrangement[j]) & 1))
                continue;
            if (mask_less(arrangement[j], arrangement[i]))
                ++inversions;
        }
    }
    return (inversions & 1) ? -1 : 1;
}

} // namespace

bool is_permutation(const Permutation& sigma)
{
    std::vector<char> seen(sigma.size(), 0);
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

int TensorWord::total_degree() const
{
    int d = 0;
    for (const auto& f : factors)
        d += f.degree();
    return d;
}

int koszul_sign(const Permutation& sigma, const std::vector<ExteriorMonomial>& factors)
{
    if (sigma.size() != factors.size() || !is_permutation(sigma))
        throw std::invalid_argument("not a permutation of the word length");
    int inversions = 0;
    const std::size_t n = sigma.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(factors[i].degree() & 1))
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(factors[j].degree() & 1))
                continue;
            if (sigma[i] > sigma[j])
                ++inversions;
        }
    }
    return (inversions & 1) ? -1 : 1;
}

TensorWord permute_word(const Permutation& sigma, const TensorWord& w)
{
    const int s = koszul_sign(sigma, w.factors);
    TensorWord out;
    out.factors.resize(w.factors.size());
    for (std::size_t i = 0; i < w.factors.size(); ++i)
        out.factors[sigma[i]] = w.factors[i];
    out.coefficient = w.coefficient * s;
    return out;
}

int InvariantWord::degree() const
{
    int d = 0;
    for (const auto& f : representative)
        d += f.degree();
    return d;
}

std::vector<TensorWord> InvariantWord::orbit_sum(long max_terms) const
{
    std::vector<std::uint32_t> key = masks_of(representative);
    if (!weakly_sorted(key))
        throw std::invalid_argument("representative tuple is not sorted");
    if (has_odd_repeat(key))
        throw std::invalid_argument("representative repeats an odd-degree monomial; orbit sum vanishes");

    const int dim = representative.empty() ? 0 : representative.front().dim;
    std::vector<TensorWord> out;
    std::vector<std::uint32_t> arrangement = key;
    long count = 0;
    do {
        if (++count > max_terms)
            throw ResourceError("orbit expansion exceeds the term bound");
        TensorWord w;
        w.factors = factors_of(arrangement, dim);
        w.coefficient = arrangement_sign(arrangement);
        out.push_back(std::move(w));
    } while (std::next_permutation(arrangement.begin(), arrangement.end(), mask_less));
    return out;
}

void for_each_invariant_representative(
    int g, int r, std::optional<int> degree_filter,
    const std::function<void(const std::vector<ExteriorMonomial>&)>& fn,
    const ResourceGuard& guard)
{
    guard.check_word_bits(g, r);
    const std::vector<ExteriorMonomial> mons = all_monomials(2 * g);
    std::vector<ExteriorMonomial> tuple;
    tuple.reserve(r);

    // Weakly increasing tuples over the ordered monomial list; a monomial of
    // odd degree may not be taken twice.
    auto rec = [&](auto&& self, std::size_t from, int slots_left, int degree_so_far) -> void {
        if (slots_left == 0) {
            if (!degree_filter || degree_so_far == *degree_filter)
                fn(tuple);
            return;
        }
        if (degree_filter) {
            if (degree_so_far > *degree_filter)
                return;
            if (degree_so_far + slots_left * 2 * g < *degree_filter)
                return;
        }
        for (std::size_t i = from; i < mons.size(); ++i) {
            const bool odd = mons[i].degree() & 1;
            if (odd && !tuple.empty() && tuple.back() == mons[i])
                continue;
            tuple.push_back(mons[i]);
            self(self, i, slots_left - 1, degree_so_far + mons[i].degree());
            tuple.pop_back();
        }
    };
    rec(rec, 0, r, 0);
}

std::vector<InvariantWord> invariant_basis(int g, int r, std::optional<int> degree_filter,
                                           const ResourceGuard& guard)
{
    std::vector<InvariantWord> basis;
    for_each_invariant_representative(
        g, r, degree_filter,
        [&](const std::vector<ExteriorMonomial>& rep) { basis.push_back(InvariantWord{rep}); },
        guard);
    return basis;
}

void WordClass::add_word(const TensorWord& w)
{
    if (w.size() != r_)
        throw std::invalid_argument("word length does not match r");
    for (const auto& f : w.factors)
        if (f.dim != 2 * g_)
            throw std::invalid_argument("word factor dimension does not match 2g");
    add(masks_of(w.factors), w.coefficient);
}

void WordClass::add(const Key& key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational WordClass::coefficient(const Key& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

WordClass& WordClass::operator+=(const WordClass& other)
{
    if (other.is_zero())
        return *this;
    if (g_ != other.g_ || r_ != other.r_)
        throw std::invalid_argument("word classes of mismatched shape (g, r)");
    for (const auto& [k, c] : other.terms_)
        add(k, c);
    return *this;
}

WordClass& WordClass::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_)
        coeff *= c;
    return *this;
}

TensorWord WordClass::word_for(const Key& key) const
{
    TensorWord w;
    w.factors = factors_of(key, 2 * g_);
    w.coefficient = coefficient(key);
    return w;
}

WordClass product_words(const WordClass& a, const WordClass& b)
{
    if (a.g() != b.g() || a.r() != b.r())
        throw std::invalid_argument("word classes of mismatched shape (g, r)");
    const int r = a.r();
    WordClass out(a.g(), r);
    std::vector<std::uint32_t> prod(r);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // interchange sign: walk i > j pairs of odd-degree factors
            int swaps = 0;
            for (int i = 1; i < r; ++i) {
                if (!(std::popcount(ka[i]) & 1))
                    continue;
                for (int j = 0; j < i; ++j)
                    if (std::popcount(kb[j]) & 1)
                        ++swaps;
            }
            int sign = (swaps & 1) ? -1 : 1;
            bool zero = false;
            for (int i = 0; i < r && !zero; ++i) {
                if (ka[i] & kb[i]) {
                    zero = true;
                    break;
                }
                int crossings = 0;
                std::uint32_t tb = kb[i];
                while (tb) {
                    const int t = std::countr_zero(tb) + 1;
                    crossings += std::popcount(ka[i] >> t);
                    tb &= tb - 1;
                }
                if (crossings & 1)
                    sign = -sign;
                prod[i] = ka[i] | kb[i];
            }
            if (!zero)
                out.add(prod, ca * cb * sign);
        }
    }
    return out;
}

WordClass symmetrize_average(const WordClass& a)
{
    const int r = a.r();
    WordClass out(a.g(), r);
    Permutation sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    long n_perms = 0;
    do {
        ++n_perms;
        for (const auto& [k, c] : a.terms()) {
            TensorWord w = a.word_for(k);
            out.add_word(permute_word(sigma, w));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out *= Rational(1, n_perms);
    return out;
}

InvariantClass InvariantClass::unit(int g, int r)
{
    InvariantClass c(g, r);
    c.add(Key(r, 0u), 1);
    return c;
}

void InvariantClass::add(const InvariantWord& w, const Rational& c)
{
    std::vector<std::uint32_t> key(w.representative.size());
    for (std::size_t i = 0; i < key.size(); ++i)
        key[i] = w.representative[i].bits;
    add(key, c);
}

void InvariantClass::add(const Key& representative, const Rational& c)
{
    if (static_cast<int>(representative.size()) != r_)
        throw std::invalid_argument("representative length does not match r");
    if (!weakly_sorted(representative))
        throw std::invalid_argument("representative tuple is not sorted");
    if (has_odd_repeat(representative))
        throw std::invalid_argument("representative repeats an odd-degree monomial");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(representative, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational InvariantClass::coefficient(const Key& representative) const
{
    auto it = terms_.find(representative);
    return it == terms_.end() ? Rational(0) : it->second;
}

InvariantClass& InvariantClass::operator+=(const InvariantClass& other)
{
    if (other.is_zero())
        return *this;
    if (g_ != other.g_ || r_ != other.r_)
        throw std::invalid_argument("invariant classes of mismatched shape (g, r)");
    for (const auto& [k, c] : other.terms_)
        add(k, c);
    return *this;
}

InvariantClass& InvariantClass::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string InvariantClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational a = abs(c);
        if (a != 1)
            os << a.get_str() << "*";
        os << "[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                os << " | ";
            os << GradedClass(ExteriorMonomial{k[i], 2 * g_}).to_string();
        }
        os << "]";
    }
    return os.str();
}

WordClass expand(const InvariantClass& c, const ResourceGuard& guard)
{
    WordClass out(c.g(), c.r());
    const int dim = 2 * c.g();
    for (const auto& [key, coeff] : c.terms()) {
        InvariantWord w;
        w.representative.reserve(key.size());
        for (std::uint32_t bits : key)
            w.representative.push_back(ExteriorMonomial{bits, dim});
        for (const TensorWord& t : w.orbit_sum(guard.max_orbit_terms)) {
            TensorWord scaled = t;
            scaled.coefficient *= coeff;
            out.add_word(scaled);
        }
    }
    return out;
}

InvariantClass project_to_invariant(const WordClass& w)
{
    InvariantClass out(w.g(), w.r());
    for (const auto& [key, c] : w.terms()) {
        if (!weakly_sorted(key))
            continue;
        if (has_odd_repeat(key)) {
            // An invariant class cannot support such a word.
            if (c != 0)
                throw std::logic_error("projection applied to a non-invariant word class");
            continue;
        }
        out.add(key, c);
    }
    return out;
}

InvariantClass cup_invariants(const InvariantClass& x, const InvariantClass& y,
                              const ResourceGuard& guard)
{
    if (x.g() != y.g() || x.r() != y.r())
        throw std::invalid_argument("cup product of classes with mismatched (g, r)");
    return project_to_invariant(product_words(expand(x, guard), expand(y, guard)));
}

} // namespace pw
