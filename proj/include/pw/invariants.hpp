// r-fold graded tensor words over the exterior algebra, the signed action
// of the symmetric group, the basis of invariants and its cup product.
// Invariants of the r-th graded tensor power compute the cohomology of the
// r-th symmetric product of the underlying space.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pw/exterior.hpp"

namespace pw {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word width 2*g*r is the number of exterior generators consumed by one
// tensor word; the guard keeps enumerations inside a predictable memory
// bound. Overridable (CLI: PW_MAX_WORD_BITS).
struct ResourceGuard {
    int max_word_bits = 24;
    long max_orbit_terms = 2'000'000;

    void check_word_bits(int g, int r) const
    {
        if (g < 1 || r < 1)
            throw std::invalid_argument("require g >= 1 and r >= 1");
        if (2L * g * r > max_word_bits)
            throw ResourceError("word width 2*g*r = " + std::to_string(2L * g * r)
                                + " exceeds the resource bound " + std::to_string(max_word_bits));
    }
};

// Permutation of {0..r-1} as the list of images: slot i receives factor
// perm[i] under the inverse convention below; see permute_word.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& sigma);

struct TensorWord {
    std::vector<ExteriorMonomial> factors;
    Rational coefficient = 1;

    int size() const { return static_cast<int>(factors.size()); }
    int total_degree() const;
    // Rank-one classes have perversity equal to their degree; word
    // perversity is additive over the factors, so the two gradings agree.
    int total_perversity() const { return total_degree(); }
};

// Koszul sign of sigma acting on factors: parity of the pairs i < j that
// sigma inverts and whose factor degrees are both odd.
int koszul_sign(const Permutation& sigma, const std::vector<ExteriorMonomial>& factors);

// Moves factor i to slot sigma[i] and multiplies the coefficient by the
// Koszul sign; left action, permute_word(s*t, w) = permute_word(s, permute_word(t, w)).
TensorWord permute_word(const Permutation& sigma, const TensorWord& w);

// Canonical label of one S_r-orbit: the weakly increasing factor tuple. A
// tuple repeating an odd-degree monomial is not a valid label (its orbit
// sum cancels) and never appears in a basis.
struct InvariantWord {
    std::vector<ExteriorMonomial> representative;

    int degree() const;

    // The orbit sum fixed by the signed action: one signed word per
    // distinct arrangement, normalized so the representative has
    // coefficient +1.
    std::vector<TensorWord> orbit_sum(long max_terms = 2'000'000) const;
};

// Visits the representative tuples in canonical order without materializing
// them; the counting path used by the filtration tables.
void for_each_invariant_representative(
    int g, int r, std::optional<int> degree_filter,
    const std::function<void(const std::vector<ExteriorMonomial>&)>& fn,
    const ResourceGuard& guard = {});

// Basis of the S_r-invariants of the r-fold tensor power of Lambda(Q^{2g}),
// optionally restricted to one total degree.
std::vector<InvariantWord> invariant_basis(
    int g, int r, std::optional<int> degree_filter = std::nullopt,
    const ResourceGuard& guard = {});

namespace detail {
struct MaskTupleLess {
    bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return mask_less(a[i], b[i]);
        return false;
    }
};
} // namespace detail

// A rational combination of tensor words of fixed shape (g, r), keyed by
// the factor bitmask tuple. Used for expansions and brute-force oracles.
class WordClass {
public:
    using Key = std::vector<std::uint32_t>;
    using TermMap = std::map<Key, Rational, detail::MaskTupleLess>;

    WordClass() = default;
    WordClass(int g, int r) : g_(g), r_(r) {}

    int g() const { return g_; }
    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_word(const TensorWord& w);
    void add(const Key& key, const Rational& c);
    Rational coefficient(const Key& key) const;

    WordClass& operator+=(const WordClass& other);
    WordClass& operator*=(const Rational& c);
    friend bool operator==(const WordClass& a, const WordClass& b)
    {
        return a.g_ == b.g_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    TensorWord word_for(const Key& key) const;

private:
    int g_ = 0, r_ = 0;
    TermMap terms_;
};

// Product of word classes: factorwise wedge with the graded interchange
// sign (-1)^{sum_{i>j} |a_i||b_j|}.
WordClass product_words(const WordClass& a, const WordClass& b);

// Averaging projector (1/r!) sum_sigma sigma . w onto the invariants.
WordClass symmetrize_average(const WordClass& a);

// A rational combination of invariant basis words, keyed by the canonical
// representative tuple.
class InvariantClass {
public:
    using Key = std::vector<std::uint32_t>;
    using TermMap = std::map<Key, Rational, detail::MaskTupleLess>;

    InvariantClass() = default;
    InvariantClass(int g, int r) : g_(g), r_(r) {}

    static InvariantClass unit(int g, int r);

    int g() const { return g_; }
    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add(const InvariantWord& w, const Rational& c);
    void add(const Key& representative, const Rational& c);
    Rational coefficient(const Key& representative) const;

    InvariantClass& operator+=(const InvariantClass& other);
    InvariantClass& operator*=(const Rational& c);
    friend InvariantClass operator+(InvariantClass a, const InvariantClass& b) { return a += b; }
    friend InvariantClass operator*(InvariantClass a, const Rational& c) { return a *= c; }
    friend bool operator==(const InvariantClass& a, const InvariantClass& b)
    {
        return a.g_ == b.g_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int g_ = 0, r_ = 0;
    TermMap terms_;
};

// Expansion over tensor words and the inverse projection. Projection reads
// the coefficients of the sorted representatives, which is exact on any
// class that actually is invariant.
WordClass expand(const InvariantClass& c, const ResourceGuard& guard = {});
InvariantClass project_to_invariant(const WordClass& w);

// Cup product on invariants: expand, multiply factorwise with the
// interchange sign, re-express in the invariant basis.
InvariantClass cup_invariants(const InvariantClass& x, const InvariantClass& y,
                              const ResourceGuard& guard = {});

} // namespace pw
