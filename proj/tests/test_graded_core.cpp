#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "pw/invariants.hpp"

using namespace pw;

namespace {

// ---------------------------------------------------------------------
// independent oracles
// ---------------------------------------------------------------------

// Determinant of a small integer matrix by cofactor expansion; used only
// to evaluate the signed Burnside count, never by the library.
long long tiny_det(std::vector<std::vector<long long>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    long long det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0)
            continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    row.push_back(m[i][j]);
            minor.push_back(row);
        }
        const long long sign = (col % 2 == 0) ? 1 : -1;
        det += sign * m[0][col] * tiny_det(minor);
    }
    return det;
}

// (1/r!) sum over all sigma in S_r of det(I_r + A_sigma)^{2g}; the signed
// Burnside dimension count of the invariants.
long long burnside_invariant_dimension(int g, int r)
{
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    long long sum = 0;
    long long n_perms = 0;
    do {
        ++n_perms;
        std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
        for (int i = 0; i < r; ++i) {
            m[i][i] += 1;
            m[perm[i]][i] += 1; // permutation matrix A_sigma
        }
        long long d = tiny_det(m);
        long long p = 1;
        for (int e = 0; e < 2 * g; ++e)
            p *= d;
        sum += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(sum % n_perms == 0);
    return sum / n_perms;
}

// Gaussian elimination rank over Q on rows indexed by word keys; written
// directly against WordClass terms so it shares nothing with the library
// rank path.
int span_rank(std::vector<WordClass> rows)
{
    std::vector<std::map<WordClass::Key, Rational, detail::MaskTupleLess>> mat;
    for (const auto& w : rows)
        if (!w.is_zero())
            mat.push_back(w.terms());
    int rank = 0;
    while (!mat.empty()) {
        auto pivot_row = mat.begin();
        const auto pivot_key = pivot_row->begin()->first;
        const Rational pivot_val = pivot_row->begin()->second;
        ++rank;
        std::vector<std::map<WordClass::Key, Rational, detail::MaskTupleLess>> next;
        for (auto it = mat.begin(); it != mat.end(); ++it) {
            if (it == pivot_row)
                continue;
            auto found = it->find(pivot_key);
            if (found == it->end()) {
                next.push_back(*it);
                continue;
            }
            const Rational factor = found->second / pivot_val;
            std::map<WordClass::Key, Rational, detail::MaskTupleLess> reduced = *it;
            for (const auto& [k, v] : *pivot_row) {
                reduced[k] -= factor * v;
                if (reduced[k] == 0)
                    reduced.erase(k);
            }
            if (!reduced.empty())
                next.push_back(std::move(reduced));
        }
        mat.swap(next);
    }
    return rank;
}

Permutation random_permutation(int r, std::mt19937& rng)
{
    Permutation p(r);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

TensorWord random_word(int g, int r, std::mt19937& rng)
{
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (2 * g)) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TensorWord w;
    for (int i = 0; i < r; ++i)
        w.factors.push_back(ExteriorMonomial{mask(rng), 2 * g});
    int c = coeff(rng);
    w.coefficient = c == 0 ? 1 : c;
    return w;
}

InvariantClass random_invariant(int g, int r, std::mt19937& rng, int terms = 2)
{
    const auto basis = invariant_basis(g, r);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    InvariantClass c(g, r);
    for (int i = 0; i < terms; ++i)
        c.add(basis[pick(rng)], coeff(rng));
    return c;
}

} // namespace

// ---------------------------------------------------------------------
// wedge
// ---------------------------------------------------------------------

TEST_CASE("wedge of disjoint monomials carries the transposition sign")
{
    const auto e1 = monomial(2, {1});
    const auto e2 = monomial(2, {2});
    const auto e12 = monomial(2, {1, 2});

    CHECK(wedge(e1, e2) == GradedClass(e12, 1));
    CHECK(wedge(e2, e1) == GradedClass(e12, -1));
    CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("wedge rejects mismatched ambient dimensions")
{
    CHECK_THROWS_AS(wedge(monomial(2, {1}), monomial(4, {2})), std::invalid_argument);
}

TEST_CASE("wedge is associative and graded-commutative on random classes")
{
    std::mt19937 rng(7);
    for (int g = 1; g <= 3; ++g) {
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (2 * g)) - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const ExteriorMonomial a{mask(rng), 2 * g};
            const ExteriorMonomial b{mask(rng), 2 * g};
            const ExteriorMonomial c{mask(rng), 2 * g};

            CHECK(wedge(wedge(a, b), GradedClass(c)) == wedge(GradedClass(a), wedge(b, c)));

            const int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
            CHECK(wedge(a, b) == wedge(b, a) * Rational(sign));
        }
    }
}

TEST_CASE("degree components split a mixed class")
{
    GradedClass c = wedge(monomial(2, {1}), monomial(2, {2}));
    c += GradedClass(monomial(2, {1}), 5);
    CHECK(c.degree_component(2) == GradedClass(monomial(2, {1, 2}), 1));
    CHECK(c.degree_component(1) == GradedClass(monomial(2, {1}), 5));
    CHECK(c.degree_component(0).is_zero());
}

// ---------------------------------------------------------------------
// signed permutation action
// ---------------------------------------------------------------------

TEST_CASE("permute_word matches the Koszul sign on the spec words")
{
    const auto e1 = monomial(2, {1});
    const auto e2 = monomial(2, {2});
    const auto e12 = monomial(2, {1, 2});

    // two odd factors, one inversion
    TensorWord w{{e1, e2}, 1};
    TensorWord swapped = permute_word({1, 0}, w);
    CHECK(swapped.factors == std::vector<ExteriorMonomial>{e2, e1});
    CHECK(swapped.coefficient == -1);

    // one even factor: sign +1
    TensorWord v{{e12, e1}, 1};
    TensorWord swapped_v = permute_word({1, 0}, v);
    CHECK(swapped_v.factors == std::vector<ExteriorMonomial>{e1, e12});
    CHECK(swapped_v.coefficient == 1);

    // identity fixes everything
    TensorWord u{{e1, e12}, Rational(3, 2)};
    CHECK(permute_word({0, 1}, u).factors == u.factors);
    CHECK(permute_word({0, 1}, u).coefficient == u.coefficient);
}

TEST_CASE("the signed action composes as a left action")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 1 + trial % 3;
        const int r = 2 + trial % 3;
        const Permutation sigma = random_permutation(r, rng);
        const Permutation tau = random_permutation(r, rng);
        Permutation composed(r);
        for (int i = 0; i < r; ++i)
            composed[i] = sigma[tau[i]];

        const TensorWord w = random_word(g, r, rng);
        const TensorWord lhs = permute_word(composed, w);
        const TensorWord rhs = permute_word(sigma, permute_word(tau, w));
        CHECK(lhs.factors == rhs.factors);
        CHECK(lhs.coefficient == rhs.coefficient);
    }
}

TEST_CASE("symmetrization projector is idempotent")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int g = 1 + trial % 2;
        const int r = 2 + trial % 2;
        WordClass w(g, r);
        w.add_word(random_word(g, r, rng));
        w.add_word(random_word(g, r, rng));
        const WordClass once = symmetrize_average(w);
        const WordClass twice = symmetrize_average(once);
        CHECK(once == twice);
    }
}

TEST_CASE("orbit sums are fixed by the signed action")
{
    std::mt19937 rng(17);
    for (const auto& w : invariant_basis(2, 2)) {
        WordClass orbit(2, 2);
        for (const auto& t : w.orbit_sum())
            orbit.add_word(t);
        CHECK(symmetrize_average(orbit) == orbit);
    }
}

// ---------------------------------------------------------------------
// invariant basis
// ---------------------------------------------------------------------

TEST_CASE("basis of Sym^2 at g=1: degree two has two orbits, eight total")
{
    const auto deg2 = invariant_basis(1, 2, 2);
    REQUIRE(deg2.size() == 2);
    // orbit of 1 (x) e12 and orbit of e1 (x) e2
    CHECK(deg2[0].representative ==
          std::vector<ExteriorMonomial>{monomial(2, {}), monomial(2, {1, 2})});
    CHECK(deg2[1].representative ==
          std::vector<ExteriorMonomial>{monomial(2, {1}), monomial(2, {2})});

    CHECK(invariant_basis(1, 2).size() == 8);
    CHECK(invariant_basis(1, 1).size() == 4); // r = 1: everything is invariant
}

TEST_CASE("brute-force symmetrization of all 16 words spans 8 dimensions at (1,2)")
{
    std::vector<WordClass> symmetrized;
    for (std::uint32_t m1 = 0; m1 < 4; ++m1)
        for (std::uint32_t m2 = 0; m2 < 4; ++m2) {
            WordClass w(1, 2);
            w.add_word(TensorWord{{ExteriorMonomial{m1, 2}, ExteriorMonomial{m2, 2}}, 1});
            symmetrized.push_back(symmetrize_average(w));
        }
    CHECK(span_rank(symmetrized) == 8);
}

TEST_CASE("basis size equals the signed Burnside count")
{
    for (int g = 1; g <= 8; ++g)
        for (int r = 1; r <= 8; ++r) {
            if (2 * g * r > 16)
                continue;
            CAPTURE(g);
            CAPTURE(r);
            CHECK(static_cast<long long>(invariant_basis(g, r).size())
                  == burnside_invariant_dimension(g, r));
        }
}

TEST_CASE("representatives never repeat an odd-degree monomial")
{
    for (const auto& w : invariant_basis(1, 3))
        for (std::size_t i = 1; i < w.representative.size(); ++i) {
            const bool same = w.representative[i] == w.representative[i - 1];
            CHECK((!same || w.representative[i].degree() % 2 == 0));
        }
}

TEST_CASE("orbit of a repeated odd monomial symmetrizes to zero")
{
    const auto e1 = monomial(2, {1});
    WordClass w(1, 2);
    w.add_word(TensorWord{{e1, e1}, 1});
    CHECK(symmetrize_average(w).is_zero());

    InvariantWord bad{{e1, e1}};
    CHECK_THROWS_AS(bad.orbit_sum(), std::invalid_argument);
}

TEST_CASE("resource guard rejects oversized word widths")
{
    CHECK_THROWS_AS(invariant_basis(4, 4), ResourceError);
    ResourceGuard loose;
    loose.max_word_bits = 32;
    CHECK_NOTHROW(for_each_invariant_representative(
        4, 4, 0, [](const std::vector<ExteriorMonomial>&) {}, loose));
    CHECK_THROWS_AS(invariant_basis(0, 1), std::invalid_argument);
}

// ---------------------------------------------------------------------
// cup product on invariants
// ---------------------------------------------------------------------

TEST_CASE("the unit orbit is a two-sided unit")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int g = 1 + trial % 2;
        const int r = 2 + trial % 2;
        const InvariantClass x = random_invariant(g, r, rng);
        const InvariantClass one = InvariantClass::unit(g, r);
        CHECK(cup_invariants(one, x) == x);
        CHECK(cup_invariants(x, one) == x);
    }
}

TEST_CASE("at r=1 the cup product is the wedge")
{
    InvariantClass a(1, 1), b(1, 1);
    a.add({monomial(2, {1}).bits}, 1);
    b.add({monomial(2, {2}).bits}, 1);
    InvariantClass expected(1, 1);
    expected.add({monomial(2, {1, 2}).bits}, 1);
    CHECK(cup_invariants(a, b) == expected);
}

TEST_CASE("square of the odd-odd orbit at (1,2), frozen from brute expansion")
{
    // orbit of e1 (x) e2 is u = e1 (x) e2 - e2 (x) e1; expanding u*u with the
    // interchange sign gives -2 e12 (x) e12.
    InvariantClass u(1, 2);
    u.add({monomial(2, {1}).bits, monomial(2, {2}).bits}, 1);
    InvariantClass expected(1, 2);
    expected.add({monomial(2, {1, 2}).bits, monomial(2, {1, 2}).bits}, -2);

    const InvariantClass square = cup_invariants(u, u);
    CHECK(square == expected);

    // cross-check against the raw word expansion
    const WordClass raw = product_words(expand(u), expand(u));
    CHECK(project_to_invariant(raw) == expected);
    CHECK(symmetrize_average(raw) == raw);
}

TEST_CASE("cup product is graded-commutative on invariants")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = 1 + trial % 3;
        const int r = 1 + trial % 2;
        const auto basis = invariant_basis(g, r);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        const auto& wa = basis[pick(rng)];
        const auto& wb = basis[pick(rng)];
        InvariantClass a(g, r), b(g, r);
        a.add(wa, 1);
        b.add(wb, 1);
        const int sign = (wa.degree() * wb.degree()) % 2 == 0 ? 1 : -1;
        CHECK(cup_invariants(a, b) == cup_invariants(b, a) * Rational(sign));
    }
}

TEST_CASE("cup product is associative on random triples")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int g = 1 + trial % 2;
        const int r = 1 + trial % 3;
        const InvariantClass a = random_invariant(g, r, rng);
        const InvariantClass b = random_invariant(g, r, rng);
        const InvariantClass c = random_invariant(g, r, rng);
        CHECK(cup_invariants(cup_invariants(a, b), c) == cup_invariants(a, cup_invariants(b, c)));
    }
}

TEST_CASE("expansion and projection are inverse on invariant classes")
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const int g = 1 + trial % 2;
        const int r = 2 + trial % 3;
        const InvariantClass x = random_invariant(g, r, rng, 3);
        const WordClass words = expand(x);
        CHECK(project_to_invariant(words) == x);
        CHECK(symmetrize_average(words) == words);
    }
}

TEST_CASE("cup product rejects mismatched shapes")
{
    CHECK_THROWS_AS(cup_invariants(InvariantClass::unit(1, 2), InvariantClass::unit(1, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cup_invariants(InvariantClass::unit(1, 2), InvariantClass::unit(2, 2)),
                    std::invalid_argument);
}
