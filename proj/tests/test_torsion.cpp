#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pw/local_homology.hpp"

using namespace pw;

namespace {

FGAbGroup Z(long long n = 1)
{
    return FGAbGroup::free_of_rank(n);
}
FGAbGroup Zmod(long long d)
{
    return FGAbGroup::cyclic(d);
}

} // namespace

// ---------------------------------------------------------------------
// group arithmetic
// ---------------------------------------------------------------------

TEST_CASE("tensor follows the gcd rules")
{
    CHECK(tensor(Z(), Z()) == Z());
    CHECK(tensor(Zmod(2), Zmod(4)) == Zmod(2));
    CHECK(tensor(Z(2), Zmod(3)) == canonical(0, {3, 3}));
    CHECK(tensor(Zmod(6), Zmod(10)) == Zmod(2));
    CHECK(tensor(Z(), Zmod(5)) == Zmod(5));
}

TEST_CASE("tor kills the free part")
{
    CHECK(tor(Z(), Zmod(2)).is_trivial());
    CHECK(tor(Zmod(2), Zmod(2)) == Zmod(2));
    CHECK(tor(Zmod(4), Zmod(6)) == Zmod(2));
    CHECK(tor(Z(3), Z(5)).is_trivial());
}

TEST_CASE("canonical form is a divisibility chain and idempotent")
{
    const FGAbGroup g = canonical(1, {4, 6});
    CHECK(g.invariant_factors == std::vector<long long>{2, 12});
    CHECK(canonical(g.free_rank, g.invariant_factors) == g);

    const FGAbGroup h = canonical(0, {2, 3, 4, 5});
    // 2*3*4*5 = 120 = 2 * 60
    CHECK(h.invariant_factors == std::vector<long long>{2, 60});

    CHECK(canonical(0, {1, 1}).is_trivial());
    CHECK(FGAbGroup::cyclic(1).is_trivial());
    CHECK(FGAbGroup::cyclic(0) == Z());
}

TEST_CASE("tensor and tor are symmetric")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<long long> d(2, 24);
    std::uniform_int_distribution<long long> rk(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const FGAbGroup a = canonical(rk(rng), {d(rng), d(rng)});
        const FGAbGroup b = canonical(rk(rng), {d(rng)});
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(tor(a, b) == tor(b, a));
    }
}

TEST_CASE("group printing")
{
    CHECK(FGAbGroup::trivial().to_string() == "0");
    CHECK(Z(2).to_string() == "Z^2");
    CHECK(canonical(1, {2, 4}).to_string() == "Z \xE2\x8A\x95 Z/2 \xE2\x8A\x95 Z/4");
}

// ---------------------------------------------------------------------
// pair homology tables
// ---------------------------------------------------------------------

TEST_CASE("ball and cone local tables")
{
    const PairHomologyTable b3 = ball_pair(3);
    CHECK(b3.at(3) == Z());
    CHECK(b3.at(2).is_trivial());
    CHECK(b3.groups.size() == 1);
    CHECK(ball_pair(1).at(1) == Z());
    CHECK(ball_pair(2).at(2) == Z());

    const PairHomologyTable c3 = cone_rp_pair(3); // g = 2
    CHECK(c3.at(4) == Z());
    CHECK(c3.at(2) == Zmod(2));
    CHECK(c3.groups.size() == 2);

    const PairHomologyTable c1 = cone_rp_pair(1); // g = 1: no even t in (1,2)
    CHECK(c1.at(2) == Z());
    CHECK(c1.groups.size() == 1);

    const PairHomologyTable c5 = cone_rp_pair(5); // g = 3
    CHECK(c5.at(6) == Z());
    CHECK(c5.at(2) == Zmod(2));
    CHECK(c5.at(4) == Zmod(2));

    CHECK_THROWS_AS(cone_rp_pair(2), std::domain_error);
}

TEST_CASE("kunneth of the (2,2) local model: Z/2 at 5 and Z at 7")
{
    const PairHomologyTable t = kunneth_pairs(ball_pair(3), cone_rp_pair(3));
    CHECK(t.at(7) == Z());
    CHECK(t.at(5) == Zmod(2));
    CHECK(t.groups.size() == 2);
}

TEST_CASE("kunneth degenerate cases")
{
    // two balls: a manifold point
    CHECK(kunneth_pairs(ball_pair(2), ball_pair(3)) == ball_pair(5));
    // anything times the zero table is zero
    PairHomologyTable zero;
    CHECK(kunneth_pairs(ball_pair(3), zero).groups.empty());
}

TEST_CASE("kunneth picks up tor terms when both sides have torsion")
{
    PairHomologyTable a;
    a.set(2, Zmod(2));
    PairHomologyTable b;
    b.set(3, Zmod(4));
    const PairHomologyTable t = kunneth_pairs(a, b);
    CHECK(t.at(5) == Zmod(2)); // tensor
    CHECK(t.at(6) == Zmod(2)); // tor, one degree up
}

TEST_CASE("table printing matches the documented shape")
{
    const std::string s = kunneth_pairs(ball_pair(3), cone_rp_pair(3)).to_string();
    CHECK(s == "5: Z/2\n7: Z\n");
}

// ---------------------------------------------------------------------
// manifold obstruction
// ---------------------------------------------------------------------

TEST_CASE("(2,2) is obstructed with Z/2 exactly at i=5")
{
    const ManifoldReport report = manifold_obstruction(2, 2);
    CHECK(report.is_obstructed);
    CHECK(report.pass);
    CHECK(report.local_homology.at(5) == Zmod(2));
    CHECK(report.local_homology.at(7) == Z());
    CHECK(report.local_homology.groups.size() == 2);
    CHECK(report.manifold_model.at(7) == Z());
}

TEST_CASE("(1,2) is a manifold point; (3,2) has Z/2 at 7 and 9")
{
    const ManifoldReport flat = manifold_obstruction(1, 2);
    CHECK(!flat.is_obstructed);
    CHECK(flat.pass);
    CHECK(flat.local_homology == flat.manifold_model);

    const ManifoldReport deep = manifold_obstruction(3, 2);
    CHECK(deep.is_obstructed);
    CHECK(deep.pass);
    CHECK(deep.local_homology.at(7) == Zmod(2));
    CHECK(deep.local_homology.at(9) == Zmod(2));
    CHECK(deep.local_homology.at(11) == Z());
    CHECK(deep.local_homology.groups.size() == 3);
}

TEST_CASE("obstruction happens exactly when g >= 2 and r >= 2")
{
    for (int g = 1; g <= 4; ++g)
        for (int r = 2; r <= 4; ++r) {
            CAPTURE(g);
            CAPTURE(r);
            const ManifoldReport report = manifold_obstruction(g, r);
            CHECK(report.pass);
            CHECK(report.matches_closed_form);
            CHECK(report.is_obstructed == (g >= 2 && r >= 2));
        }
}

TEST_CASE("r = 1 is vacuous and the fixture breaks r >= 2")
{
    const ManifoldReport vac = manifold_obstruction(3, 1);
    CHECK(vac.vacuous);
    CHECK(vac.pass);

    const ManifoldReport broken = manifold_obstruction(2, 2, true);
    CHECK(!broken.pass);
    CHECK(!broken.matches_closed_form);
}

// ---------------------------------------------------------------------
// rational homology sphere
// ---------------------------------------------------------------------

TEST_CASE("the quotient has the rational homology of a sphere")
{
    for (auto [g, r] : {std::pair{1, 2}, {2, 2}, {2, 3}, {1, 1}, {3, 2}}) {
        CAPTURE(g);
        CAPTURE(r);
        const RationalSphereReport report = rational_sphere_check(g, r);
        CHECK(report.pass);
        CHECK(report.determinant_one);
        std::map<int, long long> expected{{0, 1}, {2 * g * r - 1, 1}};
        CHECK(report.rational_dims == expected);
    }
    const RationalSphereReport broken = rational_sphere_check(2, 2, true);
    CHECK(!broken.pass);
}
