#include "pw/local_homology.hpp"

#include <sstream>
#include <stdexcept>

#include "pw/linalg.hpp"

namespace pw {

std::string PairHomologyTable::to_string() const
{
    if (groups.empty())
        return "0\n";
    std::ostringstream os;
    for (const auto& [i, grp] : groups)
        os << i << ": " << grp.to_string() << "\n";
    return os.str();
}

PairHomologyTable ball_pair(int k)
{
    if (k < 1)
        throw std::invalid_argument("ball dimension must be >= 1");
    PairHomologyTable t;
    t.top_degree = k;
    t.set(k, FGAbGroup::free_of_rank(1));
    return t;
}

PairHomologyTable cone_rp_pair(int m)
{
    if (m < 1)
        throw std::invalid_argument("projective space dimension must be >= 1");
    if (m % 2 == 0)
        throw std::domain_error("cone_rp_pair: even-dimensional RP is unsupported");
    PairHomologyTable t;
    t.top_degree = m + 1;
    t.set(m + 1, FGAbGroup::free_of_rank(1));
    for (int i = 2; i < m + 1; i += 2)
        t.set(i, FGAbGroup::cyclic(2));
    return t;
}

PairHomologyTable kunneth_pairs(const PairHomologyTable& a, const PairHomologyTable& b)
{
    PairHomologyTable out;
    out.top_degree = a.top_degree + b.top_degree + 1;
    for (const auto& [s, ga] : a.groups) {
        for (const auto& [t, gb] : b.groups) {
            const FGAbGroup tens = tensor(ga, gb);
            if (!tens.is_trivial())
                out.set(s + t, direct_sum(out.at(s + t), tens));
            const FGAbGroup torsion = tor(ga, gb);
            if (!torsion.is_trivial())
                out.set(s + t + 1, direct_sum(out.at(s + t + 1), torsion));
        }
    }
    int top = 0;
    for (const auto& [i, grp] : out.groups)
        top = std::max(top, i);
    out.top_degree = top;
    return out;
}

PairHomologyTable manifold_local_model(int n)
{
    return ball_pair(n);
}

PairHomologyTable stabilizer_local_homology_closed_form(int g, int r)
{
    const int N = 2 * g * r - 1;
    const int k = N - 2 * g;
    PairHomologyTable t;
    t.top_degree = N;
    t.set(N, FGAbGroup::free_of_rank(1));
    for (int i = k + 2; i < N; ++i)
        if (i % 2 == 1)
            t.set(i, FGAbGroup::cyclic(2));
    return t;
}

ManifoldReport manifold_obstruction(int g, int r, bool debug_perturb)
{
    if (g < 1 || r < 1)
        throw std::invalid_argument("require g >= 1 and r >= 1");
    ManifoldReport report;
    report.g = g;
    report.r = r;
    if (r == 1) {
        // The quotient is the sphere itself; no stabilizer point exists.
        report.vacuous = true;
        report.is_obstructed = false;
        report.matches_closed_form = true;
        report.obstruction_as_predicted = true;
        report.pass = true;
        return report;
    }

    const int N = 2 * g * r - 1;
    const int k = N - 2 * g;
    report.local_homology = kunneth_pairs(ball_pair(k), cone_rp_pair(2 * g - 1));
    if (debug_perturb)
        report.local_homology.set(1, FGAbGroup::cyclic(2));
    report.manifold_model = manifold_local_model(N);

    report.is_obstructed = !(report.local_homology == report.manifold_model);
    report.matches_closed_form =
        report.local_homology == stabilizer_local_homology_closed_form(g, r);
    report.obstruction_as_predicted = report.is_obstructed == (g >= 2 && r >= 2);
    report.pass = report.matches_closed_form && report.obstruction_as_predicted;
    return report;
}

RationalSphereReport rational_sphere_check(int g, int r, bool debug_perturb)
{
    if (g < 1 || r < 1)
        throw std::invalid_argument("require g >= 1 and r >= 1");
    RationalSphereReport report;
    report.g = g;
    report.r = r;

    // The S_r action on R^{2gr} permutes r blocks of size 2g; adjacent
    // transpositions generate, so determinant one for those gives an
    // orientation-preserving action on the sphere.
    const int n = 2 * g * r;
    report.determinant_one = true;
    for (int a = 0; a + 1 < r; ++a) {
        IntegerMatrix p(n, n);
        p.setZero();
        for (int block = 0; block < r; ++block) {
            int image = block;
            if (block == a)
                image = a + 1;
            else if (block == a + 1)
                image = a;
            for (int i = 0; i < 2 * g; ++i)
                p(image * 2 * g + i, block * 2 * g + i) = 1;
        }
        if (det_exact(p) != 1)
            report.determinant_one = false;
    }

    // Invariants of H_*(S^{2gr-1}; Q): the action fixes H_0; it fixes the
    // fundamental class iff it preserves orientation.
    report.rational_dims[0] = 1;
    if (report.determinant_one)
        report.rational_dims[2 * g * r - 1] = 1;
    if (debug_perturb)
        report.rational_dims[1] = 1;

    std::map<int, long long> expected;
    expected[0] = 1;
    expected[2 * g * r - 1] = 1;
    report.pass = report.determinant_one && report.rational_dims == expected;
    return report;
}

} // namespace pw
