#include "pw/nah.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pw {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

Eigen::MatrixXd period_map_of(const Eigen::MatrixXcd& basis)
{
    const int g = static_cast<int>(basis.rows());
    const int n = 2 * g;
    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i) {
        // 2 Re<lambda, l_i> = sum_j (2 Re l_ij) a_j + (-2 Im l_ij) b_j
        // for lambda = a + ib.
        for (int j = 0; j < g; ++j) {
            p(i, j) = 2.0 * basis(j, i).real();
            p(i, g + j) = -2.0 * basis(j, i).imag();
        }
    }
    return p;
}

} // namespace

double Lattice::scale() const
{
    return period_map.norm() / std::sqrt(static_cast<double>(2 * g));
}

Lattice Lattice::standard(int g)
{
    if (g < 1)
        throw std::invalid_argument("lattice needs g >= 1");
    Eigen::MatrixXcd basis(g, 2 * g);
    basis.setZero();
    for (int j = 0; j < g; ++j) {
        basis(j, j) = std::complex<double>(1.0, 0.0);
        basis(j, g + j) = std::complex<double>(0.0, 1.0);
    }
    return from_basis(basis);
}

Lattice Lattice::from_basis(const Eigen::MatrixXcd& basis)
{
    if (basis.rows() < 1 || basis.cols() != 2 * basis.rows())
        throw std::invalid_argument("lattice basis must be g x 2g");
    Lattice lat;
    lat.g = static_cast<int>(basis.rows());
    lat.basis = basis;
    lat.period_map = period_map_of(basis);

    const double det = std::abs(lat.period_map.determinant());
    const double s = lat.scale();
    if (!(det > 1e-8 * std::pow(s, 2 * lat.g)))
        throw std::invalid_argument("lattice periods do not span R^{2g}");
    return lat;
}

Eigen::VectorXd Lattice::real_coordinates(const Eigen::VectorXcd& lambda) const
{
    Eigen::VectorXd x(2 * g);
    x.head(g) = lambda.real();
    x.tail(g) = lambda.imag();
    return period_map * x;
}

RankOneDolbeault betti_to_dolbeault(const Lattice& lat, const RankOneBetti& z)
{
    const int n = 2 * lat.g;
    if (z.values.size() != n)
        throw std::invalid_argument("character must have 2g values");
    RankOneDolbeault p;
    p.phases.resize(n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        const double m = std::abs(z.values[i]);
        if (m == 0.0)
            throw std::domain_error("character value is zero");
        p.phases[i] = z.values[i] / m;
        rhs[i] = -std::log(m);
    }
    const Eigen::VectorXd x = lat.period_map.partialPivLu().solve(rhs);
    p.higgs.resize(lat.g);
    for (int j = 0; j < lat.g; ++j)
        p.higgs[j] = std::complex<double>(x[j], x[lat.g + j]);
    return p;
}

RankOneBetti dolbeault_to_betti(const Lattice& lat, const RankOneDolbeault& p)
{
    const int n = 2 * lat.g;
    if (p.phases.size() != n || p.higgs.size() != lat.g)
        throw std::invalid_argument("point has wrong shape for this lattice");
    for (int i = 0; i < n; ++i)
        if (std::abs(std::abs(p.phases[i]) - 1.0) > 1e-12)
            throw std::invalid_argument("phases must be unitary characters");
    const Eigen::VectorXd periods = lat.real_coordinates(p.higgs);
    RankOneBetti z;
    z.values.resize(n);
    for (int i = 0; i < n; ++i)
        z.values[i] = p.phases[i] * std::exp(-periods[i]);
    return z;
}

SpectralData spectral_data(const DolbeaultMultiset& m)
{
    SpectralData sd;
    sd.reserve(m.points.size());
    for (const auto& p : m.points)
        sd.push_back(p.higgs);
    return sd;
}

SpectralData retract_to_sphere_quotient(const SpectralData& sd)
{
    double norm_sq = 0.0;
    for (const auto& v : sd)
        norm_sq += v.squaredNorm();
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0)
        throw std::domain_error("cannot retract the zero multiset");
    SpectralData out = sd;
    for (auto& v : out)
        v /= norm;
    return out;
}

HitchinImage hitchin_embedding(const SpectralData& sd)
{
    if (sd.empty())
        throw std::invalid_argument("empty multiset");
    const int g = static_cast<int>(sd.front().size());
    const int r = static_cast<int>(sd.size());
    for (const auto& v : sd)
        if (v.size() != g)
            throw std::invalid_argument("mixed vector sizes in multiset");

    // Expand prod_a (s - <lambda_a, y>). coeff[d] is the y-polynomial
    // multiplying s^(deg so far - d); exponent vectors have length g.
    using Poly = std::map<std::vector<int>, std::complex<double>>;
    std::vector<Poly> coeff(static_cast<std::size_t>(r) + 1);
    coeff[0].emplace(std::vector<int>(g, 0), std::complex<double>(1.0, 0.0));

    for (int a = 0; a < r; ++a) {
        std::vector<Poly> next(coeff.size());
        next[0] = coeff[0];
        for (int d = 1; d <= a + 1; ++d) {
            next[d] = coeff[d]; // the s * coeff[d] contribution
            for (const auto& [mono, c] : coeff[d - 1]) {
                for (int j = 0; j < g; ++j) {
                    const std::complex<double> v = -sd[a][j] * c;
                    if (v == std::complex<double>(0.0, 0.0))
                        continue;
                    std::vector<int> m = mono;
                    ++m[j];
                    auto [it, inserted] = next[d].emplace(std::move(m), v);
                    if (!inserted)
                        it->second += v;
                }
            }
        }
        coeff.swap(next);
    }

    HitchinImage image;
    image.g = g;
    image.r = r;
    image.sigma.resize(r);
    for (int i = 1; i <= r; ++i) {
        SymmetricTensor& s = image.sigma[i - 1];
        s.degree = i;
        const double sign = (i % 2 == 0) ? 1.0 : -1.0; // coeff of s^{r-i} is (-1)^i sigma_i
        for (const auto& [mono, c] : coeff[i])
            s.coefficients[mono] = sign * c;
    }
    return image;
}

double hitchin_distance(const HitchinImage& a, const HitchinImage& b)
{
    if (a.g != b.g || a.r != b.r)
        throw std::invalid_argument("images of mismatched shape");
    double dist = 0.0;
    for (int i = 0; i < a.r; ++i) {
        std::map<std::vector<int>, std::complex<double>> diff = a.sigma[i].coefficients;
        for (const auto& [m, c] : b.sigma[i].coefficients)
            diff[m] -= c;
        for (const auto& [m, c] : diff)
            dist = std::max(dist, std::abs(c));
    }
    return dist;
}

double multiset_distance(const SpectralData& a, const SpectralData& b, int max_r)
{
    if (a.size() != b.size())
        throw std::invalid_argument("multisets of different size");
    const int r = static_cast<int>(a.size());
    if (r > max_r)
        throw std::invalid_argument("multiset matching guarded at r <= " + std::to_string(max_r));
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (int i = 0; i < r; ++i) {
            const double d = (a[i] - b[perm[i]]).cwiseAbs().maxCoeff();
            worst = std::max(worst, d);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 over a mixed seed; distinct streams decorrelate fully
    // after two rounds of the finalizer.
    state_ = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    (void)next_u64();
    (void)next_u64();
}

std::uint64_t SampleRng::next_u64()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SampleRng::uniform(double lo, double hi)
{
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

RankOneBetti random_betti_point(int g, SampleRng& rng, double log_radius_min,
                                double log_radius_max)
{
    RankOneBetti z;
    z.values.resize(2 * g);
    for (int i = 0; i < 2 * g; ++i) {
        double log_mag = rng.uniform(log_radius_min, log_radius_max);
        if (rng.next_u64() & 1)
            log_mag = -log_mag;
        const double arg = rng.uniform(0.0, kTau);
        z.values[i] = std::polar(std::exp(log_mag), arg);
    }
    return z;
}

Lattice random_lattice(int g, SampleRng& rng, double condition_bound)
{
    for (int attempt = 0; attempt < 256; ++attempt) {
        Eigen::MatrixXcd basis(g, 2 * g);
        for (int j = 0; j < g; ++j)
            for (int i = 0; i < 2 * g; ++i)
                basis(j, i) = std::complex<double>(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        Eigen::MatrixXd p = period_map_of(basis);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        if (smin <= 0.0 || smax / smin > condition_bound)
            continue;
        return Lattice::from_basis(basis);
    }
    throw std::runtime_error("failed to draw a well-conditioned lattice");
}

RoundtripReport verify_nah_roundtrip(const Lattice& lat, const RoundtripOptions& opt)
{
    RoundtripReport report;
    report.g = lat.g;
    report.samples = opt.samples;
    for (int s = 0; s < opt.samples; ++s) {
        SampleRng rng(opt.seed, static_cast<std::uint64_t>(s));
        const RankOneBetti z = random_betti_point(lat.g, rng, opt.log_radius_min, opt.log_radius_max);
        RankOneDolbeault p = betti_to_dolbeault(lat, z);
        if (opt.debug_perturb && s == 0)
            p.higgs[0] += 1e-3;
        const RankOneBetti back = dolbeault_to_betti(lat, p);

        double residual = 0.0;
        for (int i = 0; i < 2 * lat.g; ++i) {
            const double rel = std::abs(back.values[i] - z.values[i]) / std::abs(z.values[i]);
            residual = std::max(residual, rel);
        }
        // and the opposite composition, starting from the Dolbeault side
        const RankOneDolbeault p2 = betti_to_dolbeault(lat, back);
        residual = std::max(residual, (p2.higgs - p.higgs).cwiseAbs().maxCoeff());
        for (int i = 0; i < 2 * lat.g; ++i)
            residual = std::max(residual, std::abs(p2.phases[i] - p.phases[i]));

        report.max_residual = std::max(report.max_residual, residual);
        if (residual >= opt.tolerance && !report.first_failing_sample)
            report.first_failing_sample = s;
    }
    report.pass = !report.first_failing_sample.has_value();
    return report;
}

DiagramReport verify_nah_diagram(const Lattice& lat, const DiagramOptions& opt)
{
    if (opt.r < 1)
        throw std::invalid_argument("diagram needs r >= 1");
    DiagramReport report;
    report.g = lat.g;
    report.r = opt.r;
    report.samples = opt.samples;

    for (int s = 0; s < opt.samples; ++s) {
        SampleRng rng(opt.seed, static_cast<std::uint64_t>(s));
        BettiMultiset betti;
        for (int a = 0; a < opt.r; ++a)
            betti.points.push_back(
                random_betti_point(lat.g, rng, opt.log_radius_min, opt.log_radius_max));

        // bottom route: Sym^r(-log|.|) directly on the characters
        SpectralData direct;
        for (const auto& z : betti.points) {
            Eigen::VectorXcd v(2 * lat.g);
            for (int i = 0; i < 2 * lat.g; ++i)
                v[i] = std::complex<double>(-std::log(std::abs(z.values[i])), 0.0);
            direct.push_back(v);
        }

        // top route: transport to the Dolbeault side, take spectral data,
        // then identify C^g with R^{2g} through the period map
        DolbeaultMultiset dol;
        for (const auto& z : betti.points)
            dol.points.push_back(betti_to_dolbeault(lat, z));
        SpectralData through;
        for (const auto& lambda : spectral_data(dol)) {
            const Eigen::VectorXd x = lat.real_coordinates(lambda);
            Eigen::VectorXcd v(2 * lat.g);
            for (int i = 0; i < 2 * lat.g; ++i)
                v[i] = std::complex<double>(x[i], 0.0);
            through.push_back(v);
        }
        if (opt.debug_perturb && s == 0 && !through.empty())
            through[0][0] += 1e-3;

        const double residual = multiset_distance(direct, through);
        report.max_residual = std::max(report.max_residual, residual);
        if (residual >= opt.tolerance && !report.first_failing_sample)
            report.first_failing_sample = s;
    }
    report.pass = !report.first_failing_sample.has_value();
    return report;
}

} // namespace pw
