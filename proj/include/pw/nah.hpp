// The explicit rank-one non-abelian Hodge correspondence over a period
// lattice, its symmetric-power form, the spectral data morphism with its
// elementary-symmetric embedding, and the ray retraction onto the sphere
// quotient. Everything here is floating point; tolerances are part of the
// verification contracts.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace pw {

// X = C^g / L for a rank 2g lattice spanned by the columns l_1..l_2g. The
// period map is lambda -> (2 Re<lambda, l_i>)_i with the complex-bilinear
// pairing <lambda, l> = sum_j lambda_j l_j, written on the real
// coordinates (Re lambda, Im lambda). It identifies C^g with R^{2g} and is
// the bottom edge of the correspondence diagram.
struct Lattice {
    int g = 0;
    Eigen::MatrixXcd basis;     // g x 2g, column i = l_i
    Eigen::MatrixXd period_map; // 2g x 2g

    double scale() const;

    // l_j = e_j and l_{g+j} = i e_j: the square lattice per coordinate.
    static Lattice standard(int g);
    // Throws when the periods do not span R^{2g} (relative determinant
    // below 1e-8).
    static Lattice from_basis(const Eigen::MatrixXcd& basis);

    Eigen::VectorXd real_coordinates(const Eigen::VectorXcd& lambda) const;
};

// A character of the lattice: its 2g nonzero values on the chosen basis.
struct RankOneBetti {
    Eigen::VectorXcd values;
};

// A point of Pic_0 as a unitary character (2g phases) together with the
// Higgs field vector in C^g.
struct RankOneDolbeault {
    Eigen::VectorXcd phases;
    Eigen::VectorXcd higgs;
};

// Polar decomposition z -> (z/|z|, -log|z|) per entry; the Higgs vector
// solves the linear period system.
RankOneDolbeault betti_to_dolbeault(const Lattice& lat, const RankOneBetti& z);
RankOneBetti dolbeault_to_betti(const Lattice& lat, const RankOneDolbeault& p);

using SpectralPoint = Eigen::VectorXcd; // a vector in C^g
using SpectralData = std::vector<SpectralPoint>; // unordered, size r

struct DolbeaultMultiset {
    std::vector<RankOneDolbeault> points;
};
struct BettiMultiset {
    std::vector<RankOneBetti> points;
};

// Forgets the phases: the fiber direction of the spectral data morphism.
SpectralData spectral_data(const DolbeaultMultiset& m);

// Division by the Euclidean norm of the concatenated 2gr real coordinates:
// the retraction along rays through the origin onto S^{2gr-1}/S_r.
// Throws std::domain_error on the zero multiset.
SpectralData retract_to_sphere_quotient(const SpectralData& sd);

// Coefficients of prod_a (s - <lambda_a, y>) as symmetric tensors: sigma_i
// lives in S^i(C^g), stored as exponent vector -> coefficient, and the
// coefficient of s^{r-i} is (-1)^i sigma_i.
struct SymmetricTensor {
    int degree = 0;
    std::map<std::vector<int>, std::complex<double>> coefficients;
};

struct HitchinImage {
    int g = 0, r = 0;
    std::vector<SymmetricTensor> sigma; // sigma[i-1] = sigma_i, i = 1..r
};

HitchinImage hitchin_embedding(const SpectralData& sd);

// Max norm over all tensor coefficients of the difference.
double hitchin_distance(const HitchinImage& a, const HitchinImage& b);

// min over the r! matchings of the max coordinate distance; exact at desk
// scale, guarded at r <= max_r.
double multiset_distance(const SpectralData& a, const SpectralData& b, int max_r = 6);

// Deterministic per-sample random stream (splitmix64), portable across
// platforms; stream index i of seed s is independent of all others.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    double uniform(double lo, double hi); // in [lo, hi)

private:
    std::uint64_t state_;
};

// Random characters with log-magnitudes in [log_radius_min, log_radius_max]
// by absolute value (both signs), uniform phases.
RankOneBetti random_betti_point(int g, SampleRng& rng, double log_radius_min,
                                double log_radius_max);

Lattice random_lattice(int g, SampleRng& rng, double condition_bound = 1e6);

struct RoundtripOptions {
    int samples = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double log_radius_min = 0.0;
    double log_radius_max = 3.0;
    bool debug_perturb = false;
};

struct RoundtripReport {
    int g = 0;
    int samples = 0;
    double max_residual = 0.0;
    bool pass = false;
    std::optional<int> first_failing_sample;
};

// z -> dolbeault -> z and p -> betti -> p, relative residuals per entry.
RoundtripReport verify_nah_roundtrip(const Lattice& lat, const RoundtripOptions& opt);

struct DiagramOptions {
    int r = 1;
    int samples = 500;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double log_radius_min = 0.0;
    double log_radius_max = 3.0;
    bool debug_perturb = false;
};

struct DiagramReport {
    int g = 0, r = 0;
    int samples = 0;
    double max_residual = 0.0;
    bool pass = false;
    std::optional<int> first_failing_sample;
};

// Commutativity of the correspondence square: Sym^r(-log|.|) equals the
// spectral data of the transported multiset read through the period map,
// as multisets in R^{2g} per point.
DiagramReport verify_nah_diagram(const Lattice& lat, const DiagramOptions& opt);

} // namespace pw
