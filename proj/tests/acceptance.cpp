// Acceptance suite: one machine-checked criterion per block, one PASS/FAIL
// line each, exit code = number of failed criteria. Tolerances are pinned
// here and nowhere else.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pw/filtration.hpp"
#include "pw/hodge.hpp"
#include "pw/lefschetz.hpp"
#include "pw/local_homology.hpp"
#include "pw/nah.hpp"

using namespace pw;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, double seconds)
{
    if (!pass)
        ++failures;
    std::printf("%s  criterion %d: %s  (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    std::fflush(stdout);
}

template <class F>
void criterion(int number, const std::string& what, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = e.what();
        pass = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, pass, what + (note.empty() ? "" : " [" + note + "]"), seconds);
}

std::vector<std::pair<int, int>> grid_up_to(int word_bits)
{
    std::vector<std::pair<int, int>> cells;
    for (int g = 1; g <= word_bits / 2; ++g)
        for (int r = 1; 2 * g * r <= word_bits; ++r)
            cells.emplace_back(g, r);
    return cells;
}

std::vector<long long> diagonal(const BigradedTable& t)
{
    std::vector<long long> d(static_cast<std::size_t>(2 * t.g * t.r) + 1, 0);
    for (const auto& [kj, v] : t.dims)
        d[static_cast<std::size_t>(kj.second)] = v;
    return d;
}

SpectralData random_multiset(int g, int r, SampleRng& rng, double box = 1.0)
{
    SpectralData sd;
    for (int a = 0; a < r; ++a) {
        Eigen::VectorXcd v(g);
        for (int j = 0; j < g; ++j)
            v[j] = std::complex<double>(rng.uniform(-box, box), rng.uniform(-box, box));
        sd.push_back(v);
    }
    return sd;
}

int run_cli_status(const std::string& args)
{
    const std::string cmd = std::string(PW_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

int main()
{
    // 1. P=W: perverse = weight = closed form, exact, whole guarded grid.
    criterion(1, "P=W tables agree entrywise for all 2gr <= 16", [](std::string& note) {
        for (auto [g, r] : grid_up_to(16)) {
            const PWReport rep = verify_p_equals_w(g, r);
            const auto closed = first_mismatch(rep.perverse, closed_form_table(g, r));
            if (!rep.pass || closed.has_value() || rep.odd_weight_classes != 0) {
                note = "first failure at g=" + std::to_string(g) + " r=" + std::to_string(r);
                return false;
            }
        }
        return true;
    });

    // 2. The (1,2) diagonal 1,2,2,2,1, reproduced by all four routes.
    criterion(2, "Betti/weight diagonal at (1,2) equals 1,2,2,2,1 on every route",
              [](std::string& note) {
                  const std::vector<long long> expected{1, 2, 2, 2, 1};
                  if (diagonal(perverse_table(1, 2)) != expected) {
                      note = "orbit enumeration";
                      return false;
                  }
                  if (diagonal(weight_table(1, 2)) != expected) {
                      note = "multiset count";
                      return false;
                  }
                  if (diagonal(closed_form_table(1, 2)) != expected) {
                      note = "generating function";
                      return false;
                  }
                  const ZLaurent h = mixed_hodge_polynomial(1, 2);
                  for (int j = 0; j <= 4; ++j)
                      if (h.coefficient(j, j) != static_cast<long>(expected[j])) {
                          note = "cycle-type polynomial";
                          return false;
                      }
                  return true;
              });

    // 3. Curious Poincare duality and Hodge-Tate support, exact.
    criterion(3, "curious duality H(1/(qt^2),t)(qt)^{2gr} = H(q,t) and Hodge-Tate support",
              [](std::string& note) {
                  for (auto [g, r] : grid_up_to(16)) {
                      if (!verify_curious_duality(g, r).pass) {
                          note = "duality fails at g=" + std::to_string(g)
                                 + " r=" + std::to_string(r);
                          return false;
                      }
                      if (!hodge_tate_check(g, r).pass) {
                          note = "support fails at g=" + std::to_string(g)
                                 + " r=" + std::to_string(r);
                          return false;
                      }
                  }
                  return true;
              });

    // 4. Curious hard Lefschetz by exact ranks, 2gr <= 12.
    criterion(4, "hard Lefschetz: rank(L^k) = dim H^{gr-k} for all k, all 2gr <= 12",
              [](std::string& note) {
                  for (auto [g, r] : grid_up_to(12)) {
                      const HardLefschetzReport rep = verify_hard_lefschetz(g, r);
                      if (!rep.pass) {
                          note = "fails at g=" + std::to_string(g) + " r=" + std::to_string(r);
                          return false;
                      }
                  }
                  return true;
              });

    // 5. Manifold obstruction via Kuenneth local homology.
    criterion(5, "local homology matches the closed form; obstruction iff g,r >= 2",
              [](std::string& note) {
                  for (int g = 1; g <= 4; ++g)
                      for (int r = 2; r <= 4; ++r) {
                          const ManifoldReport rep = manifold_obstruction(g, r);
                          if (!rep.pass) {
                              note = "fails at g=" + std::to_string(g)
                                     + " r=" + std::to_string(r);
                              return false;
                          }
                      }
                  const ManifoldReport base = manifold_obstruction(2, 2);
                  PairHomologyTable expected;
                  expected.set(5, FGAbGroup::cyclic(2));
                  expected.set(7, FGAbGroup::free_of_rank(1));
                  if (!(base.local_homology == expected)) {
                      note = "(2,2) local homology is not exactly Z/2 at 5 and Z at 7";
                      return false;
                  }
                  return true;
              });

    // 6. Rational homology sphere on the grid.
    criterion(6, "S^{2gr-1}/S_r has rational homology Q at 0 and 2gr-1 only",
              [](std::string& note) {
                  for (int g = 1; g <= 4; ++g)
                      for (int r = 1; r <= 4; ++r) {
                          const RationalSphereReport rep = rational_sphere_check(g, r);
                          std::map<int, long long> expected{{0, 1}, {2 * g * r - 1, 1}};
                          if (!rep.pass || rep.rational_dims != expected) {
                              note = "fails at g=" + std::to_string(g)
                                     + " r=" + std::to_string(r);
                              return false;
                          }
                      }
                  return true;
              });

    // 7. NAH roundtrip and diagram residuals under 1e-9, 500 samples per
    //    cell, standard lattice plus 10 random well-conditioned ones.
    criterion(7, "NAH roundtrip and diagram residuals < 1e-9 over 500 samples per cell",
              [](std::string& note) {
                  SampleRng lattice_rng(20240817, 0);
                  for (int g = 1; g <= 3; ++g) {
                      std::vector<Lattice> lattices{Lattice::standard(g)};
                      for (int i = 0; i < 10; ++i)
                          lattices.push_back(random_lattice(g, lattice_rng));
                      for (int r = 1; r <= 4; ++r) {
                          for (std::size_t li = 0; li < lattices.size(); ++li) {
                              RoundtripOptions ro;
                              ro.samples = 500;
                              ro.seed = 1000 + g * 100 + r * 10 + li;
                              ro.tolerance = 1e-9;
                              const RoundtripReport rt = verify_nah_roundtrip(lattices[li], ro);

                              DiagramOptions dopt;
                              dopt.r = r;
                              dopt.samples = 500;
                              dopt.seed = 2000 + g * 100 + r * 10 + li;
                              dopt.tolerance = 1e-9;
                              const DiagramReport dg = verify_nah_diagram(lattices[li], dopt);

                              if (!rt.pass || !dg.pass) {
                                  std::ostringstream os;
                                  os << "g=" << g << " r=" << r << " lattice#" << li
                                     << " roundtrip=" << rt.max_residual
                                     << " diagram=" << dg.max_residual;
                                  note = os.str();
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    // 8. Spectral data: scaling equivariance, retraction invariances,
    //    embedding separation, and the worked sigma values.
    criterion(8, "spectral data equivariances, embedding separation, sigma = (5,6)",
              [](std::string& note) {
                  // worked value, exact
                  SpectralData two_three;
                  Eigen::VectorXcd p1(1), p2(1);
                  p1[0] = std::complex<double>(2, 0);
                  p2[0] = std::complex<double>(3, 0);
                  two_three = {p1, p2};
                  const HitchinImage img = hitchin_embedding(two_three);
                  if (img.sigma[0].coefficients.at({1}) != std::complex<double>(5, 0)
                      || img.sigma[1].coefficients.at({2}) != std::complex<double>(6, 0)) {
                      note = "worked sigma values are off";
                      return false;
                  }

                  // Gm-equivariance and retraction invariance
                  for (auto [g, r] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 3}, {1, 4}}) {
                      SampleRng rng(8800 + g * 10 + r, 0);
                      DolbeaultMultiset m;
                      for (int a = 0; a < r; ++a) {
                          RankOneDolbeault p;
                          p.higgs = random_multiset(g, 1, rng)[0];
                          p.phases = Eigen::VectorXcd::Ones(2 * g);
                          m.points.push_back(p);
                      }
                      const SpectralData sd = spectral_data(m);
                      const SpectralData base = retract_to_sphere_quotient(sd);
                      for (double t : {0.5, 2.0, 10.0}) {
                          DolbeaultMultiset scaled_m = m;
                          for (auto& p : scaled_m.points)
                              p.higgs *= t;
                          const SpectralData scaled_sd = spectral_data(scaled_m);
                          double scale = 0.0, residual = 0.0;
                          for (int a = 0; a < r; ++a) {
                              residual = std::max(
                                  residual,
                                  (scaled_sd[a] - t * sd[a]).cwiseAbs().maxCoeff());
                              scale = std::max(scale, scaled_sd[a].cwiseAbs().maxCoeff());
                          }
                          if (residual > 1e-12 * std::max(1.0, scale)) {
                              note = "scaling equivariance";
                              return false;
                          }
                          if (multiset_distance(retract_to_sphere_quotient(scaled_sd), base)
                              > 1e-12) {
                              note = "retraction scale invariance";
                              return false;
                          }
                      }
                      SpectralData permuted = sd;
                      std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
                      if (multiset_distance(retract_to_sphere_quotient(permuted), base) > 1e-12) {
                          note = "retraction permutation invariance";
                          return false;
                      }
                  }

                  // separation on 1000 genuinely distinct pairs
                  int done = 0;
                  std::uint64_t stream = 0;
                  const std::vector<std::pair<int, int>> shapes{{1, 2}, {2, 2}, {1, 3}, {3, 2}};
                  while (done < 1000) {
                      const auto [g, r] = shapes[done % shapes.size()];
                      SampleRng rng(424242, stream++);
                      const SpectralData a = random_multiset(g, r, rng);
                      const SpectralData b = random_multiset(g, r, rng);
                      if (multiset_distance(a, b) < 0.25)
                          continue;
                      if (hitchin_distance(hitchin_embedding(a), hitchin_embedding(b)) <= 1e-6) {
                          note = "embedding separation at pair " + std::to_string(done);
                          return false;
                      }
                      ++done;
                  }
                  return true;
              });

    // 9. Failure detection: the perturbation fixture makes every verify
    //    subcommand exit 1.
    criterion(9, "each verify subcommand exits 1 under --debug-perturb", [](std::string& note) {
        for (const std::string sub : {"p-equals-w", "curious-duality", "hodge-tate",
                                      "hard-lefschetz", "manifold", "rational-sphere"}) {
            const int clean = run_cli_status("verify " + sub + " --g 1 --r 2");
            const int broken = run_cli_status("verify " + sub + " --g 1 --r 2 --debug-perturb");
            if (clean != 0 || broken != 1) {
                note = sub + " exits " + std::to_string(broken) + " (clean "
                       + std::to_string(clean) + ")";
                return false;
            }
        }
        return true;
    });

    if (failures == 0)
        std::printf("all acceptance criteria pass\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
