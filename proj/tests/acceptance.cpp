// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria are pinned to fixed tolerances and seeded inputs; see
// README for how to run this binary directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "subcond/condition.hpp"
#include "subcond/grassmann.hpp"
#include "subcond/perturbation.hpp"
#include "test_support.hpp"

using namespace subcond;
namespace ts = subcond::testsupport;

namespace {

struct Criterion {
  int id;
  std::string label;
  double time_budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& detail) {
  if (!ok && why.empty()) why = detail;
  return ok;
}

bool close_rel(double got, double want, double tol, std::string& why,
               const std::string& what) {
  const double rel = std::abs(got - want) / std::abs(want);
  return check(rel <= tol, why,
               what + ": got " + std::to_string(got) + ", want " +
                   std::to_string(want) + ", rel " + std::to_string(rel));
}

Selection left(Index m, std::vector<int> idx) {
  return Selection(Side::Left, m, std::move(idx));
}

double kappa_of(const PaddedSpectrum& spectrum, std::vector<int> idx) {
  return kappa_formula(spectrum, left(spectrum.m, std::move(idx))).kappa;
}

// ---------------------------------------------------------------------------
// The shared seeded ensemble for criteria 4-7: matrices up to 8 x 6, real and
// complex, well separated spectra, with selections that keep membership.
struct EnsembleEntry {
  Matrix a;
  Selection sel;
  ConditionReport report;
  PaddedSpectrum spectrum;
};

std::vector<EnsembleEntry> make_ensemble(int count) {
  std::vector<EnsembleEntry> out;
  ts::Rng rng(20240817);
  while (static_cast<int>(out.size()) < count) {
    const Index m = 2 + static_cast<Index>(rng() % 7);   // 2..8
    const Index n = 2 + static_cast<Index>(rng() % 5);   // 2..6
    const Index full = std::min(m, n);
    const bool deficient = full > 1 && out.size() % 5 == 4;
    const Index r = deficient ? full - 1 : full;
    const Field field = out.size() % 2 == 0 ? Field::Real : Field::Complex;

    const PaddedSpectrum spectrum = ts::gapped_spectrum(rng, m, n, r, 0.25, 1.0, 4.0);
    const Matrix a = ts::matrix_with_spectrum(rng, spectrum, field);

    // nonempty proper selection inside {1..r}, or its union with the
    // cokernel, so the matrix stays a member
    std::vector<int> idx;
    for (int i = 1; i <= r; ++i) {
      if (rng() % 2 == 0) idx.push_back(i);
    }
    if (idx.empty()) idx.push_back(1);
    if (static_cast<Index>(idx.size()) == r) idx.pop_back();
    if (idx.empty()) continue;
    if (rng() % 4 == 0) {
      for (int i = static_cast<int>(r) + 1; i <= m; ++i) idx.push_back(i);
      if (static_cast<Index>(idx.size()) == m) continue;
    }

    const SvdFactors f = svd_full(a);
    const PaddedSpectrum computed = padded_spectrum(f);
    const Selection sel = left(m, idx);
    const ConditionReport report = kappa_formula(computed, sel);
    if (!report.member || !report.witness) continue;
    out.push_back({a, sel, report, computed});
  }
  return out;
}

const std::vector<EnsembleEntry>& ensemble() {
  static const std::vector<EnsembleEntry> instance = make_ensemble(100);
  return instance;
}

// ---------------------------------------------------------------------------
bool criterion1_golden_values(std::string& why) {
  const PaddedSpectrum spectrum = padded_spectrum(svd_full(ts::example_matrix()));

  const double k1 = 0.5 * std::sqrt(20.0 / 36.0);
  const double k2 = std::sqrt(5.0) / 3.0;
  const double k3 = 100.0 * std::sqrt(1.0 + 0.99 * 0.99) / 1.99;
  const double k34 = 1.0 / 0.99;

  bool ok = true;
  ok &= close_rel(kappa_of(spectrum, {1}), k1, 1e-12, why, "kappa{1}");
  ok &= close_rel(kappa_of(spectrum, {2}), k2, 1e-12, why, "kappa{2}");
  ok &= close_rel(kappa_of(spectrum, {3}), k3, 1e-12, why, "kappa{3}");
  ok &= close_rel(kappa_of(spectrum, {4}), k3, 1e-12, why, "kappa{4}");
  ok &= check(std::isinf(kappa_of(spectrum, {5})), why, "kappa{5} not inf");
  ok &= check(std::isinf(kappa_of(spectrum, {6})), why, "kappa{6} not inf");
  ok &= close_rel(kappa_of(spectrum, {3, 4}), k34, 1e-12, why, "kappa{3,4}");
  ok &= close_rel(kappa_of(spectrum, {5, 6}), k34, 1e-12, why, "kappa{5,6}");

  // the size-2 reduction table
  const std::vector<std::pair<std::vector<int>, double>> table = {
      {{1, 2}, k2}, {{1, 3}, k3}, {{1, 4}, k3}, {{2, 3}, k3}, {{2, 4}, k3}};
  for (const auto& [idx, want] : table) {
    ok &= close_rel(kappa_of(spectrum, idx), want, 1e-12, why,
                    "kappa{" + std::to_string(idx[0]) + "," +
                        std::to_string(idx[1]) + "}");
  }
  // every remaining pair splits the zero pair {5,6} and is inf
  for (int i = 1; i <= 4; ++i) {
    for (int j : {5, 6}) {
      ok &= check(std::isinf(kappa_of(spectrum, {i, j})), why,
                  "kappa{" + std::to_string(i) + "," + std::to_string(j) +
                      "} not inf");
    }
  }
  return ok;
}

bool criterion2_finite_difference(std::string& why) {
  const Matrix a = ts::example_matrix();
  const SvdFactors f = svd_full(a);

  // (a) worst direction for (3,4), scaled so |A - A'|_F matches the
  // reference perturbation; chordal quotient within 0.1% of 70.71
  const PerturbationDirection dir34 = worst_direction(f, 3, 4);
  const double step = 1.414195706930316e-7 / dir34.adot.frobenius_norm();
  const double q34 = directional_quotient(a, left(6, {3}), dir34, step,
                                          DistanceKind::Chordal);
  bool ok = close_rel(q34, 70.71, 1e-3, why, "chordal quotient (3,4)");

  // (b) pi = {5,6} along sigma_4 u_perp e_4^T with eps = 1e-5
  const PerturbationDirection dir54 = worst_direction(f, 5, 4);
  const double q56 = directional_quotient(a, left(6, {5, 6}), dir54, 1e-5,
                                          DistanceKind::Chordal);
  ok &= close_rel(q56, 1.010101010050505, 1e-6, why, "quotient {5,6}");
  return ok;
}

bool criterion3_oracle_equivalence(std::string& why) {
  ts::Rng rng(1113);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 7);
    const Index n = 2 + static_cast<Index>(rng() % 7);
    const Index r = std::min(m, n);
    const PaddedSpectrum spectrum = ts::gapped_spectrum(rng, m, n, r, 0.05);

    std::vector<int> core_idx;
    for (int i = 1; i <= r; ++i) {
      if (rng() % 2 == 0) core_idx.push_back(i);
    }

    std::vector<Selection> sels;
    sels.push_back(left(m, core_idx));
    if (m > r) {
      // reduction case: selection reaching through the whole cokernel
      std::vector<int> with_cokernel = core_idx;
      for (int i = static_cast<int>(r) + 1; i <= m; ++i) {
        with_cokernel.push_back(i);
      }
      sels.push_back(left(m, with_cokernel));
      if (m - r >= 2) {
        // split cokernel: both routes must return inf
        std::vector<int> split = core_idx;
        split.push_back(static_cast<int>(r) + 1);
        sels.push_back(left(m, split));
      }
    }

    for (const Selection& sel : sels) {
      const double formula = kappa_formula(spectrum, sel).kappa_raw;
      const double oracle = kappa_diagonal_operator(spectrum, sel);
      if (std::isinf(formula) || std::isinf(oracle)) {
        ok &= check(std::isinf(formula) && std::isinf(oracle), why,
                    "inf mismatch between formula and oracle");
      } else if (formula == 0.0 || oracle == 0.0) {
        ok &= check(formula == oracle, why, "zero mismatch");
      } else {
        ok &= close_rel(oracle, formula, 1e-13, why, "oracle vs formula");
      }
      if (!ok) return ok;
    }
  }
  return ok;
}

bool criterion4_worst_direction_attainment(std::string& why) {
  bool ok = true;
  for (const EnsembleEntry& e : ensemble()) {
    const ProbeConfig cfg{.num_random_dirs = 0,
                          .t_schedule = {1e-4, 1e-5, 1e-6},
                          .seed = 1,
                          .kind = DistanceKind::Chordal,
                          .include_worst = true};
    const ProbeResult probe = empirical_kappa(e.a, e.sel, cfg);
    ok &= close_rel(probe.worst_estimate, e.report.kappa, 1e-3, why,
                    "worst-direction extrapolation");
    if (!ok) break;
  }
  return ok;
}

bool criterion5_sup_property(std::string& why) {
  bool ok = true;
  for (const EnsembleEntry& e : ensemble()) {
    const ProbeConfig cfg{.num_random_dirs = 64,
                          .t_schedule = {1e-4, 1e-5, 1e-6},
                          .seed = 2,
                          .kind = DistanceKind::Chordal,
                          .include_worst = false};
    const ProbeResult probe = empirical_kappa(e.a, e.sel, cfg);
    ok &= check(probe.random_max <= e.report.kappa * (1.0 + 1e-3), why,
                "random direction exceeded kappa: " +
                    std::to_string(probe.random_max) + " vs " +
                    std::to_string(e.report.kappa));
    if (!ok) break;
  }
  return ok;
}

bool criterion6_invariance_suite(std::string& why) {
  bool ok = true;
  ts::Rng rng(61783);

  for (const EnsembleEntry& e : ensemble()) {
    // complement equality, exact
    const double comp =
        kappa_formula(e.spectrum, e.sel.complement()).kappa;
    ok &= check(e.report.kappa == comp, why, "complement equality broken");

    // homogeneity kappa(cA) = kappa(A)/c on the spectrum, 1e-12
    const double c = 0.5 + static_cast<double>(rng() % 100);
    const PaddedSpectrum scaled = PaddedSpectrum::create(
        RealVector(c * e.spectrum.sigma), e.spectrum.m, e.spectrum.n, e.spectrum.rank);
    ok &= close_rel(kappa_formula(scaled, e.sel).kappa, e.report.kappa / c,
                    1e-12, why, "homogeneity");
    if (!ok) return ok;
  }

  // left/right transpose equality through two independent SVDs, 1e-12
  for (int trial = 0; trial < 25; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 7);
    const Index n = 2 + static_cast<Index>(rng() % 5);
    const Field field = trial % 2 == 0 ? Field::Real : Field::Complex;
    const PaddedSpectrum spectrum =
        ts::gapped_spectrum(rng, m, n, std::min(m, n), 0.25, 1.0, 4.0);
    const Matrix a = ts::matrix_with_spectrum(rng, spectrum, field);

    std::vector<int> rho_idx = {1 + static_cast<int>(rng() % n)};
    const Selection rho(Side::Right, n, rho_idx);
    const double via_right = kappa_right(a, rho).kappa;

    // independent route: pad the spectrum of A itself to length n
    const RealVector sig_m = padded_spectrum(svd_full(a)).sigma;
    RealVector sig_n = RealVector::Zero(n);
    const Index d = std::min(m, n);
    sig_n.head(d) = sig_m.head(d);
    const PaddedSpectrum repadded = PaddedSpectrum::create(
        sig_n, n, m, std::min(d, padded_spectrum(svd_full(a)).rank));
    const double via_left = kappa_formula(repadded, rho.as_left()).kappa;
    if (std::isinf(via_right) || std::isinf(via_left)) {
      ok &= check(std::isinf(via_right) && std::isinf(via_left), why,
                  "transpose equality inf mismatch");
    } else {
      ok &= close_rel(via_right, via_left, 1e-12, why, "transpose equality");
    }
    if (!ok) return ok;
  }

  // field extension: real matrices through the complex code path, 1e-12
  for (int trial = 0; trial < 25; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 7);
    const Index n = 2 + static_cast<Index>(rng() % 5);
    const PaddedSpectrum spectrum =
        ts::gapped_spectrum(rng, m, n, std::min(m, n), 0.25, 1.0, 4.0);
    const Matrix a = ts::matrix_with_spectrum(rng, spectrum, Field::Real);
    std::vector<int> idx = {1 + static_cast<int>(rng() % m)};
    const Selection sel = left(m, idx);
    const double real_path = kappa_formula(padded_spectrum(svd_full(a)), sel).kappa;
    const double complex_path =
        kappa_formula(padded_spectrum(svd_full(
                          Matrix::from_complex(a.as_complex()))),
                      sel)
            .kappa;
    if (std::isinf(real_path) || std::isinf(complex_path)) {
      ok &= check(std::isinf(real_path) == std::isinf(complex_path), why,
                  "field extension inf mismatch");
    } else {
      ok &= close_rel(complex_path, real_path, 1e-12, why, "field extension");
    }
    if (!ok) return ok;
  }

  // unitary invariance of the three distances, 1e-10
  for (int trial = 0; trial < 25; ++trial) {
    const Index d = 3 + static_cast<Index>(rng() % 6);
    const Index k = 1 + static_cast<Index>(rng() % (d - 1));
    const Field field = trial % 2 == 0 ? Field::Real : Field::Complex;
    const SubspaceProjector p = ts::random_projector(rng, d, k, field);
    const SubspaceProjector q = ts::random_projector(rng, d, k, field);
    SubspaceProjector wp = p, wq = q;
    if (field == Field::Real) {
      const RealMatrix w = ts::random_orthogonal(rng, d);
      wp.p = Matrix::from_real(RealMatrix(w * p.p.real() * w.transpose()));
      wq.p = Matrix::from_real(RealMatrix(w * q.p.real() * w.transpose()));
    } else {
      const ComplexMatrix w = ts::random_unitary(rng, d);
      wp.p = Matrix::from_complex(ComplexMatrix(w * p.p.complex() * w.adjoint()));
      wq.p = Matrix::from_complex(ComplexMatrix(w * q.p.complex() * w.adjoint()));
    }
    for (DistanceKind kind : {DistanceKind::Chordal, DistanceKind::Grassmann,
                              DistanceKind::Procrustes}) {
      ok &= check(std::abs(distance(wp, wq, kind) - distance(p, q, kind)) <=
                      1e-10,
                  why, "unitary invariance broken");
    }

    // chordal complement isometry, 1e-10
    ok &= check(std::abs(distance(complement(p), complement(q),
                                  DistanceKind::Chordal) -
                         distance(p, q, DistanceKind::Chordal)) <= 1e-10,
                why, "chordal complement isometry broken");
    if (!ok) return ok;
  }
  return ok;
}

bool criterion7_remark_bound(std::string& why) {
  bool ok = true;
  for (const EnsembleEntry& e : ensemble()) {
    const auto [i, j] = *e.report.witness;
    const double gap =
        std::abs(e.spectrum.sigma(i - 1) - e.spectrum.sigma(j - 1));
    const double product = e.report.kappa * gap;
    // exact bounds up to a few ulps of arithmetic rounding
    ok &= check(product >= 1.0 / std::sqrt(2.0) - 1e-14, why,
                "product below 1/sqrt(2): " + std::to_string(product));
    ok &= check(product <= 1.0 + 1e-14, why,
                "product above 1: " + std::to_string(product));
    if (!ok) break;
  }
  return ok;
}

bool criterion8_restriction_of_scalars(std::string& why) {
  ts::Rng rng(81997);
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 5);
    const Index n = 1 + static_cast<Index>(rng() % 5);
    const Index inner = 1 + static_cast<Index>(rng() % 5);
    const Matrix x = ts::gaussian_matrix(rng, m, inner, Field::Complex);
    const Matrix y = ts::gaussian_matrix(rng, inner, n, Field::Complex);

    // multiplicativity
    const RealMatrix lhs = restrict_scalars(Matrix::from_complex(
                               ComplexMatrix(x.complex() * y.complex())))
                               .real();
    const RealMatrix rhs =
        restrict_scalars(x).real() * restrict_scalars(y).real();
    ok &= check((lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm()), why,
                "j(XY) != j(X) j(Y)");

    // isometry
    ok &= close_rel(restrict_scalars(x).frobenius_norm(),
                    std::sqrt(2.0) * x.frobenius_norm(), 1e-12, why,
                    "isometry |j(A)|_F");

    // doubled multiplicities
    const SvdFactors fx = svd_full(x);
    const SvdFactors fj = svd_full(restrict_scalars(x));
    const Index d = std::min(m, inner);
    for (Index i = 0; i < d; ++i) {
      const double s = fx.sigma(i);
      if (s == 0.0) continue;
      ok &= close_rel(fj.sigma(2 * i), s, 1e-12, why, "doubled sigma (even)");
      ok &= close_rel(fj.sigma(2 * i + 1), s, 1e-12, why,
                      "doubled sigma (odd)");
    }
    if (!ok) break;
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "worked-example golden values (1e-12 relative)", 1.0,
       criterion1_golden_values},
      {2, "finite-difference reproduction (0.1% / 1e-6)", 5.0,
       criterion2_finite_difference},
      {3, "diagonal-operator oracle equivalence (1e-13, 1000 spectra)", 5.0,
       criterion3_oracle_equivalence},
      {4, "worst-direction attainment (1e-3, 100 matrices)", 60.0,
       criterion4_worst_direction_attainment},
      {5, "sup property over 64 random directions", 60.0,
       criterion5_sup_property},
      {6, "invariance suite (complement, transpose, field, unitary, "
          "homogeneity)",
       60.0, criterion6_invariance_suite},
      {7, "inverse-gap scaling bound at the witness", 10.0,
       criterion7_remark_bound},
      {8, "restriction-of-scalars suite (1e-12)", 10.0,
       criterion8_restriction_of_scalars},
  };

  int failures = 0;
  for (Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > c.time_budget_seconds) {
      ok = false;
      why = "time budget exceeded: " + std::to_string(seconds) + "s > " +
            std::to_string(c.time_budget_seconds) + "s";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), seconds);
    if (!ok) {
      std::printf("       %s\n", why.c_str());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
