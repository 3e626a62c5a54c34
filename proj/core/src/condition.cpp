#include "subcond/condition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace subcond {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One term of the max: the inverse gap times a scaling factor in
// [1/sqrt(2), 1]. Written symmetrically in (si, sj) so that the complement
// selection produces bitwise-identical terms.
double pair_term(double si, double sj) {
  if (si == sj) return kInf;
  const double gap = std::abs(si - sj);
  return std::sqrt(si * si + sj * sj) / (si + sj) / gap;
}

// diag(diag(a) (x) diag(b)) in lexicographic vec order.
RealVector kron_diag(const RealVector& a, const RealVector& b) {
  RealVector out(a.size() * b.size());
  for (Index j = 0; j < a.size(); ++j) {
    for (Index i = 0; i < b.size(); ++i) {
      out(j * b.size() + i) = a(j) * b(i);
    }
  }
  return out;
}

}  // namespace

ConditionReport kappa_formula(const PaddedSpectrum& spectrum, const Selection& sel,
                              double tie_tol) {
  if (sel.side() != Side::Left) {
    throw std::invalid_argument(
        "kappa_formula: right selections go through kappa_right");
  }
  if (sel.ambient() != spectrum.m) {
    throw std::invalid_argument("kappa_formula: ambient mismatch");
  }

  ConditionReport report;
  report.side = Side::Left;
  report.k = sel.size();

  const Membership membership = membership_check(spectrum, sel, tie_tol);
  report.member = membership.member;
  report.tie = membership.tie;

  if (sel.empty() || sel.full()) {
    return report;  // constant map: kappa = mu = 0
  }

  const Selection rest = sel.complement();
  double raw = -1.0;
  std::optional<std::pair<int, int>> witness;
  for (int i : sel.indices()) {
    for (int j : rest.indices()) {
      const double term = pair_term(spectrum.sigma(i - 1), spectrum.sigma(j - 1));
      if (term > raw) {
        raw = term;
        witness = std::make_pair(i, j);
      }
    }
  }

  report.kappa_raw = raw;
  report.kappa = report.member ? raw : kInf;
  if (std::isfinite(report.kappa) && report.kappa > 0.0) {
    report.witness = witness;
  }
  report.mu = relative_condition(report, spectrum.frobenius_norm());
  return report;
}

ConditionReport kappa_right(const Matrix& a, const Selection& sel,
                            double rank_rtol, double tie_tol) {
  if (sel.side() != Side::Right) {
    throw std::invalid_argument("kappa_right: expected a right selection");
  }
  if (sel.ambient() != a.cols()) {
    throw std::invalid_argument(
        "kappa_right: selection ambient must match the column count");
  }
  const SvdFactors f = svd_full(a.adjoint(), rank_rtol);
  ConditionReport report =
      kappa_formula(padded_spectrum(f), sel.as_left(), tie_tol);
  report.side = Side::Right;
  return report;
}

double relative_condition(const ConditionReport& report, double fro_norm_a) {
  if (!(fro_norm_a >= 0.0)) {
    throw std::invalid_argument("relative_condition: negative norm");
  }
  if (report.kappa == 0.0) return 0.0;
  if (std::isinf(report.kappa)) return kInf;
  return report.kappa * fro_norm_a;
}

double kappa_diagonal_operator(const PaddedSpectrum& spectrum,
                               const Selection& sel) {
  if (sel.side() != Side::Left) {
    throw std::invalid_argument("kappa_diagonal_operator: left selections only");
  }
  if (sel.ambient() != spectrum.m) {
    throw std::invalid_argument("kappa_diagonal_operator: ambient mismatch");
  }

  const Index r = spectrum.rank;
  auto inside_core = [r](const Selection& s) {
    return s.empty() || s.indices().back() <= r;
  };

  Selection core = sel;
  if (!inside_core(core)) {
    core = core.complement();
    if (!inside_core(core)) return kInf;  // the cokernel is split
  }

  // Cokernel factor: spectral norm of I_{m-r} (x) S Sigma^-1.
  double kappa_uperp = 0.0;
  if (spectrum.m > r && r == spectrum.n) {
    for (int i : core.indices()) {
      kappa_uperp = std::max(kappa_uperp, 1.0 / spectrum.sigma(i - 1));
    }
  }

  // Core factor: spectral norm of D^-1.
  const Index k = core.size();
  RealVector s1(k), s2(r - k);
  Index a = 0, b = 0;
  for (int i = 1; i <= r; ++i) {
    if (core.contains(i)) {
      s1(a++) = spectrum.sigma(i - 1);
    } else {
      s2(b++) = spectrum.sigma(i - 1);
    }
  }

  const RealVector ones_k = RealVector::Ones(k);
  const RealVector ones_rest = RealVector::Ones(r - k);
  const RealVector s1sq = s1.array().square();
  const RealVector s2sq = s2.array().square();

  const RealVector t = kron_diag(s2sq, ones_k) + kron_diag(ones_rest, s1sq);
  const RealVector num = kron_diag(s2sq, ones_k) - kron_diag(ones_rest, s1sq);

  double kappa_u = 0.0;
  for (Index l = 0; l < t.size(); ++l) {
    const double d_sq = num(l) * num(l) / t(l);
    kappa_u = std::max(kappa_u, d_sq == 0.0 ? kInf : 1.0 / std::sqrt(d_sq));
  }

  return std::max(kappa_uperp, kappa_u);
}

}  // namespace subcond
