#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subcond/condition.hpp"
#include "subcond/grassmann.hpp"

namespace subcond {

/// A probe step could not be evaluated (boundary matrix, or a step size
/// large enough to risk reordering singular values across the selection
/// split).
struct ProbeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A direction in matrix space used for finite-difference probing.
struct PerturbationDirection {
  enum class Kind { Worst, Random, UserSupplied };

  Matrix adot;
  Kind kind = Kind::UserSupplied;
  /// Witness pair for Kind::Worst, 1-based.
  int i = 0;
  int j = 0;
  /// Stream id for Kind::Random.
  std::uint64_t sample = 0;
};

/// Closed-form direction along which the directional quotient attains the
/// condition number as t -> 0:
///
///   Adot = U (e_j e_i^T - e_i e_j^T) Sigma_hat V^H
///        + 2 sigma_i sigma_j / (sigma_i^2 + sigma_j^2)
///            * U Sigma_hat (e_i e_j^T - e_j e_i^T) V^H,
///
/// where the second term is present only for 1 <= i, j <= rank. The
/// elementary matrices live in the m- and n-dimensional spaces; terms
/// addressing indices past min(m, n) vanish through the zero padding of
/// Sigma_hat. At unit step the construction has Frobenius norm
/// |sigma_i - sigma_j| (sigma_i + sigma_j) / sqrt(sigma_i^2 + sigma_j^2).
///
/// Throws std::invalid_argument for i = j, out-of-range indices, or
/// sigma_i = sigma_j (the direction degenerates at a tie).
PerturbationDirection worst_direction(const SvdFactors& f, int i, int j);

/// Gaussian direction with unit Frobenius norm, drawn from a stream derived
/// from (seed, sample) so results do not depend on evaluation order.
PerturbationDirection random_direction(Index rows, Index cols, Field field,
                                       std::uint64_t seed,
                                       std::uint64_t sample);

/// d(L_pi(A), L_pi(A + t Adot)) / (t ||Adot||_F) for one step size.
///
/// Errors (ProbeError): A is not a member for the selection, or
/// 2 t ||Adot||_F reaches the minimal singular value gap across the split,
/// in which case the perturbed subspace can no longer be tracked by
/// position and a smaller t is required.
double directional_quotient(const Matrix& a, const Selection& sel,
                            const PerturbationDirection& dir, double t,
                            DistanceKind kind,
                            double tie_tol = defaults::kTieTol,
                            double rank_rtol = defaults::kRankRtol);

struct ProbeConfig {
  int num_random_dirs = 64;
  /// Dimensionless step sizes, strictly decreasing, in (0, 1]. Actual steps
  /// are scaled per direction by ||A||_F / ||Adot||_F.
  std::vector<double> t_schedule = {1e-4, 1e-5, 1e-6};
  std::uint64_t seed = defaults::kSeed;
  DistanceKind kind = DistanceKind::Chordal;
  bool include_worst = true;
};

struct ProbeResult {
  /// Steps and per-step quotients for the direction attaining the maximum.
  std::vector<double> t_values;
  std::vector<double> quotients;
  /// Best t -> 0 estimate: max over directions of the per-direction linear
  /// least-squares extrapolation.
  double extrapolated = 0.0;
  DistanceKind kind = DistanceKind::Chordal;
  /// Extrapolation along the closed-form worst direction (NaN if not run).
  double worst_estimate = 0.0;
  /// Max extrapolation over the random directions (NaN if none).
  double random_max = 0.0;
  std::optional<std::pair<int, int>> witness;
};

/// Monte-Carlo lower bound on the condition number: probes random
/// unit-norm directions (plus the closed-form worst direction when
/// cfg.include_worst and the formula has a witness) across the step
/// schedule and extrapolates each quotient curve to t -> 0.
ProbeResult empirical_kappa(const Matrix& a, const Selection& sel,
                            const ProbeConfig& cfg,
                            double tie_tol = defaults::kTieTol,
                            double rank_rtol = defaults::kRankRtol);

/// Restriction of scalars: maps a complex m x n matrix A = X + iY to the
/// real 2m x 2n matrix [[X, Y], [-Y, X]]; multiplicative, additive,
/// adjoint-to-transpose, and an isometry up to the factor sqrt(2):
/// ||j(A)||_F = sqrt(2) ||A||_F. Each distinct singular value of A appears
/// in j(A) with doubled multiplicity.
///
/// Throws std::invalid_argument for real input (which embeds as itself).
Matrix restrict_scalars(const Matrix& a);

}  // namespace subcond
