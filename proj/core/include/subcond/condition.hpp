#pragma once

#include <optional>
#include <utility>

#include "subcond/selection.hpp"
#include "subcond/subspace.hpp"
#include "subcond/svd.hpp"

namespace subcond {

/// Condition number of the map taking a matrix to the singular subspace
/// chosen by a selection.
///
/// kappa is +inf exactly when the matrix is a boundary point for the
/// selection (the tie band reports a split singular value, including an
/// exact tie). kappa_raw always carries the value of the closed formula on
/// the raw spectrum, so a near-tie reports both the finite raw value and
/// the infinite verdict. kappa is 0 exactly for the empty and the full
/// selection. The witness pair (i in pi, j in pi^c, 1-based) attains the
/// maximum and is present iff kappa is finite and positive; ties between
/// maximizing pairs resolve to the lexicographically smallest pair.
struct ConditionReport {
  double kappa = 0.0;
  double kappa_raw = 0.0;
  /// Relative variant kappa * ||A||_F (inf when kappa is inf).
  double mu = 0.0;
  std::optional<std::pair<int, int>> witness;
  bool member = true;
  /// Minimal-gap pair across the split when member is false.
  std::optional<std::pair<int, int>> tie;
  Side side = Side::Left;
  int k = 0;
};

/// Closed-form condition number of a left singular subspace:
///
///   max over i in pi, j in pi^c of
///     1/|sigma_i - sigma_j| * sqrt((sigma_i^2 + sigma_j^2) / (sigma_i + sigma_j)^2)
///
/// over the spectrum zero-padded to length m. Pairs with sigma_i = sigma_j
/// contribute +inf (the 0/0 pair of two padded zeros resolves to +inf as
/// well, since such a selection splits the cokernel). An empty or full
/// selection evaluates to zero. Total on valid inputs.
ConditionReport kappa_formula(const PaddedSpectrum& spectrum, const Selection& sel,
                              double tie_tol = defaults::kTieTol);

/// Condition number of a right singular subspace, reduced to the left
/// singular subspace of the adjoint matrix.
ConditionReport kappa_right(const Matrix& a, const Selection& sel,
                            double rank_rtol = defaults::kRankRtol,
                            double tie_tol = defaults::kTieTol);

/// mu = kappa * ||A||_F, with 0 -> 0 and inf -> inf regardless of the norm.
double relative_condition(const ConditionReport& report, double fro_norm_a);

/// Independent evaluation of the same condition number through the spectral
/// norms of two diagonal operators: the cokernel factor
///
///   max over i in pi of 1/sigma_i              when m > rank = n, else 0,
///
/// and the core factor, the largest diagonal entry of D^-1 where
///
///   D^2 = (S2^2 (x) I - I (x) S1^2)^2 T^-1,   T = S2^2 (x) I + I (x) S1^2,
///
/// built literally from the Kronecker-product diagonals of the selected
/// (S1) and unselected (S2) parts of the spectrum restricted to 1..rank.
/// Selections reaching past the rank are replaced by their complement;
/// if neither the selection nor its complement lies inside 1..rank the
/// cokernel is split and the result is +inf.
///
/// Agrees with kappa_formula whenever rank = min(m, n) and the singular
/// values are distinct.
double kappa_diagonal_operator(const PaddedSpectrum& spectrum,
                               const Selection& sel);

}  // namespace subcond
