#pragma once

#include <optional>
#include <utility>

#include "subcond/matrix.hpp"
#include "subcond/selection.hpp"
#include "subcond/svd.hpp"

namespace subcond {

/// A point of Gr(k, F^p), stored as the rank-k Hermitian idempotent
/// projector onto the subspace.
struct SubspaceProjector {
  Matrix p;
  Index rank = 0;

  Index ambient() const { return p.rows(); }
};

/// Diagonal 0/1 projector with ones exactly at the selected positions.
SubspaceProjector selection_projector(const Selection& sel);

/// Projector onto the span of the singular vectors selected by `sel`:
/// columns of U for a Left selection, columns of V for a Right one.
SubspaceProjector subspace_of(const SvdFactors& f, const Selection& sel);

/// Orthogonal complement I - P.
SubspaceProjector complement(const SubspaceProjector& p);

/// Builds a projector from a (not necessarily orthonormal) basis given as
/// the columns of `basis`; the rank is determined by a rank-revealing QR.
SubspaceProjector projector_from_basis(const Matrix& basis);

/// Checks whether `m` is a Hermitian idempotent matrix within `tol` and, if
/// so, returns it as a projector with rank = round(trace).
std::optional<SubspaceProjector> as_projector(const Matrix& m,
                                              double tol = 1e-8);

/// Result of testing whether the selection is a valid subspace choice for
/// the spectrum, i.e. whether it splits a (padded) repeated singular value.
struct Membership {
  bool member = true;
  /// Pair (i in pi, j in pi^c), 1-based, attaining the minimal gap; set
  /// when the check reports a boundary matrix.
  std::optional<std::pair<int, int>> tie;
  /// min |sigma_i - sigma_j| over i in pi, j in pi^c (+inf if no pairs).
  double min_gap = 0.0;
};

/// Boundary iff some pair across the selection split has
/// |sigma_i - sigma_j| <= tie_tol * max(sigma_1, 1 if sigma_1 = 0).
/// Left selections only; right subspaces go through the adjoint matrix.
Membership membership_check(const PaddedSpectrum& spectrum, const Selection& sel,
                            double tie_tol = defaults::kTieTol);

Membership membership_check(const SvdFactors& f, const Selection& sel,
                            double tie_tol = defaults::kTieTol);

}  // namespace subcond
