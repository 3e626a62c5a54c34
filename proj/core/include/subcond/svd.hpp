#pragma once

#include <stdexcept>

#include "subcond/matrix.hpp"

namespace subcond {

/// The numerical SVD backend failed to converge.
struct SvdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full singular value decomposition A = U * Sigma_hat * V^H.
///
/// U is m x m unitary, V is n x n unitary. The spectrum is stored
/// zero-padded to length m (the convention used for left-subspace
/// selections): sigma(0) >= ... >= sigma(m-1) >= 0, with entries past
/// `rank` forced to exact zero.
struct SvdFactors {
  Matrix u;
  Matrix v;
  RealVector sigma;
  Index rank = 0;

  Index rows() const { return u.rows(); }
  Index cols() const { return v.rows(); }
};

/// Computes the full SVD of `a`. The rank is the number of singular values
/// strictly above rank_rtol * sigma_1 (zero for the zero matrix, whose
/// factors are pinned to U = I, V = I).
///
/// Throws SvdError if the backend does not converge and
/// std::invalid_argument for negative rank_rtol.
SvdFactors svd_full(const Matrix& a, double rank_rtol = defaults::kRankRtol);

/// ||A - U Sigma_hat V^H||_F for diagnostics and tests.
double reconstruction_residual(const Matrix& a, const SvdFactors& f);

/// Spectrum of an m x n matrix, zero-padded to length m.
struct PaddedSpectrum {
  RealVector sigma;
  Index m = 0;
  Index n = 0;
  Index rank = 0;

  /// ||A||_F of the underlying matrix (the l2 norm of the spectrum).
  double frobenius_norm() const { return sigma.norm(); }

  /// Validating factory for synthetic spectra.
  static PaddedSpectrum create(RealVector sigma, Index m, Index n, Index rank);
};

PaddedSpectrum padded_spectrum(const SvdFactors& f);

}  // namespace subcond
