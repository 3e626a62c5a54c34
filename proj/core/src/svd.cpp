#include "subcond/svd.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace subcond {

namespace {

Matrix wrap(RealMatrix m) { return Matrix::from_real(std::move(m)); }
Matrix wrap(ComplexMatrix m) { return Matrix::from_complex(std::move(m)); }

template <class MatT>
SvdFactors svd_impl(const MatT& a, double rank_rtol) {
  const Index m = a.rows();
  const Index n = a.cols();

  SvdFactors out;
  if (a.norm() == 0.0) {
    out.u = wrap(MatT(MatT::Identity(m, m)));
    out.v = wrap(MatT(MatT::Identity(n, n)));
    out.sigma = RealVector::Zero(m);
    out.rank = 0;
    return out;
  }

  Eigen::JacobiSVD<MatT> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw SvdError("svd_full: SVD did not converge");
  }

  const RealVector sv = svd.singularValues();
  RealVector sigma = RealVector::Zero(m);
  sigma.head(sv.size()) = sv;

  const double threshold = rank_rtol * sv(0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  for (Index i = rank; i < m; ++i) sigma(i) = 0.0;

  out.u = wrap(MatT(svd.matrixU()));
  out.v = wrap(MatT(svd.matrixV()));
  out.sigma = std::move(sigma);
  out.rank = rank;
  return out;
}

template <class MatT>
double residual_impl(const MatT& a, const SvdFactors& f, const MatT& u,
                     const MatT& v) {
  const Index m = a.rows();
  const Index n = a.cols();
  MatT sigma_hat = MatT::Zero(m, n);
  const Index d = std::min(m, n);
  for (Index i = 0; i < d; ++i) sigma_hat(i, i) = f.sigma(i);
  return (a - u * sigma_hat * v.adjoint()).norm();
}

}  // namespace

SvdFactors svd_full(const Matrix& a, double rank_rtol) {
  if (!(rank_rtol >= 0.0)) {
    throw std::invalid_argument("svd_full: rank_rtol must be >= 0");
  }
  return a.is_real() ? svd_impl(a.real(), rank_rtol)
                     : svd_impl(a.complex(), rank_rtol);
}

double reconstruction_residual(const Matrix& a, const SvdFactors& f) {
  if (a.is_real() && f.u.is_real()) {
    return residual_impl(a.real(), f, f.u.real(), f.v.real());
  }
  return residual_impl(a.as_complex(), f, f.u.as_complex(), f.v.as_complex());
}

PaddedSpectrum PaddedSpectrum::create(RealVector sigma, Index m, Index n,
                                      Index rank) {
  if (sigma.size() != m || m < 1 || n < 1) {
    throw std::invalid_argument("PaddedSpectrum: sigma must have length m");
  }
  if (rank < 0 || rank > std::min(m, n)) {
    throw std::invalid_argument("PaddedSpectrum: rank out of range");
  }
  for (Index i = 0; i < m; ++i) {
    if (!(sigma(i) >= 0.0)) {
      throw std::invalid_argument("PaddedSpectrum: negative or NaN entry");
    }
    if (i > 0 && sigma(i) > sigma(i - 1)) {
      throw std::invalid_argument("PaddedSpectrum: not nonincreasing");
    }
    if (i >= rank && sigma(i) != 0.0) {
      throw std::invalid_argument(
          "PaddedSpectrum: entries past the rank must be exactly zero");
    }
  }
  PaddedSpectrum out;
  out.sigma = std::move(sigma);
  out.m = m;
  out.n = n;
  out.rank = rank;
  return out;
}

PaddedSpectrum padded_spectrum(const SvdFactors& f) {
  PaddedSpectrum out;
  out.sigma = f.sigma;
  out.m = f.rows();
  out.n = f.cols();
  out.rank = f.rank;
  return out;
}

}  // namespace subcond
