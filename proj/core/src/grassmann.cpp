#include "subcond/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace subcond {

namespace {

void check_pair(const SubspaceProjector& p, const SubspaceProjector& q) {
  if (p.ambient() != q.ambient()) {
    throw std::invalid_argument("principal_angles: ambient mismatch");
  }
  if (p.rank != q.rank) {
    throw std::invalid_argument("principal_angles: rank mismatch");
  }
}

// k dominant eigenvectors of a Hermitian projector.
template <class MatT>
MatT dominant_basis(const MatT& p, Index k) {
  Eigen::SelfAdjointEigenSolver<MatT> es(p);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("principal_angles: eigendecomposition failed");
  }
  return es.eigenvectors().rightCols(k);
}

template <class MatT>
RealVector angles_impl(const MatT& p, const MatT& q, Index k) {
  const MatT bp = dominant_basis(p, k);
  const MatT bq = dominant_basis(q, k);
  MatT overlap = bp.adjoint() * bq;
  Eigen::JacobiSVD<MatT> svd(overlap);
  RealVector theta(k);
  for (Index i = 0; i < k; ++i) {
    const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    theta(i) = std::acos(c);
  }
  // singular values are nonincreasing, so theta is already nondecreasing
  return theta;
}

}  // namespace

PrincipalAngles principal_angles(const SubspaceProjector& p,
                                 const SubspaceProjector& q) {
  check_pair(p, q);
  const Index k = p.rank;
  if (k == 0) return {RealVector(0)};
  if (p.p.is_real() && q.p.is_real()) {
    return {angles_impl(p.p.real(), q.p.real(), k)};
  }
  return {angles_impl(p.p.as_complex(), q.p.as_complex(), k)};
}

double distance(const SubspaceProjector& p, const SubspaceProjector& q,
                DistanceKind kind) {
  check_pair(p, q);
  if (kind == DistanceKind::Chordal) {
    double diff = 0.0;
    if (p.p.is_real() && q.p.is_real()) {
      diff = (p.p.real() - q.p.real()).norm();
    } else {
      diff = (p.p.as_complex() - q.p.as_complex()).norm();
    }
    return diff / std::numbers::sqrt2;
  }

  const RealVector theta = principal_angles(p, q).theta;
  if (kind == DistanceKind::Grassmann) return theta.norm();
  return (2.0 * (theta / 2.0).array().sin()).matrix().norm();
}

double max_distance(DistanceKind kind, int k) {
  if (k < 0) throw std::invalid_argument("max_distance: negative rank");
  const double kd = static_cast<double>(k);
  switch (kind) {
    case DistanceKind::Chordal:
      return std::sqrt(kd);
    case DistanceKind::Grassmann:
      return std::numbers::pi / 2.0 * std::sqrt(kd);
    case DistanceKind::Procrustes:
      return std::sqrt(2.0 * kd);
  }
  throw std::logic_error("max_distance: unknown kind");
}

const char* distance_kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::Chordal:
      return "chordal";
    case DistanceKind::Grassmann:
      return "grassmann";
    case DistanceKind::Procrustes:
      return "procrustes";
  }
  return "unknown";
}

}  // namespace subcond
