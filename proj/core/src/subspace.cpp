#include "subcond/subspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/QR>

namespace subcond {

namespace {

template <class MatT>
MatT columns_at(const MatT& src, const std::vector<int>& indices_1based) {
  MatT q(src.rows(), static_cast<Index>(indices_1based.size()));
  for (std::size_t c = 0; c < indices_1based.size(); ++c) {
    q.col(static_cast<Index>(c)) = src.col(indices_1based[c] - 1);
  }
  return q;
}

template <class MatT>
SubspaceProjector basis_projector(const MatT& basis) {
  Eigen::ColPivHouseholderQR<MatT> qr(basis);
  const Index rank = qr.rank();
  MatT q = qr.householderQ() * MatT::Identity(basis.rows(), rank);
  MatT p = q * q.adjoint();
  if constexpr (std::is_same_v<MatT, RealMatrix>) {
    return {Matrix::from_real(std::move(p)), rank};
  } else {
    return {Matrix::from_complex(std::move(p)), rank};
  }
}

template <class MatT>
bool projector_like(const MatT& m, double tol, Index& rank_out) {
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > tol * scale) return false;
  if ((m * m - m).norm() > tol * scale) return false;
  const double tr = std::real(Complex(m.trace()));
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > tol * std::max(1.0, std::abs(tr))) return false;
  if (rounded < 0.0 || rounded > static_cast<double>(m.rows())) return false;
  rank_out = static_cast<Index>(rounded);
  return true;
}

}  // namespace

SubspaceProjector selection_projector(const Selection& sel) {
  RealMatrix p = RealMatrix::Zero(sel.ambient(), sel.ambient());
  for (int i : sel.indices()) p(i - 1, i - 1) = 1.0;
  return {Matrix::from_real(std::move(p)), static_cast<Index>(sel.size())};
}

SubspaceProjector subspace_of(const SvdFactors& f, const Selection& sel) {
  const Matrix& src = sel.side() == Side::Left ? f.u : f.v;
  if (sel.ambient() != src.rows()) {
    throw std::invalid_argument(
        "subspace_of: selection ambient does not match the factor dimension");
  }
  if (src.is_real()) {
    RealMatrix q = columns_at(src.real(), sel.indices());
    return {Matrix::from_real(RealMatrix(q * q.transpose())),
            static_cast<Index>(sel.size())};
  }
  ComplexMatrix q = columns_at(src.complex(), sel.indices());
  return {Matrix::from_complex(ComplexMatrix(q * q.adjoint())),
          static_cast<Index>(sel.size())};
}

SubspaceProjector complement(const SubspaceProjector& p) {
  const Index d = p.ambient();
  if (p.p.is_real()) {
    return {Matrix::from_real(RealMatrix(RealMatrix::Identity(d, d) -
                                         p.p.real())),
            d - p.rank};
  }
  return {Matrix::from_complex(ComplexMatrix(ComplexMatrix::Identity(d, d) -
                                             p.p.complex())),
          d - p.rank};
}

SubspaceProjector projector_from_basis(const Matrix& basis) {
  if (basis.cols() > basis.rows()) {
    throw std::invalid_argument(
        "projector_from_basis: more columns than ambient dimension");
  }
  return basis.is_real() ? basis_projector(basis.real())
                         : basis_projector(basis.complex());
}

std::optional<SubspaceProjector> as_projector(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  Index rank = 0;
  const bool ok = m.is_real() ? projector_like(m.real(), tol, rank)
                              : projector_like(m.complex(), tol, rank);
  if (!ok) return std::nullopt;
  return SubspaceProjector{m, rank};
}

Membership membership_check(const PaddedSpectrum& spectrum, const Selection& sel,
                            double tie_tol) {
  if (sel.side() != Side::Left) {
    throw std::invalid_argument(
        "membership_check: right selections go through the adjoint matrix");
  }
  if (sel.ambient() != spectrum.m) {
    throw std::invalid_argument("membership_check: ambient mismatch");
  }
  if (!(tie_tol >= 0.0)) {
    throw std::invalid_argument("membership_check: tie_tol must be >= 0");
  }

  Membership out;
  out.min_gap = std::numeric_limits<double>::infinity();
  const Selection rest = sel.complement();
  for (int i : sel.indices()) {
    for (int j : rest.indices()) {
      const double gap = std::abs(spectrum.sigma(i - 1) - spectrum.sigma(j - 1));
      if (gap < out.min_gap) {
        out.min_gap = gap;
        out.tie = std::make_pair(i, j);
      }
    }
  }

  const double s1 = spectrum.sigma.size() > 0 ? spectrum.sigma(0) : 0.0;
  const double scale = s1 > 0.0 ? s1 : 1.0;
  out.member = !(out.min_gap <= tie_tol * scale);
  if (out.member) out.tie.reset();
  return out;
}

Membership membership_check(const SvdFactors& f, const Selection& sel,
                            double tie_tol) {
  return membership_check(padded_spectrum(f), sel, tie_tol);
}

}  // namespace subcond
