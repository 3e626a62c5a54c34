#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "subcond/grassmann.hpp"
#include "subcond/perturbation.hpp"
#include "test_support.hpp"

using namespace subcond;
namespace ts = subcond::testsupport;

namespace {

SubspaceProjector line(const RealVector& v) {
  const RealVector u = v / v.norm();
  return {Matrix::from_real(RealMatrix(u * u.transpose())), 1};
}

}  // namespace

TEST_CASE("principal angles: identical subspaces") {
  ts::Rng rng(11);
  const SubspaceProjector p = ts::random_projector(rng, 5, 2, Field::Real);
  const PrincipalAngles angles = principal_angles(p, p);
  REQUIRE(angles.theta.size() == 2);
  CHECK(angles.theta.norm() < 1e-7);  // arccos floor near zero angles
  for (DistanceKind kind : {DistanceKind::Chordal, DistanceKind::Grassmann,
                            DistanceKind::Procrustes}) {
    CHECK(distance(p, p, kind) < 1e-7);
  }
  CHECK(distance(p, p, DistanceKind::Chordal) == 0.0);
}

TEST_CASE("principal angles: orthogonal lines in R^3") {
  const SubspaceProjector e1 = line(RealVector::Unit(3, 0));
  const SubspaceProjector e2 = line(RealVector::Unit(3, 1));
  const PrincipalAngles angles = principal_angles(e1, e2);
  REQUIRE(angles.theta.size() == 1);
  CHECK(angles.theta(0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(distance(e1, e2, DistanceKind::Chordal) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(distance(e1, e2, DistanceKind::Grassmann) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(distance(e1, e2, DistanceKind::Procrustes) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
}

TEST_CASE("principal angles: analytic rotation by 0.3") {
  const double alpha = 0.3;
  RealVector v(3);
  v << std::cos(alpha), std::sin(alpha), 0.0;
  const PrincipalAngles angles =
      principal_angles(line(RealVector::Unit(3, 0)), line(v));
  REQUIRE(angles.theta.size() == 1);
  CHECK(std::abs(angles.theta(0) - alpha) < 1e-12);
}

TEST_CASE("errors: rank and ambient mismatch") {
  ts::Rng rng(3);
  const SubspaceProjector a = ts::random_projector(rng, 5, 2, Field::Real);
  const SubspaceProjector b = ts::random_projector(rng, 5, 3, Field::Real);
  const SubspaceProjector c = ts::random_projector(rng, 4, 2, Field::Real);
  CHECK_THROWS_AS(principal_angles(a, b), std::invalid_argument);
  CHECK_THROWS_AS(distance(a, c, DistanceKind::Chordal),
                  std::invalid_argument);
}

TEST_CASE("chordal consistency: ||sin theta|| vs projector difference") {
  ts::Rng rng(17);
  for (Field field : {Field::Real, Field::Complex}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Index d = 3 + static_cast<Index>(rng() % 5);
      const Index k = 1 + static_cast<Index>(rng() % (d - 1));
      const SubspaceProjector p = ts::random_projector(rng, d, k, field);
      const SubspaceProjector q = ts::random_projector(rng, d, k, field);
      const RealVector theta = principal_angles(p, q).theta;
      const double via_angles = theta.array().sin().matrix().norm();
      CHECK(std::abs(distance(p, q, DistanceKind::Chordal) - via_angles) <=
            1e-10);
    }
  }
}

TEST_CASE("distance ordering: chordal <= procrustes <= grassmann") {
  ts::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Index d = 3 + static_cast<Index>(rng() % 5);
    const Index k = 1 + static_cast<Index>(rng() % (d - 1));
    const SubspaceProjector p = ts::random_projector(rng, d, k, Field::Real);
    const SubspaceProjector q = ts::random_projector(rng, d, k, Field::Real);
    const double c = distance(p, q, DistanceKind::Chordal);
    const double g = distance(p, q, DistanceKind::Grassmann);
    const double pr = distance(p, q, DistanceKind::Procrustes);
    CHECK(c <= g + 1e-12);
    CHECK(c <= pr + 1e-12);
    CHECK(pr <= g + 1e-12);
  }
}

TEST_CASE("asymptotic isometry of the three distances") {
  // rotate span(e1, e2) of R^4 into e3 with angle t
  const auto rotated = [](double t) {
    RealMatrix q(4, 2);
    q.setZero();
    q(0, 0) = std::cos(t);
    q(2, 0) = std::sin(t);
    q(1, 1) = 1.0;
    return SubspaceProjector{Matrix::from_real(RealMatrix(q * q.transpose())),
                             2};
  };
  const SubspaceProjector p = rotated(0.0);
  const double t = 1e-5;
  const SubspaceProjector q = rotated(t);
  const double c = distance(p, q, DistanceKind::Chordal);
  const double g = distance(p, q, DistanceKind::Grassmann);
  const double pr = distance(p, q, DistanceKind::Procrustes);
  CHECK(std::abs(c / g - 1.0) < 1e-4);
  CHECK(std::abs(pr / g - 1.0) < 1e-4);
  CHECK(c == doctest::Approx(t).epsilon(1e-4));
}

TEST_CASE("unitary invariance of all three distances") {
  ts::Rng rng(29);
  for (Field field : {Field::Real, Field::Complex}) {
    const Index d = 6;
    const SubspaceProjector p = ts::random_projector(rng, d, 2, field);
    const SubspaceProjector q = ts::random_projector(rng, d, 2, field);
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
      CHECK(std::abs(distance(wp, wq, kind) - distance(p, q, kind)) <= 1e-10);
    }
  }
}

TEST_CASE("chordal distance is invariant under complementation") {
  ts::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 4 + static_cast<Index>(rng() % 4);
    const Index k = 1 + static_cast<Index>(rng() % (d - 1));
    const SubspaceProjector p = ts::random_projector(rng, d, k, Field::Real);
    const SubspaceProjector q = ts::random_projector(rng, d, k, Field::Real);
    CHECK(std::abs(distance(complement(p), complement(q),
                            DistanceKind::Chordal) -
                   distance(p, q, DistanceKind::Chordal)) <= 1e-10);
  }
}

TEST_CASE("mixed real/complex pairs promote") {
  ts::Rng rng(43);
  const SubspaceProjector p = ts::random_projector(rng, 4, 2, Field::Real);
  SubspaceProjector pc{Matrix::from_complex(p.p.as_complex()), p.rank};
  CHECK(distance(p, pc, DistanceKind::Chordal) < 1e-12);
  CHECK(principal_angles(p, pc).theta.norm() < 1e-6);
}

TEST_CASE("rank-0 subspaces are at distance zero") {
  const SubspaceProjector z{Matrix::from_real(RealMatrix::Zero(3, 3)), 0};
  CHECK(distance(z, z, DistanceKind::Grassmann) == 0.0);
  CHECK(principal_angles(z, z).theta.size() == 0);
}

TEST_CASE("chordal distance of the perturbed worked-example subspace") {
  // A + t Adot along the worst direction for (3,4), with the step chosen so
  // that |A - A'|_F = 1.414195706930316e-7. The reference distance value
  // carries ~2e-6 relative slack (it was produced through an arccos of a
  // cosine near 1), hence the loose tolerance.
  const Matrix a = ts::example_matrix();
  const SvdFactors f = svd_full(a);
  const PerturbationDirection dir = worst_direction(f, 3, 4);
  const double t = 1.414195706930316e-7 / dir.adot.frobenius_norm();
  const SvdFactors fp = svd_full(a.plus_scaled(t, dir.adot));

  const Selection sel(Side::Left, 6, {3});
  const double d = distance(subspace_of(f, sel), subspace_of(fp, sel),
                            DistanceKind::Chordal);
  CHECK(ts::rel_diff(d, 9.999978209007872e-6) < 1e-5);
}

TEST_CASE("grassmannian diameters") {
  CHECK(max_distance(DistanceKind::Chordal, 4) == doctest::Approx(2.0));
  CHECK(max_distance(DistanceKind::Grassmann, 1) ==
        doctest::Approx(std::numbers::pi / 2));
  CHECK(max_distance(DistanceKind::Procrustes, 2) == doctest::Approx(2.0));
}
