#pragma once

#include "subcond/subspace.hpp"

namespace subcond {

/// Principal angles between two equal-rank subspaces, each in [0, pi/2],
/// sorted nondecreasing.
struct PrincipalAngles {
  RealVector theta;
};

enum class DistanceKind { Chordal, Grassmann, Procrustes };

/// theta_i = arccos(clamp(sigma_i(Bp^H Bq), 0, 1)), where Bp and Bq are
/// orthonormal bases extracted from the projectors (their k dominant
/// eigenvectors). Requires equal ambient dimension and equal rank.
///
/// Angles near zero inherit an error floor of about 1e-8 from the arccos
/// of cosines near 1; all distances below either avoid this path or are
/// insensitive to it.
PrincipalAngles principal_angles(const SubspaceProjector& p,
                                 const SubspaceProjector& q);

/// Chordal ||sin theta||, Grassmann ||theta||, or Procrustes
/// ||2 sin(theta/2)|| distance. The chordal distance is evaluated through
/// the identity ||sin theta|| = ||P - Q||_F / sqrt(2), which does not lose
/// precision for small angles.
double distance(const SubspaceProjector& p, const SubspaceProjector& q,
                DistanceKind kind);

/// Diameter of Gr(k, .) in the given distance: sqrt(k), (pi/2) sqrt(k),
/// and sqrt(2 k) respectively.
double max_distance(DistanceKind kind, int k);

const char* distance_kind_name(DistanceKind kind);

}  // namespace subcond
