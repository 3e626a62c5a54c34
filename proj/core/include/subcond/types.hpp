#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace subcond {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Scalar field of a matrix.
enum class Field { Real, Complex };

/// Which family of singular subspaces a selection refers to.
enum class Side { Left, Right };

namespace defaults {

/// Rank threshold, relative to sigma_1: singular values at or below
/// rank_rtol * sigma_1 are treated as zero.
inline constexpr double kRankRtol = 1e-12;

/// Relative band for deciding sigma_i == sigma_j across a selection split.
/// The reported kappa is still computed from the raw singular values;
/// this band only drives the membership verdict.
inline constexpr double kTieTol = 1e-10;

inline constexpr std::uint64_t kSeed = 42;

}  // namespace defaults

}  // namespace subcond
