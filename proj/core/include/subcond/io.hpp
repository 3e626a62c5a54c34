#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subcond/condition.hpp"
#include "subcond/grassmann.hpp"
#include "subcond/perturbation.hpp"

namespace subcond {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix file format:
///
///   m n real|complex
///   <m rows of whitespace-separated entries>
///
/// Real entries are one number each; complex entries are "re imag" pairs,
/// so a complex row carries 2n numbers. Whitespace (including newlines)
/// between tokens is not significant. NaN/Inf entries are rejected.
/// Numbers are written with 17 significant digits, so
/// parse(serialize(M)) == M bit for bit for all finite doubles.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& a);
void write_matrix_file(const std::string& path, const Matrix& a);

/// 17-significant-digit decimal form of a double (round-trips exactly).
std::string format_double(double value);

/// Probe block of a verification report.
struct ProbeSummary {
  DistanceKind kind = DistanceKind::Chordal;
  std::vector<double> t_values;
  std::vector<double> quotients;
  double extrapolated = 0.0;
  double worst_estimate = 0.0;
  double random_max = 0.0;
  int num_random_dirs = 0;
  std::uint64_t seed = 0;
  double formula_kappa = 0.0;
  double rel_error = 0.0;
  bool pass = false;
};

/// Structured result document for the CLI. Infinite kappa/mu serialize as
/// the string "inf"; all finite numbers round-trip losslessly.
struct Report {
  std::string version;
  Index m = 0;
  Index n = 0;
  Field field = Field::Real;
  double fro_norm = 0.0;
  std::vector<double> spectrum;
  Index rank = 0;
  Side side = Side::Left;
  std::vector<int> selection;
  double kappa = 0.0;
  double kappa_raw = 0.0;
  double mu = 0.0;
  bool member = true;
  std::optional<std::pair<int, int>> witness;
  std::optional<std::pair<int, int>> tie;
  /// Optional mu scaled by the Grassmannian diameter, per distance kind
  /// (chordal, grassmann, procrustes).
  std::optional<std::array<double, 3>> mu_normalized;
  std::optional<ProbeSummary> probe;
};

/// Assembles the invariant part of a report from the computation inputs.
Report build_report(const Matrix& a, const PaddedSpectrum& spectrum,
                    const Selection& sel, const ConditionReport& cond);

std::string to_json_string(const Report& report, int indent = 2);
std::string to_text(const Report& report);

const char* field_name(Field field);
const char* side_name(Side side);

}  // namespace subcond
