// subspace-cond: condition numbers of singular subspaces, Grassmannian
// distances, worst perturbation directions, and finite-difference
// verification of the closed formula.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcond/condition.hpp"
#include "subcond/grassmann.hpp"
#include "subcond/io.hpp"
#include "subcond/perturbation.hpp"
#include "subcond/version.hpp"

namespace {

using namespace subcond;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitVerifyFail = 3;

constexpr double kVerifyTol = 1e-3;

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw CLI::ValidationError("--side", "expected 'left' or 'right'");
}

DistanceKind parse_metric(const std::string& s) {
  if (s == "chordal") return DistanceKind::Chordal;
  if (s == "grassmann") return DistanceKind::Grassmann;
  if (s == "procrustes") return DistanceKind::Procrustes;
  throw CLI::ValidationError(
      "--metric", "expected 'chordal', 'grassmann', or 'procrustes'");
}

std::vector<double> parse_schedule(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(std::stod(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("SUBSPACE_COND_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

std::array<double, 3> normalized_mu(double mu, int k) {
  const auto scale = [&](DistanceKind kind) {
    if (k == 0) return mu;  // 0 / diameter-of-a-point stays 0
    return std::isinf(mu) ? mu : mu / max_distance(kind, k);
  };
  return {scale(DistanceKind::Chordal), scale(DistanceKind::Grassmann),
          scale(DistanceKind::Procrustes)};
}

struct CondArgs {
  std::string matrix_path;
  std::string pi;
  std::string side = "left";
  double tie_tol = defaults::kTieTol;
  double rank_rtol = defaults::kRankRtol;
  bool json = false;
  bool with_normalized_mu = false;
};

// Spectrum, selection, and condition report on the probing side: the matrix
// itself for left selections, its adjoint for right ones.
struct CondResult {
  SvdFactors factors;
  PaddedSpectrum spectrum;
  Selection sel_left;
  ConditionReport cond;
};

CondResult compute_cond(const Matrix& a, Side side, const std::string& pi,
                        double tie_tol, double rank_rtol) {
  const Matrix probed = side == Side::Left ? a : a.adjoint();
  const Index ambient = probed.rows();
  Selection sel = Selection::parse(Side::Left, ambient, pi);
  CondResult r{svd_full(probed, rank_rtol), PaddedSpectrum{}, sel,
               ConditionReport{}};
  r.spectrum = padded_spectrum(r.factors);
  r.cond = kappa_formula(r.spectrum, sel, tie_tol);
  r.cond.side = side;
  return r;
}

int run_cond(const CondArgs& args) {
  const Matrix a = read_matrix_file(args.matrix_path);
  const Side side = parse_side(args.side);
  const CondResult r =
      compute_cond(a, side, args.pi, args.tie_tol, args.rank_rtol);

  Report report = build_report(
      a, r.spectrum, Selection::parse(side, r.sel_left.ambient(), args.pi),
      r.cond);
  if (args.with_normalized_mu) {
    report.mu_normalized = normalized_mu(report.mu, r.cond.k);
  }
  std::cout << (args.json ? to_json_string(report) + "\n" : to_text(report));
  return std::isinf(r.cond.kappa) ? kExitBoundary : kExitOk;
}

struct VerifyArgs {
  std::string matrix_path;
  std::string pi;
  std::string side = "left";
  std::string metric = "chordal";
  std::string schedule = "1e-4,1e-5,1e-6";
  int dirs = 64;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tie_tol = defaults::kTieTol;
  double rank_rtol = defaults::kRankRtol;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  const Matrix a = read_matrix_file(args.matrix_path);
  const Side side = parse_side(args.side);
  const Matrix probed = side == Side::Left ? a : a.adjoint();

  ProbeConfig cfg;
  cfg.num_random_dirs = args.dirs;
  cfg.t_schedule = parse_schedule(args.schedule);
  cfg.kind = parse_metric(args.metric);
  cfg.seed = args.seed_given ? args.seed : seed_from_env_or(defaults::kSeed);
  cfg.include_worst = true;

  const CondResult r =
      compute_cond(a, side, args.pi, args.tie_tol, args.rank_rtol);

  ProbeResult probe;
  try {
    probe = empirical_kappa(probed, r.sel_left, cfg, args.tie_tol,
                            args.rank_rtol);
  } catch (const ProbeError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitBoundary;
  }

  const double kappa = r.cond.kappa;
  double rel = 0.0;
  if (kappa > 0.0 && std::isfinite(kappa)) {
    rel = std::abs(probe.extrapolated - kappa) / kappa;
  } else {
    rel = probe.extrapolated == 0.0
              ? 0.0
              : std::numeric_limits<double>::infinity();
  }

  ProbeSummary summary;
  summary.kind = cfg.kind;
  summary.t_values = probe.t_values;
  summary.quotients = probe.quotients;
  summary.extrapolated = probe.extrapolated;
  summary.worst_estimate = probe.worst_estimate;
  summary.random_max = probe.random_max;
  summary.num_random_dirs = cfg.num_random_dirs;
  summary.seed = cfg.seed;
  summary.formula_kappa = kappa;
  summary.rel_error = rel;
  summary.pass = rel <= kVerifyTol;

  Report report = build_report(
      a, r.spectrum, Selection::parse(side, r.sel_left.ambient(), args.pi),
      r.cond);
  report.probe = summary;
  std::cout << (args.json ? to_json_string(report) + "\n" : to_text(report));
  return summary.pass ? kExitOk : kExitVerifyFail;
}

struct WorstArgs {
  std::string matrix_path;
  std::string pi;
  std::string out_path;
  std::string side = "left";
  double tie_tol = defaults::kTieTol;
  double rank_rtol = defaults::kRankRtol;
  bool normalize = false;
};

int run_worst(const WorstArgs& args) {
  const Matrix a = read_matrix_file(args.matrix_path);
  const Side side = parse_side(args.side);
  const CondResult r =
      compute_cond(a, side, args.pi, args.tie_tol, args.rank_rtol);

  if (!r.cond.witness) {
    std::cerr << "worst: no worst direction exists here (kappa = "
              << (std::isinf(r.cond.kappa) ? "inf" : "0") << ")\n";
    return kExitBoundary;
  }

  const auto [wi, wj] = *r.cond.witness;
  PerturbationDirection dir = worst_direction(r.factors, wi, wj);
  const double norm = dir.adot.frobenius_norm();

  Matrix out = args.normalize ? dir.adot.scaled(1.0 / norm) : dir.adot;
  if (side == Side::Right) out = out.adjoint();
  write_matrix_file(args.out_path, out);

  std::cout << "witness: (" << wi << "," << wj << ")\n";
  std::cout << "norm: " << format_double(norm) << "\n";
  std::cout << "kappa: " << format_double(r.cond.kappa) << "\n";
  std::cout << "wrote " << args.out_path
            << (args.normalize ? " (unit Frobenius norm)" : "") << "\n";
  return kExitOk;
}

struct DistanceArgs {
  std::string p_path;
  std::string q_path;
  std::string metric = "all";
  bool json = false;
};

SubspaceProjector load_subspace(const std::string& path) {
  const Matrix m = read_matrix_file(path);
  if (auto proj = as_projector(m)) return *proj;  // square + idempotent
  return projector_from_basis(m);
}

int run_distance(const DistanceArgs& args) {
  const SubspaceProjector p = load_subspace(args.p_path);
  const SubspaceProjector q = load_subspace(args.q_path);

  const PrincipalAngles angles = principal_angles(p, q);

  std::vector<DistanceKind> kinds;
  if (args.metric == "all") {
    kinds = {DistanceKind::Chordal, DistanceKind::Grassmann,
             DistanceKind::Procrustes};
  } else {
    kinds = {parse_metric(args.metric)};
  }

  if (args.json) {
    std::string out = "{\n  \"version\": \"" + std::string(kVersion) +
                      "\",\n  \"rank\": " + std::to_string(p.rank) +
                      ",\n  \"theta\": [";
    for (Index i = 0; i < angles.theta.size(); ++i) {
      out += (i ? ", " : "") + format_double(angles.theta(i));
    }
    out += "]";
    for (DistanceKind kind : kinds) {
      out += ",\n  \"" + std::string(distance_kind_name(kind)) +
             "\": " + format_double(distance(p, q, kind));
    }
    out += "\n}\n";
    std::cout << out;
  } else {
    std::cout << "rank: " << p.rank << "  ambient: " << p.ambient() << "\n";
    std::cout << "theta:";
    for (Index i = 0; i < angles.theta.size(); ++i) {
      std::cout << ' ' << format_double(angles.theta(i));
    }
    std::cout << "\n";
    for (DistanceKind kind : kinds) {
      std::cout << distance_kind_name(kind) << ": "
                << format_double(distance(p, q, kind)) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"condition numbers of singular subspaces"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CondArgs cond_args;
  CLI::App* cond = app.add_subcommand(
      "cond", "condition number of a selected singular subspace");
  cond->add_option("matrix", cond_args.matrix_path, "matrix file")->required();
  cond->add_option("--pi", cond_args.pi,
                   "1-based singular value indices, e.g. 3,4 (empty selection "
                   "allowed)")
      ->required();
  cond->add_option("--side", cond_args.side, "left|right (default left)");
  cond->add_option("--tie-tol", cond_args.tie_tol,
                   "relative tie band for the membership verdict");
  cond->add_option("--rank-rtol", cond_args.rank_rtol,
                   "relative rank threshold");
  cond->add_flag("--json", cond_args.json, "emit a JSON report");
  cond->add_flag("--normalized-mu", cond_args.with_normalized_mu,
                 "also report mu scaled by the Grassmannian diameter");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "check the closed formula against finite-difference probing");
  verify->add_option("matrix", verify_args.matrix_path, "matrix file")
      ->required();
  verify->add_option("--pi", verify_args.pi, "selected indices")->required();
  verify->add_option("--side", verify_args.side, "left|right");
  verify->add_option("--dirs", verify_args.dirs,
                     "number of random directions (worst direction always "
                     "included)");
  auto* seed_opt =
      verify->add_option("--seed", verify_args.seed,
                         "RNG seed (falls back to SUBSPACE_COND_SEED)");
  verify->add_option("--metric", verify_args.metric,
                     "chordal|grassmann|procrustes");
  verify->add_option("--t-schedule", verify_args.schedule,
                     "comma list of decreasing step sizes in (0,1]");
  verify->add_option("--tie-tol", verify_args.tie_tol, "relative tie band");
  verify->add_option("--rank-rtol", verify_args.rank_rtol,
                     "relative rank threshold");
  verify->add_flag("--json", verify_args.json, "emit a JSON report");

  WorstArgs worst_args;
  CLI::App* worst = app.add_subcommand(
      "worst", "write the worst perturbation direction to a file");
  worst->add_option("matrix", worst_args.matrix_path, "matrix file")
      ->required();
  worst->add_option("--pi", worst_args.pi, "selected indices")->required();
  worst->add_option("--out", worst_args.out_path, "output matrix file")
      ->required();
  worst->add_option("--side", worst_args.side, "left|right");
  worst->add_option("--tie-tol", worst_args.tie_tol, "relative tie band");
  worst->add_option("--rank-rtol", worst_args.rank_rtol,
                    "relative rank threshold");
  worst->add_flag("--normalize", worst_args.normalize,
                  "scale the direction to unit Frobenius norm");

  DistanceArgs distance_args;
  CLI::App* dist = app.add_subcommand(
      "distance",
      "principal angles and distances between two subspaces (projector or "
      "basis files, auto-detected)");
  dist->add_option("P", distance_args.p_path, "first subspace file")
      ->required();
  dist->add_option("Q", distance_args.q_path, "second subspace file")
      ->required();
  dist->add_option("--metric", distance_args.metric,
                   "chordal|grassmann|procrustes|all");
  dist->add_flag("--json", distance_args.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cond->parsed()) return run_cond(cond_args);
    if (verify->parsed()) {
      verify_args.seed_given = seed_opt->count() > 0;
      return run_verify(verify_args);
    }
    if (worst->parsed()) return run_worst(worst_args);
    if (dist->parsed()) return run_distance(distance_args);
  } catch (const ProbeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBoundary;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
