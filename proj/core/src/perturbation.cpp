#include "subcond/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace subcond {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Box-Muller on explicit 53-bit uniforms; std::normal_distribution is
// implementation-defined and would break stream reproducibility.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = ((engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = (engine_() >> 11) * 0x1.0p-53;          // [0, 1)
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

template <class MatT>
MatT sigma_hat_matrix(const SvdFactors& f) {
  MatT s = MatT::Zero(f.rows(), f.cols());
  const Index d = std::min(f.rows(), f.cols());
  for (Index i = 0; i < d; ++i) s(i, i) = f.sigma(i);
  return s;
}

template <class MatT>
MatT worst_direction_impl(const SvdFactors& f, const MatT& u, const MatT& v,
                          int i, int j) {
  const Index m = f.rows();
  const Index n = f.cols();
  const double si = f.sigma(i - 1);
  const double sj = f.sigma(j - 1);

  const MatT sigma_hat = sigma_hat_matrix<MatT>(f);

  MatT ku = MatT::Zero(m, m);
  ku(j - 1, i - 1) = 1.0;
  ku(i - 1, j - 1) = -1.0;
  MatT adot = u * (ku * sigma_hat) * v.adjoint();

  if (i <= f.rank && j <= f.rank) {
    const double c = 2.0 * si * sj / (si * si + sj * sj);
    MatT kv = MatT::Zero(n, n);
    kv(i - 1, j - 1) = 1.0;
    kv(j - 1, i - 1) = -1.0;
    adot += c * u * (sigma_hat * kv) * v.adjoint();
  }
  return adot;
}

double extrapolate_to_zero(const std::vector<double>& t,
                           const std::vector<double>& q) {
  if (t.size() == 1) return q[0];
  // least-squares intercept of q = q0 + q1 t
  double st = 0.0, stt = 0.0, sq = 0.0, stq = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    st += t[k];
    stt += t[k] * t[k];
    sq += q[k];
    stq += t[k] * q[k];
  }
  const double count = static_cast<double>(t.size());
  return (stt * sq - st * stq) / (count * stt - st * st);
}

struct ProbeBase {
  SvdFactors f;
  PaddedSpectrum spectrum;
  SubspaceProjector p0;
  double boundary_gap = 0.0;
};

ProbeBase probe_base(const Matrix& a, const Selection& sel, double tie_tol,
                     double rank_rtol) {
  ProbeBase base;
  base.f = svd_full(a, rank_rtol);
  base.spectrum = padded_spectrum(base.f);
  const Membership membership = membership_check(base.spectrum, sel, tie_tol);
  if (!membership.member) {
    throw ProbeError(
        "probe: the matrix is a boundary point for this selection "
        "(a singular value is split by pi); the condition number is inf");
  }
  base.p0 = subspace_of(base.f, sel);
  base.boundary_gap = membership.min_gap;
  return base;
}

double quotient_from_base(const ProbeBase& base, const Matrix& a,
                          const Selection& sel,
                          const PerturbationDirection& dir, double t,
                          DistanceKind kind, double rank_rtol) {
  if (!(t > 0.0)) throw std::invalid_argument("probe: t must be positive");
  // empty and full selections map every matrix to the same subspace
  if (sel.empty() || sel.full()) return 0.0;
  const double dir_norm = dir.adot.frobenius_norm();
  // Weyl: a perturbation E moves every singular value by at most ||E||_2,
  // so ordering across the pi boundary is preserved while
  // 2 t ||Adot||_F stays below the minimal gap.
  if (2.0 * t * dir_norm >= base.boundary_gap) {
    throw ProbeError(
        "probe: step crosses the singular value gap; reduce t "
        "(2 t ||Adot||_F must stay below the minimal gap across pi)");
  }
  const Matrix perturbed = a.plus_scaled(t, dir.adot);
  const SvdFactors ft = svd_full(perturbed, rank_rtol);
  const SubspaceProjector pt = subspace_of(ft, sel);
  return distance(base.p0, pt, kind) / (t * dir_norm);
}

}  // namespace

PerturbationDirection worst_direction(const SvdFactors& f, int i, int j) {
  const Index m = f.rows();
  if (i < 1 || i > m || j < 1 || j > m) {
    throw std::invalid_argument("worst_direction: index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("worst_direction: i and j must differ");
  }
  if (f.sigma(i - 1) == f.sigma(j - 1)) {
    throw std::invalid_argument(
        "worst_direction: sigma_i = sigma_j; the direction degenerates at a "
        "tie (the condition number is inf there)");
  }

  PerturbationDirection dir;
  dir.kind = PerturbationDirection::Kind::Worst;
  dir.i = i;
  dir.j = j;
  if (f.u.is_real()) {
    dir.adot = Matrix::from_real(
        worst_direction_impl<RealMatrix>(f, f.u.real(), f.v.real(), i, j));
  } else {
    dir.adot = Matrix::from_complex(worst_direction_impl<ComplexMatrix>(
        f, f.u.complex(), f.v.complex(), i, j));
  }
  return dir;
}

PerturbationDirection random_direction(Index rows, Index cols, Field field,
                                       std::uint64_t seed,
                                       std::uint64_t sample) {
  GaussianStream gauss(splitmix64(seed ^ splitmix64(sample)));
  PerturbationDirection dir;
  dir.kind = PerturbationDirection::Kind::Random;
  dir.sample = sample;
  if (field == Field::Real) {
    RealMatrix g(rows, cols);
    for (Index c = 0; c < cols; ++c) {
      for (Index r = 0; r < rows; ++r) g(r, c) = gauss();
    }
    dir.adot = Matrix::from_real(RealMatrix(g / g.norm()));
  } else {
    ComplexMatrix g(rows, cols);
    for (Index c = 0; c < cols; ++c) {
      for (Index r = 0; r < rows; ++r) g(r, c) = Complex(gauss(), gauss());
    }
    dir.adot = Matrix::from_complex(ComplexMatrix(g / g.norm()));
  }
  return dir;
}

double directional_quotient(const Matrix& a, const Selection& sel,
                            const PerturbationDirection& dir, double t,
                            DistanceKind kind, double tie_tol,
                            double rank_rtol) {
  if (sel.side() != Side::Left) {
    throw std::invalid_argument(
        "directional_quotient: probe left selections; right subspaces go "
        "through the adjoint matrix");
  }
  if (dir.adot.rows() != a.rows() || dir.adot.cols() != a.cols() ||
      dir.adot.field() != a.field()) {
    throw std::invalid_argument(
        "directional_quotient: direction shape/field mismatch");
  }
  const ProbeBase base = probe_base(a, sel, tie_tol, rank_rtol);
  return quotient_from_base(base, a, sel, dir, t, kind, rank_rtol);
}

ProbeResult empirical_kappa(const Matrix& a, const Selection& sel,
                            const ProbeConfig& cfg, double tie_tol,
                            double rank_rtol) {
  if (cfg.num_random_dirs < 0) {
    throw std::invalid_argument("empirical_kappa: negative direction count");
  }
  if (cfg.t_schedule.empty()) {
    throw std::invalid_argument("empirical_kappa: empty t schedule");
  }
  for (std::size_t k = 0; k < cfg.t_schedule.size(); ++k) {
    const double t = cfg.t_schedule[k];
    if (!(t > 0.0 && t <= 1.0) ||
        (k > 0 && t >= cfg.t_schedule[k - 1])) {
      throw std::invalid_argument(
          "empirical_kappa: t schedule must be strictly decreasing in (0, 1]");
    }
  }

  const ProbeBase base = probe_base(a, sel, tie_tol, rank_rtol);
  const double fro = a.frobenius_norm();

  ProbeResult result;
  result.kind = cfg.kind;
  result.worst_estimate = kNan;
  result.random_max = kNan;

  std::vector<PerturbationDirection> dirs;
  if (cfg.include_worst) {
    const ConditionReport report = kappa_formula(base.spectrum, sel, tie_tol);
    if (report.witness) {
      dirs.push_back(
          worst_direction(base.f, report.witness->first, report.witness->second));
      result.witness = report.witness;
    }
  }
  for (int s = 0; s < cfg.num_random_dirs; ++s) {
    dirs.push_back(random_direction(a.rows(), a.cols(), a.field(), cfg.seed,
                                    static_cast<std::uint64_t>(s)));
  }

  result.extrapolated = 0.0;
  bool any = false;
  for (const PerturbationDirection& dir : dirs) {
    const double scale = fro / dir.adot.frobenius_norm();
    std::vector<double> ts, qs;
    ts.reserve(cfg.t_schedule.size());
    qs.reserve(cfg.t_schedule.size());
    for (double t_base : cfg.t_schedule) {
      const double t = t_base * scale;
      ts.push_back(t);
      qs.push_back(quotient_from_base(base, a, sel, dir, t, cfg.kind,
                                      rank_rtol));
    }
    const double estimate = extrapolate_to_zero(ts, qs);

    if (dir.kind == PerturbationDirection::Kind::Worst) {
      result.worst_estimate = estimate;
    } else if (std::isnan(result.random_max) || estimate > result.random_max) {
      result.random_max = estimate;
    }
    if (!any || estimate > result.extrapolated) {
      any = true;
      result.extrapolated = estimate;
      result.t_values = std::move(ts);
      result.quotients = std::move(qs);
    }
  }
  return result;
}

Matrix restrict_scalars(const Matrix& a) {
  if (a.is_real()) {
    throw std::invalid_argument(
        "restrict_scalars: real matrices embed as themselves; complex input "
        "expected");
  }
  const Index m = a.rows();
  const Index n = a.cols();
  const ComplexMatrix& z = a.complex();
  RealMatrix out(2 * m, 2 * n);
  out.topLeftCorner(m, n) = z.real();
  out.topRightCorner(m, n) = z.imag();
  out.bottomLeftCorner(m, n) = -z.imag();
  out.bottomRightCorner(m, n) = z.real();
  return Matrix::from_real(std::move(out));
}

}  // namespace subcond
