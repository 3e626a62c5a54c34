#include "subcond/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subcond/version.hpp"

namespace subcond {

namespace {

using nlohmann::json;

double read_entry(std::istream& in, const char* what) {
  double value = 0.0;
  if (!(in >> value)) {
    throw ParseError(std::string("matrix file: expected ") + what);
  }
  if (!std::isfinite(value)) {
    throw ParseError("matrix file: NaN/Inf entries are rejected");
  }
  return value;
}

json number_or_inf(double value) {
  if (std::isinf(value)) return json("inf");
  if (std::isnan(value)) return json(nullptr);
  return json(value);
}

json pair_or_null(const std::optional<std::pair<int, int>>& p) {
  if (!p) return json(nullptr);
  return json::array({p->first, p->second});
}

std::string inf_or_number(double value) {
  if (std::isinf(value)) return "inf";
  return format_double(value);
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Matrix read_matrix(std::istream& in) {
  long long m = 0, n = 0;
  std::string field_token;
  if (!(in >> m >> n >> field_token)) {
    throw ParseError("matrix file: malformed header, expected 'm n real|complex'");
  }
  if (m < 1 || n < 1 || m > 100000 || n > 100000) {
    throw ParseError("matrix file: dimensions out of range");
  }

  Matrix result;
  if (field_token == "real") {
    RealMatrix a(m, n);
    for (long long r = 0; r < m; ++r) {
      for (long long c = 0; c < n; ++c) {
        a(r, c) = read_entry(in, "a real entry");
      }
    }
    result = Matrix::from_real(std::move(a));
  } else if (field_token == "complex") {
    ComplexMatrix a(m, n);
    for (long long r = 0; r < m; ++r) {
      for (long long c = 0; c < n; ++c) {
        const double re = read_entry(in, "a real part");
        const double im = read_entry(in, "an imaginary part");
        a(r, c) = Complex(re, im);
      }
    }
    result = Matrix::from_complex(std::move(a));
  } else {
    throw ParseError("matrix file: field must be 'real' or 'complex', got '" +
                     field_token + "'");
  }

  in >> std::ws;
  if (!in.eof()) {
    throw ParseError("matrix file: trailing data after the last entry");
  }
  return result;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& a) {
  out << a.rows() << ' ' << a.cols() << ' ' << field_name(a.field()) << '\n';
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      if (c > 0) out << ' ';
      if (a.is_real()) {
        out << format_double(a.real()(r, c));
      } else {
        const Complex z = a.complex()(r, c);
        out << format_double(z.real()) << ' ' << format_double(z.imag());
      }
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_matrix(out, a);
  if (!out) throw ParseError("write failed for '" + path + "'");
}

Report build_report(const Matrix& a, const PaddedSpectrum& spectrum,
                    const Selection& sel, const ConditionReport& cond) {
  Report report;
  report.version = kVersion;
  report.m = a.rows();
  report.n = a.cols();
  report.field = a.field();
  report.fro_norm = a.frobenius_norm();
  report.spectrum.assign(spectrum.sigma.begin(), spectrum.sigma.end());
  report.rank = spectrum.rank;
  report.side = sel.side();
  report.selection = sel.indices();
  report.kappa = cond.kappa;
  report.kappa_raw = cond.kappa_raw;
  report.mu = cond.mu;
  report.member = cond.member;
  report.witness = cond.witness;
  report.tie = cond.tie;
  return report;
}

std::string to_json_string(const Report& report, int indent) {
  json j;
  j["version"] = report.version;
  j["m"] = report.m;
  j["n"] = report.n;
  j["field"] = field_name(report.field);
  j["fro_norm"] = report.fro_norm;
  j["spectrum"] = report.spectrum;
  j["rank"] = report.rank;
  j["side"] = side_name(report.side);
  j["selection"] = report.selection;
  j["kappa"] = number_or_inf(report.kappa);
  j["kappa_raw"] = number_or_inf(report.kappa_raw);
  j["mu"] = number_or_inf(report.mu);
  j["member"] = report.member;
  j["witness"] = pair_or_null(report.witness);
  j["tie"] = pair_or_null(report.tie);
  if (report.mu_normalized) {
    j["mu_normalized"] = {
        {"chordal", number_or_inf((*report.mu_normalized)[0])},
        {"grassmann", number_or_inf((*report.mu_normalized)[1])},
        {"procrustes", number_or_inf((*report.mu_normalized)[2])},
    };
  } else {
    j["mu_normalized"] = nullptr;
  }
  if (report.probe) {
    const ProbeSummary& p = *report.probe;
    j["probe"] = {
        {"metric", distance_kind_name(p.kind)},
        {"t_values", p.t_values},
        {"quotients", p.quotients},
        {"extrapolated", number_or_inf(p.extrapolated)},
        {"worst_estimate", number_or_inf(p.worst_estimate)},
        {"random_max", number_or_inf(p.random_max)},
        {"num_random_dirs", p.num_random_dirs},
        {"seed", p.seed},
        {"formula_kappa", number_or_inf(p.formula_kappa)},
        {"rel_error", number_or_inf(p.rel_error)},
        {"pass", p.pass},
    };
  } else {
    j["probe"] = nullptr;
  }
  return j.dump(indent);
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "matrix: " << report.m << " x " << report.n << ' '
      << field_name(report.field)
      << "   |A|_F = " << format_double(report.fro_norm) << '\n';
  out << "spectrum:";
  for (double s : report.spectrum) out << ' ' << format_double(s);
  out << "   (rank " << report.rank << ")\n";
  out << "selection: " << side_name(report.side) << " {";
  for (std::size_t i = 0; i < report.selection.size(); ++i) {
    out << (i ? "," : "") << report.selection[i];
  }
  out << "}  k=" << report.selection.size() << '\n';
  out << "member: " << (report.member ? "yes" : "no");
  if (report.tie) {
    out << "   tie (" << report.tie->first << "," << report.tie->second << ")";
  }
  out << '\n';
  out << "kappa: " << inf_or_number(report.kappa) << '\n';
  if (!report.member && std::isfinite(report.kappa_raw)) {
    out << "kappa_raw: " << format_double(report.kappa_raw)
        << "   (raw formula value inside the tie band)\n";
  }
  out << "mu: " << inf_or_number(report.mu) << '\n';
  if (report.witness) {
    out << "witness: (" << report.witness->first << ","
        << report.witness->second << ")\n";
  }
  if (report.mu_normalized) {
    out << "mu_normalized: chordal " << inf_or_number((*report.mu_normalized)[0])
        << ", grassmann " << inf_or_number((*report.mu_normalized)[1])
        << ", procrustes " << inf_or_number((*report.mu_normalized)[2]) << '\n';
  }
  if (report.probe) {
    const ProbeSummary& p = *report.probe;
    out << "probe: metric " << distance_kind_name(p.kind) << ", "
        << p.num_random_dirs << " random dirs, seed " << p.seed << '\n';
    out << "  t:";
    for (double t : p.t_values) out << ' ' << format_double(t);
    out << '\n';
    out << "  quotient:";
    for (double q : p.quotients) out << ' ' << format_double(q);
    out << '\n';
    out << "  extrapolated: " << inf_or_number(p.extrapolated) << '\n';
    if (!std::isnan(p.worst_estimate)) {
      out << "  worst-direction estimate: " << inf_or_number(p.worst_estimate)
          << '\n';
    }
    if (!std::isnan(p.random_max)) {
      out << "  random-direction max: " << inf_or_number(p.random_max) << '\n';
    }
    out << "  formula kappa: " << inf_or_number(p.formula_kappa) << '\n';
    out << "  |empirical - kappa| / kappa = " << inf_or_number(p.rel_error)
        << "  -> " << (p.pass ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

const char* field_name(Field field) {
  return field == Field::Real ? "real" : "complex";
}

const char* side_name(Side side) {
  return side == Side::Left ? "left" : "right";
}

}  // namespace subcond
