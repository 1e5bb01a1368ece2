#include "mapquad/study.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <system_error>

#include "mapquad/errors.hpp"
#include "mapquad/quadrature_engine.hpp"
#include "mapquad/quadrature_plan.hpp"

namespace mapquad {

namespace {

constexpr double kCertificationSlack = 1e-12;

void validate_range(const StudyConfig& config) {
  if (config.n_start < 1 || config.n_step < 1 ||
      config.n_stop < config.n_start) {
    throw domain_error("study: n range must satisfy 1 <= start <= stop, step >= 1");
  }
}

}  // namespace

MapKind default_map_for(Theorem theorem) {
  switch (theorem) {
    case Theorem::t1_rate_only: return MapKind::stenger;
    case Theorem::t2: return MapKind::okayama_hanada;
    case Theorem::t3:
    case Theorem::t4:
      return MapKind::proposed;
  }
  throw domain_error("unknown theorem");
}

bool StudyResult::certified() const {
  for (const ConvergenceRow& row : rows) {
    if (row.bound && !(row.abs_error <= *row.bound * (1.0 + kCertificationSlack))) {
      return false;
    }
  }
  return true;
}

StudyResult run_study(const StudyConfig& config) {
  validate_range(config);
  const ParameterRow& row = parameter_row(config.integrand, config.theorem);
  const double alpha = config.alpha.value_or(row.alpha);
  const double beta = config.beta.value_or(row.beta);
  const double d = config.d.value_or(row.d);
  std::optional<double> K = row.K;
  if (config.K) K = *config.K;

  StudyResult result;
  result.integrand = config.integrand;
  result.theorem = config.theorem;
  result.map = config.map.value_or(default_map_for(config.theorem));
  result.map_mismatch = result.map != default_map_for(config.theorem);
  result.reference = reference_value(config.integrand);

  const bool with_bound = config.theorem != Theorem::t1_rate_only &&
                          !result.map_mismatch;
  std::optional<BoundSpec> bound_spec;
  if (with_bound) {
    if (!K) throw domain_error("study: theorem 2-4 rows require K");
    bound_spec = make_bound_spec(config.theorem, alpha, beta, d, *K);
  } else if (config.theorem == Theorem::t1_rate_only) {
    // No constants exist, but d must still respect the theorem's strip.
    if (d >= theorem_d_limit(config.theorem)) {
      throw strip_violation(d, theorem_d_limit(config.theorem),
                            "study: d violates the theorem-1 strip limit pi/2");
    }
  }

  const MapDescriptor map = make_map(result.map);
  const IntegrandSpec& spec = integrand_spec(config.integrand);
  const Integrand f = [&spec](double x) { return spec.evaluate(x); };

  for (int n = config.n_start; n <= config.n_stop; n += config.n_step) {
    const QuadraturePlan plan = make_plan(alpha, beta, d, K, n, result.map);
    const QuadratureResult quad = trapezoid_sum(map, f, plan);
    ConvergenceRow out;
    out.n = n;
    out.h = plan.h;
    out.M = plan.M;
    out.N = plan.N;
    out.approximation = quad.value;
    out.abs_error = std::fabs(quad.value - result.reference);
    if (bound_spec) out.bound = bound_value(*bound_spec, n);
    result.rows.push_back(out);
  }

  if (!config.output_path.empty()) {
    write_csv_file(result, config.output_path);
  }
  return result;
}

std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result r = std::to_chars(buf, buf + sizeof(buf), value);
  if (r.ec != std::errc()) throw io_error("format_double: conversion failed");
  return std::string(buf, r.ptr);
}

void write_csv(const StudyResult& result, std::ostream& out) {
  out << "integrand,map,theorem,n,h,M,N,approximation,abs_error,bound\n";
  for (const ConvergenceRow& row : result.rows) {
    out << integrand_name(result.integrand) << ',' << map_name(result.map)
        << ',' << theorem_name(result.theorem) << ',' << row.n << ','
        << format_double(row.h) << ',' << row.M << ',' << row.N << ','
        << format_double(row.approximation) << ','
        << format_double(row.abs_error) << ','
        << (row.bound ? format_double(*row.bound) : std::string("n/a")) << '\n';
  }
}

void write_csv_file(const StudyResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  write_csv(result, out);
  out.flush();
  if (!out) throw io_error("failed writing output file: " + path);
}

}  // namespace mapquad
