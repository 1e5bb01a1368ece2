#include "mapquad/error_bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kLog2 = std::numbers::ln2;

void require_rates(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw domain_error("error bound: alpha and beta must be positive");
  }
}

void require_d(double d, double limit, const char* limit_text) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw domain_error("error bound: d must be positive");
  }
  if (d >= limit) {
    throw strip_violation(d, limit,
                          std::string("strip half-width d = ") +
                              std::to_string(d) + " violates d < " +
                              limit_text);
  }
}

}  // namespace

double gamma_d_constant(double d) {
  require_d(d, kPi / 2.0, "pi/2");
  return 1.0 / std::cos(d);
}

double c_d_constant(double d) {
  require_d(d, kPi, "pi");
  return 1.0 / std::cos(d / 2.0);
}

double sigma_constant() { return 1.0 / std::asinh(1.0); }

double lambda_constant() { return 1.0 / kLog2; }

std::pair<double, double> constants_t2(double alpha, double beta, double d) {
  require_rates(alpha, beta);
  const double gd = gamma_d_constant(d);
  const double sigma = sigma_constant();
  const double sin1 = std::sin(1.0);
  const double s = 1.0 + 1.0 / (sin1 * sin1);
  const double c1 =
      gd / (alpha * std::atan(gd)) * std::pow(0.5 * gd * s, alpha) +
      (1.0 + sigma * sigma) * std::sqrt(gd) / beta *
          std::pow(std::sqrt(2.0) * std::exp(sigma) / std::cos(d / 2.0), beta);
  const double c2 = std::pow(0.5 * s, alpha) / alpha +
                    (1.0 + sigma * sigma) / beta *
                        std::pow(0.5 * std::exp(sigma), beta);
  return {c1, c2};
}

std::pair<double, double> constants_t3(double alpha, double beta, double d) {
  require_rates(alpha, beta);
  const double cd = c_d_constant(d);
  const double lambda = lambda_constant();
  const double log_2cd = std::log(2.0 + cd);
  const double c3 =
      (1.0 / (alpha + 1.0) + 1.0 / alpha) *
          std::pow(kE * cd / ((1.0 - kLog2) * (kE - 1.0)), alpha + 1.0) *
          ((1.0 + log_2cd * log_2cd) / (log_2cd * log_2cd)) *
          (1.0 + cd) * (1.0 + cd) +
      (1.0 + lambda * lambda) * cd / beta * std::pow(std::exp(lambda) * cd, beta);
  const double c4 =
      std::exp(1.0 / (kPi * kPi * kPi)) /
          (alpha * std::pow(1.0 - kLog2, alpha + 1.0)) +
      (1.0 + lambda * lambda) / beta * std::pow(std::exp(lambda), beta);
  return {c3, c4};
}

std::pair<double, double> constants_t4(double alpha, double beta, double d) {
  require_rates(alpha, beta);
  require_d(d, (1.0 + kPi) / 2.0, "(1+pi)/2");
  const double cd = c_d_constant(d);
  const double lambda = lambda_constant();
  const double c5 =
      std::pow(kE * cd / ((1.0 - kLog2) * (kE - 1.0)), alpha) / alpha *
          ((1.0 + cd) / std::log(2.0 + cd)) +
      (1.0 + lambda * lambda) * cd / beta * std::pow(std::exp(lambda) * cd, beta);
  const double c6 =
      1.0 / (alpha * std::pow(1.0 - kLog2, alpha)) +
      (1.0 + lambda * lambda) / beta * std::pow(std::exp(lambda), beta);
  return {c5, c6};
}

BoundSpec make_bound_spec(Theorem theorem, double alpha, double beta, double d,
                          double K) {
  BoundSpec spec;
  spec.theorem = theorem;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.d = d;
  spec.K = K;
  spec.mu = std::fmin(alpha, beta);
  switch (theorem) {
    case Theorem::t1_rate_only:
      require_rates(alpha, beta);
      require_d(d, kPi / 2.0, "pi/2");
      break;
    case Theorem::t2:
      std::tie(spec.c_disc, spec.c_trunc) = constants_t2(alpha, beta, d);
      break;
    case Theorem::t3:
      std::tie(spec.c_disc, spec.c_trunc) = constants_t3(alpha, beta, d);
      break;
    case Theorem::t4:
      std::tie(spec.c_disc, spec.c_trunc) = constants_t4(alpha, beta, d);
      break;
  }
  if (theorem != Theorem::t1_rate_only && !(K > 0.0)) {
    throw domain_error("error bound: K must be positive");
  }
  return spec;
}

double bound_value(const BoundSpec& spec, int n) {
  if (spec.theorem == Theorem::t1_rate_only) {
    throw unsupported_range(
        "bound_value: no computable constant under theorem 1; use "
        "rate_envelope");
  }
  if (n < 1) throw domain_error("bound_value: n must be >= 1");
  const double root = std::sqrt(2.0 * kPi * spec.d * spec.mu);
  const double factor =
      2.0 * spec.c_disc / (1.0 - std::exp(-root)) + spec.c_trunc;
  return spec.K * factor * std::exp(-root * std::sqrt(static_cast<double>(n)));
}

double rate_envelope(double d, double mu, int n) {
  if (!(d > 0.0) || !(mu > 0.0) || !std::isfinite(d) || !std::isfinite(mu)) {
    throw domain_error("rate_envelope: d and mu must be positive");
  }
  if (n < 1) throw domain_error("rate_envelope: n must be >= 1");
  return std::exp(-std::sqrt(2.0 * kPi * d * mu * n));
}

}  // namespace mapquad
