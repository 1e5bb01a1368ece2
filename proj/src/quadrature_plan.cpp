#include "mapquad/quadrature_plan.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw domain_error(std::string("quadrature plan: ") + name +
                       " must be positive and finite");
  }
}

void require_n(int n) {
  if (n < 1) throw domain_error("quadrature plan: n must be >= 1");
}

int checked_ceil(double x) {
  const double c = std::ceil(x);
  if (!(c >= 1.0) || c > 2147483000.0) {
    throw domain_error("quadrature plan: truncation index out of range");
  }
  return static_cast<int>(c);
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

}  // namespace

TruncationSplit select_mn(double alpha, double beta, int n) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_n(n);
  if (alpha == beta) return TruncationSplit{n, n, alpha};
  if (alpha < beta) {
    return TruncationSplit{n, checked_ceil(alpha * n / beta), alpha};
  }
  return TruncationSplit{checked_ceil(beta * n / alpha), n, beta};
}

TruncationSplit select_mn(Rational alpha, Rational beta, int n) {
  if (alpha.num <= 0 || alpha.den <= 0 || beta.num <= 0 || beta.den <= 0) {
    throw domain_error("quadrature plan: rational alpha, beta must be positive");
  }
  require_n(n);
  const double alpha_d = static_cast<double>(alpha.num) / alpha.den;
  const double beta_d = static_cast<double>(beta.num) / beta.den;
  // alpha n / beta = alpha.num * beta.den * n / (alpha.den * beta.num)
  if (alpha.num * beta.den <= beta.num * alpha.den) {
    const std::int64_t N = ceil_div(alpha.num * beta.den * n, alpha.den * beta.num);
    return TruncationSplit{n, static_cast<int>(N), alpha_d};
  }
  const std::int64_t M = ceil_div(beta.num * alpha.den * n, beta.den * alpha.num);
  return TruncationSplit{static_cast<int>(M), n, beta_d};
}

double mesh_size(double d, double mu, int n) {
  require_positive(d, "d");
  require_positive(mu, "mu");
  require_n(n);
  return std::sqrt(2.0 * std::numbers::pi * d / (mu * n));
}

QuadraturePlan make_plan(double alpha, double beta, double d,
                         std::optional<double> K, int n, MapKind map_kind) {
  const double limit = map_strip_half_width(map_kind);
  require_positive(d, "d");
  if (d >= limit) {
    throw strip_violation(
        d, limit,
        std::string("strip half-width d = ") + std::to_string(d) +
            " violates d < " + (limit > 2.0 ? "pi" : "pi/2") + " for map " +
            map_name(map_kind));
  }
  if (K && !(*K > 0.0)) {
    throw domain_error("quadrature plan: K must be positive when given");
  }
  const TruncationSplit split = select_mn(alpha, beta, n);
  QuadraturePlan plan;
  plan.alpha = alpha;
  plan.beta = beta;
  plan.d = d;
  plan.K = K;
  plan.n = n;
  plan.mu = split.mu;
  plan.M = split.M;
  plan.N = split.N;
  plan.h = mesh_size(d, split.mu, n);
  return plan;
}

}  // namespace mapquad
