#include "mapquad/integrand_catalog.hpp"

#include <cmath>
#include <numbers>

#include "mapquad/errors.hpp"
#include "mapquad/special_functions.hpp"

namespace mapquad {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x) {
  if (!std::isfinite(x)) throw domain_error("integrand: non-finite argument");
}

// s = sqrt(1+(x/2)^2) via hypot (no overflow), and the two cancellation-free
// combinations s + x/2 and s - x/2 = 1/(s + x/2).
struct HalfArgParts {
  double s;
  double plus;   // x/2 + s  (exponent magnitude; > 0)
  double minus;  // s - x/2  (> 0)
};

HalfArgParts half_arg_parts(double x) {
  const double half = 0.5 * x;
  const double s = std::hypot(1.0, half);
  if (x >= 0.0) {
    const double plus = half + s;
    return {s, plus, 1.0 / plus};
  }
  const double minus = s - half;
  return {s, 1.0 / minus, minus};
}

double i1_value(double x) {
  const HalfArgParts p = half_arg_parts(x);
  const double q = 1.0 / (1.0 + p.minus);
  return q * q * std::exp(-p.plus);
}

double i2_value(double x) {
  const HalfArgParts p = half_arg_parts(x);
  return std::exp(-p.plus) / (4.0 + x * x);
}

double i3_value(double x) {
  const double hyp = std::hypot(2.0, x);
  // (1/2)(1 + x/hyp); for x < 0 rewritten as 2/(hyp (hyp - x)) to avoid
  // cancellation in 1 - |x|/hyp.
  const double algebraic =
      x >= 0.0 ? 0.5 * (1.0 + x / hyp) : 2.0 / (hyp * (hyp - x));
  const double e = kPi / 2.0 * x;
  // 1/(1+e^{(pi/2)x}) in a form that never overflows for large x.
  const double logistic =
      x > 36.0 ? std::exp(-e) / (1.0 + std::exp(-e)) : 1.0 / (1.0 + std::exp(e));
  return algebraic * logistic;
}

constexpr std::optional<double> kNoK = std::nullopt;

const IntegrandSpec kSpecs[3] = {
    {IntegrandId::i1,
     ReferenceRecipe::from_e1,
     {ParameterRow{Theorem::t1_rate_only, 1.0, 0.5, 1.5, kNoK},
      ParameterRow{Theorem::t2, 1.0, 1.0, 1.5, 1.0},
      ParameterRow{Theorem::t3, 1.0, 1.0, 3.0, 78.0},
      ParameterRow{Theorem::t4, 1.0, 1.0, 2.0, 6.0 / 5.0}}},
    {IntegrandId::i2,
     ReferenceRecipe::from_ci_si,
     {ParameterRow{Theorem::t1_rate_only, 1.0, 0.5, 1.5, kNoK},
      ParameterRow{Theorem::t2, 1.0, 1.0, 1.5, 16.0 / 9.0},
      ParameterRow{Theorem::t3, 1.0, 1.0, 2.0, 215.0},
      ParameterRow{Theorem::t4, 1.0, 1.0, 2.0, 39.0}}},
    {IntegrandId::i3,
     ReferenceRecipe::literal,
     {ParameterRow{Theorem::t1_rate_only, 1.0, kPi / 4.0, 1.5, kNoK},
      ParameterRow{Theorem::t2, 1.0, kPi / 2.0, 1.5, 12.0},
      ParameterRow{Theorem::t3, 1.0, kPi / 2.0, 1.5, 9.0},
      ParameterRow{Theorem::t4, 1.0, kPi / 2.0, 1.5, 4.5}}},
};

}  // namespace

double IntegrandSpec::evaluate(double x) const {
  require_finite(x);
  switch (id) {
    case IntegrandId::i1: return i1_value(x);
    case IntegrandId::i2: return i2_value(x);
    case IntegrandId::i3: return i3_value(x);
  }
  throw domain_error("unknown integrand");
}

const char* integrand_name(IntegrandId id) {
  switch (id) {
    case IntegrandId::i1: return "i1";
    case IntegrandId::i2: return "i2";
    case IntegrandId::i3: return "i3";
  }
  return "?";
}

const IntegrandSpec& integrand_spec(IntegrandId id) {
  return kSpecs[static_cast<int>(id)];
}

double integrand_value(IntegrandId id, double x) {
  return integrand_spec(id).evaluate(x);
}

double reference_value(IntegrandId id) {
  switch (integrand_spec(id).reference) {
    case ReferenceRecipe::from_e1:
      return 3.0 - 4.0 * std::numbers::e * exp_integral_e1(1.0);
    case ReferenceRecipe::from_ci_si:
      return cosine_integral_ci(1.0) * std::sin(1.0) -
             sine_integral_si_lower(1.0) * std::cos(1.0);
    case ReferenceRecipe::literal:
      return 1.136877446810281077257;
  }
  throw domain_error("unknown reference recipe");
}

std::span<const ParameterRow> parameter_rows(IntegrandId id) {
  return integrand_spec(id).rows;
}

const ParameterRow& parameter_row(IntegrandId id, Theorem theorem) {
  for (const ParameterRow& row : integrand_spec(id).rows) {
    if (row.theorem == theorem) return row;
  }
  throw domain_error("no parameter row for requested theorem");
}

}  // namespace mapquad
