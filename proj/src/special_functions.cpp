#include "mapquad/special_functions.hpp"

#include <cmath>
#include <string>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

// Euler-Mascheroni constant.
constexpr double kEulerGamma = 0.57721566490153286061;

// Only the small-argument series branch is implemented; arguments above 2
// would need asymptotic expansions and are rejected rather than silently
// losing accuracy.
constexpr double kMaxArg = 2.0;

constexpr double kTermCutoff = 1e-18;
constexpr int kMaxTerms = 200;

void require_range(double x, double low, const char* name) {
  if (!(x > low) || std::isnan(x)) {
    throw domain_error(std::string(name) + ": argument must satisfy x > " +
                       std::to_string(low));
  }
  if (x > kMaxArg) {
    throw unsupported_range(std::string(name) +
                            ": only 0 < x <= 2 is implemented");
  }
}

SeriesResult finish(double value, double last_term, int terms) {
  const double scale = std::fmax(std::fabs(value), 1.0);
  return SeriesResult{value, terms, std::fabs(last_term) < 1e-17 * scale};
}

}  // namespace

SeriesResult exp_integral_e1_series(double x) {
  require_range(x, 0.0, "exp_integral_e1");
  double sum = 0.0;
  double term = 1.0;  // x^k / k! at k=0
  int k = 0;
  while (++k <= kMaxTerms) {
    term *= x / k;            // x^k / k!
    const double t = term / k;  // x^k / (k k!)
    sum += (k % 2 == 1) ? t : -t;
    if (t < kTermCutoff) {
      return finish(-kEulerGamma - std::log(x) + sum, t, k);
    }
  }
  throw domain_error("exp_integral_e1: series failed to converge");
}

SeriesResult cosine_integral_ci_series(double x) {
  require_range(x, 0.0, "cosine_integral_ci");
  const double x2 = x * x;
  double sum = 0.0;
  double pow = 1.0;  // x^{2k} / (2k)! at k=0
  int k = 0;
  while (++k <= kMaxTerms) {
    pow *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double t = pow / (2.0 * k);
    sum += (k % 2 == 1) ? -t : t;
    if (t < kTermCutoff) {
      return finish(kEulerGamma + std::log(x) + sum, t, k);
    }
  }
  throw domain_error("cosine_integral_ci: series failed to converge");
}

SeriesResult sine_integral_si_lower_series(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw domain_error("sine_integral_si_lower: argument must satisfy x >= 0");
  }
  if (x > kMaxArg) {
    throw unsupported_range(
        "sine_integral_si_lower: only 0 <= x <= 2 is implemented");
  }
  const double half_pi = 1.57079632679489661923;
  if (x == 0.0) return SeriesResult{-half_pi, 1, true};
  const double x2 = x * x;
  double sum = x;
  double pow = x;  // x^{2k+1} / (2k+1)! at k=0
  int k = 0;
  while (++k <= kMaxTerms) {
    pow *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double t = pow / (2.0 * k + 1.0);
    sum += (k % 2 == 1) ? -t : t;
    if (t < kTermCutoff) {
      return finish(sum - half_pi, t, k + 1);
    }
  }
  throw domain_error("sine_integral_si_lower: series failed to converge");
}

double exp_integral_e1(double x) { return exp_integral_e1_series(x).value; }

double cosine_integral_ci(double x) { return cosine_integral_ci_series(x).value; }

double sine_integral_si_lower(double x) {
  return sine_integral_si_lower_series(x).value;
}

}  // namespace mapquad
