#include "mapquad/quadrature_engine.hpp"

#include <cmath>
#include <string>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double transformed_integrand(const MapDescriptor& map, const Integrand& f,
                             double t, std::int64_t* zeroed) {
  if (!std::isfinite(t)) {
    throw domain_error("transformed_integrand: non-finite node");
  }
  const double x = map.value(t);
  const double w = map.derivative(t);
  if (!std::isfinite(x) || !std::isfinite(w)) {
    if (zeroed) ++*zeroed;
    return 0.0;
  }
  const double fx = f(x);
  if (std::isnan(fx)) {
    throw integrand_error(t, x,
                          "integrand returned NaN at node t = " +
                              std::to_string(t) + " (map point x = " +
                              std::to_string(x) + ")");
  }
  return fx * w;
}

QuadratureResult trapezoid_sum(const MapDescriptor& map, const Integrand& f,
                               const QuadraturePlan& plan) {
  QuadratureResult result;
  KahanAccumulator acc;
  for (int k = -plan.M; k <= plan.N; ++k) {
    acc.add(transformed_integrand(map, f, k * plan.h,
                                  &result.nonfinite_terms_zeroed));
  }
  result.value = plan.h * acc.sum;
  result.evaluations = static_cast<std::int64_t>(plan.M) + plan.N + 1;
  return result;
}

}  // namespace mapquad
