#pragma once

#include <cstdint>
#include <functional>

#include "mapquad/conformal_maps.hpp"
#include "mapquad/quadrature_plan.hpp"

namespace mapquad {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  std::int64_t evaluations = 0;           // M + N + 1
  std::int64_t nonfinite_terms_zeroed = 0;  // sentinel map nodes mapped to 0
};

// F(t) = f(map(t)) map'(t). If the map reports an overflow sentinel
// (|value| = inf) the term is 0 under the admissible decay conditions; the
// zeroed counter, when given, records how often that happened. A NaN from f
// at a finite map point raises integrand_error with node and map point.
double transformed_integrand(const MapDescriptor& map, const Integrand& f,
                             double t, std::int64_t* zeroed = nullptr);

// h * sum_{k=-M}^{N} f(map(kh)) map'(kh), accumulated in ascending k with
// Kahan compensation. Bit-identical for identical inputs.
QuadratureResult trapezoid_sum(const MapDescriptor& map, const Integrand& f,
                               const QuadraturePlan& plan);

}  // namespace mapquad
