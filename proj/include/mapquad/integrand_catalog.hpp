#pragma once

#include <array>
#include <optional>
#include <span>

#include "mapquad/theorem.hpp"

namespace mapquad {

// The three benchmark integrands, in order of appearance:
//
//   i1(x) = {1/(sqrt(1+(x/2)^2) + 1 - x/2)}^2 exp(-x/2 - sqrt(1+(x/2)^2))
//   i2(x) = exp(-x/2 - sqrt(1+(x/2)^2)) / (4 + x^2)
//   i3(x) = (1/2)(1 + x/sqrt(4+x^2)) / (1 + e^{(pi/2) x})
//
// with exact integrals 3 - 4e E1(1), Ci(1) sin 1 - si(1) cos 1, and the
// 21-digit literal 1.136877446810281077257 respectively.
enum class IntegrandId { i1, i2, i3 };

enum class ReferenceRecipe { from_e1, from_ci_si, literal };

// One verified (theorem, alpha, beta, d, K) parameter set. K is absent for
// t1_rate_only, where it does not enter any computation.
struct ParameterRow {
  Theorem theorem = Theorem::t1_rate_only;
  double alpha = 0.0;
  double beta = 0.0;
  double d = 0.0;
  std::optional<double> K;
};

struct IntegrandSpec {
  IntegrandId id = IntegrandId::i1;
  ReferenceRecipe reference = ReferenceRecipe::from_e1;
  std::array<ParameterRow, 4> rows{};

  double evaluate(double x) const;
};

const char* integrand_name(IntegrandId id);
const IntegrandSpec& integrand_spec(IntegrandId id);

double integrand_value(IntegrandId id, double x);
double reference_value(IntegrandId id);
std::span<const ParameterRow> parameter_rows(IntegrandId id);
const ParameterRow& parameter_row(IntegrandId id, Theorem theorem);

}  // namespace mapquad
