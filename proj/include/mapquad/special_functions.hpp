#pragma once

namespace mapquad {

// Outcome of a truncated alternating series evaluation.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
};

// Exponential integral E1(x) = int_1^inf e^{-tx}/t dt for 0 < x <= 2,
// via -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!).
SeriesResult exp_integral_e1_series(double x);
double exp_integral_e1(double x);

// Cosine integral Ci(x) = -int_x^inf cos(t)/t dt for 0 < x <= 2,
// via gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!).
SeriesResult cosine_integral_ci_series(double x);
double cosine_integral_ci(double x);

// si(x) = Si(x) - pi/2 for 0 <= x <= 2, with
// Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!).
SeriesResult sine_integral_si_lower_series(double x);
double sine_integral_si_lower(double x);

}  // namespace mapquad
