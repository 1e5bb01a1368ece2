#pragma once

#include <cstdint>
#include <optional>

#include "mapquad/conformal_maps.hpp"

namespace mapquad {

// Truncation/mesh parameters shared by all four error regimes:
//
//   mu = min(alpha, beta)
//   mu = alpha:  M = n, N = ceil(alpha n / beta)
//   mu = beta:   N = n, M = ceil(beta n / alpha)
//   h  = sqrt(2 pi d / (mu n))
//
// alpha is the algebraic decay exponent of the left tail, beta the
// exponential decay rate of the right tail, d the strip half-width.
struct QuadraturePlan {
  double alpha = 0.0;
  double beta = 0.0;
  double d = 0.0;
  std::optional<double> K;  // bound constant; absent when no bound is wanted
  int n = 0;
  double mu = 0.0;
  int M = 0;
  int N = 0;
  double h = 0.0;
};

struct TruncationSplit {
  int M = 0;
  int N = 0;
  double mu = 0.0;
};

// Exact rational for the overload of select_mn that avoids any floating
// rounding in the ceiling when alpha and beta are exactly representable
// ratios. Plain ceil on doubles can only over-count by one (which only
// shrinks the truncation error), never under-count, so the double path is
// safe too; the rational path exists for bit-exact reproducibility.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

TruncationSplit select_mn(double alpha, double beta, int n);
TruncationSplit select_mn(Rational alpha, Rational beta, int n);

double mesh_size(double d, double mu, int n);

QuadraturePlan make_plan(double alpha, double beta, double d,
                         std::optional<double> K, int n, MapKind map_kind);

}  // namespace mapquad
