#pragma once

#include <utility>

#include "mapquad/theorem.hpp"

namespace mapquad {

// Auxiliary constants entering the bound constants.
double gamma_d_constant(double d);  // 1/cos(d), needs d < pi/2
double c_d_constant(double d);      // 1/cos(d/2), needs d < pi
double sigma_constant();            // 1/arcsinh(1)
double lambda_constant();           // 1/log(2)

// A fully evaluable a-priori error bound
//
//   |I - I_n| <= K (2 C_disc / (1 - e^{-sqrt(2 pi d mu)}) + C_trunc)
//                  e^{-sqrt(2 pi d mu n)}
//
// where (C_disc, C_trunc) is (C1, C2) under t2, (C3, C4) under t3 and
// (C5, C6) under t4. t1_rate_only carries no constants: only the decay
// rate e^{-sqrt(2 pi d mu n)} is known there.
struct BoundSpec {
  Theorem theorem = Theorem::t1_rate_only;
  double alpha = 0.0;
  double beta = 0.0;
  double d = 0.0;
  double K = 0.0;
  double mu = 0.0;
  double c_disc = 0.0;
  double c_trunc = 0.0;
};

// The constant pairs of the three computable bounds. Each throws
// strip_violation when d reaches the regime's limit (pi/2, pi, (1+pi)/2).
std::pair<double, double> constants_t2(double alpha, double beta, double d);
std::pair<double, double> constants_t3(double alpha, double beta, double d);
std::pair<double, double> constants_t4(double alpha, double beta, double d);

BoundSpec make_bound_spec(Theorem theorem, double alpha, double beta, double d,
                          double K);

// Evaluates the bound above for a given n; strictly decreasing in n.
// Rejects t1_rate_only (use rate_envelope for it).
double bound_value(const BoundSpec& spec, int n);

// e^{-sqrt(2 pi d mu n)}: the convergence-rate shape without any constant,
// suitable only for slope checks.
double rate_envelope(double d, double mu, int n);

}  // namespace mapquad
