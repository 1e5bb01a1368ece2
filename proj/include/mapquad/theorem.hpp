#pragma once

namespace mapquad {

// The four error-analysis regimes the library supports. t1_rate_only has a
// convergence rate but no computable constant; t2, t3 and t4 come with fully
// computable a-priori bounds (t2 for the okayama_hanada map, t3/t4 for the
// proposed map; t4 trades a smaller admissible d for much smaller constants).
enum class Theorem { t1_rate_only, t2, t3, t4 };

const char* theorem_name(Theorem theorem);
int theorem_number(Theorem theorem);
Theorem theorem_from_number(int number);

// Strict upper limit on the strip half-width d under each regime:
// pi/2 for t1/t2, pi for t3, (1+pi)/2 for t4.
double theorem_d_limit(Theorem theorem);

}  // namespace mapquad
