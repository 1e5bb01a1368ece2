#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mapquad {

// Sampled verification of the scalar real-line inequalities backing the
// bound constants. Each check evaluates margin = rhs - lhs of "lhs <= rhs"
// at deterministic endpoint probes plus seeded uniform samples; a violation
// is a margin below -1e-15 (double rounding slack at equality points).
struct InequalityCheckReport {
  std::string name;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  double worst_margin = 0.0;
};

// arccos(t/2) >= sqrt(2-t) on [0, 2].
InequalityCheckReport check_arccos_bound(std::int64_t samples, std::uint64_t seed);

// |L/(1+L) * (1+e^x)/e^x| <= 1 on R, L = log(1+e^x).
InequalityCheckReport check_exp_log_real(std::int64_t samples, std::uint64_t seed);

// 1/|-1 + log(1+e^x)| <= 1/(1-log 2) for x < 0.
InequalityCheckReport check_one_minus_log_bound(std::int64_t samples,
                                                std::uint64_t seed);

// (1+L^2)(1-e^{-L})^2/L^2 <= e^{1/pi^3} and 1/((1+e^{-x}) L) <= 1 on R.
InequalityCheckReport check_real_func_bounds(std::int64_t samples,
                                             std::uint64_t seed);

std::vector<InequalityCheckReport> run_all_lemma_checks(std::int64_t samples,
                                                        std::uint64_t seed);

}  // namespace mapquad
