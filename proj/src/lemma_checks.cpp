#include "mapquad/lemma_checks.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

constexpr double kMarginTolerance = 1e-15;

// Deterministic uniform draw: top 53 bits of mt19937_64, so results do not
// depend on the standard library's distribution internals.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : gen_(seed) {}

  double in(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 gen_;
};

class MarginTracker {
 public:
  explicit MarginTracker(std::string name) : report_{std::move(name), 0, 0, 0.0} {
    report_.worst_margin = std::numeric_limits<double>::infinity();
  }

  void probe(double margin) {
    if (margin < report_.worst_margin) report_.worst_margin = margin;
    if (margin < -kMarginTolerance) ++report_.violations;
  }

  InequalityCheckReport take(std::int64_t samples) {
    report_.samples = samples;
    return std::move(report_);
  }

 private:
  InequalityCheckReport report_;
};

void require_samples(std::int64_t samples) {
  if (samples < 1) throw domain_error("lemma check: samples must be >= 1");
}

double log1p_exp(double x) {
  if (x > 36.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

}  // namespace

InequalityCheckReport check_arccos_bound(std::int64_t samples,
                                         std::uint64_t seed) {
  require_samples(samples);
  UniformSampler rng(seed);
  MarginTracker tracker("arccos-bound");
  auto margin_at = [](double t) {
    return std::acos(0.5 * t) - std::sqrt(2.0 - t);
  };
  for (double t : {0.0, 1.0, 2.0}) tracker.probe(margin_at(t));
  for (std::int64_t i = 0; i < samples; ++i) {
    tracker.probe(margin_at(rng.in(0.0, 2.0)));
  }
  return tracker.take(samples);
}

InequalityCheckReport check_exp_log_real(std::int64_t samples,
                                         std::uint64_t seed) {
  require_samples(samples);
  UniformSampler rng(seed);
  MarginTracker tracker("exp-log-ratio");
  auto margin_at = [](double x) {
    const double l = log1p_exp(x);
    double ratio;
    if (x <= 0.0) {
      const double w = std::exp(x);
      ratio = (l / w) * (1.0 + w) / (1.0 + l);
    } else {
      ratio = l * (1.0 + std::exp(-x)) / (1.0 + l);
    }
    return 1.0 - std::fabs(ratio);
  };
  for (double x : {-40.0, 0.0, 40.0}) tracker.probe(margin_at(x));
  for (std::int64_t i = 0; i < samples; ++i) {
    tracker.probe(margin_at(rng.in(-40.0, 40.0)));
  }
  return tracker.take(samples);
}

InequalityCheckReport check_one_minus_log_bound(std::int64_t samples,
                                                std::uint64_t seed) {
  require_samples(samples);
  UniformSampler rng(seed);
  MarginTracker tracker("one-minus-log-bound");
  const double rhs = 1.0 / (1.0 - std::numbers::ln2);
  auto margin_at = [rhs](double x) {
    // x < 0 so L = log(1+e^x) < log 2 < 1, hence |-1+L| = 1-L.
    const double l = std::log1p(std::exp(x));
    return rhs - 1.0 / (1.0 - l);
  };
  for (double x : {-40.0, -10.0, -1e-12}) tracker.probe(margin_at(x));
  for (std::int64_t i = 0; i < samples; ++i) {
    double x = rng.in(-40.0, 0.0);
    if (x == 0.0) x = -1e-12;
    tracker.probe(margin_at(x));
  }
  return tracker.take(samples);
}

InequalityCheckReport check_real_func_bounds(std::int64_t samples,
                                             std::uint64_t seed) {
  require_samples(samples);
  UniformSampler rng(seed);
  MarginTracker tracker("real-func-bounds");
  const double rhs_sq = std::exp(1.0 / std::pow(std::numbers::pi, 3));
  auto probe_both = [&tracker, rhs_sq](double x) {
    const double l = log1p_exp(x);
    // (1+L^2)(1-e^{-L})^2/L^2 with 1-e^{-L} = -expm1(-L) to stay exact for
    // small L.
    const double r = -std::expm1(-l) / l;
    tracker.probe(rhs_sq - (1.0 + l * l) * r * r);
    tracker.probe(1.0 - 1.0 / ((1.0 + std::exp(-x)) * l));
  };
  for (double x : {-40.0, 0.0, 4.68, 40.0}) probe_both(x);
  for (std::int64_t i = 0; i < samples; ++i) {
    probe_both(rng.in(-40.0, 40.0));
  }
  return tracker.take(samples);
}

std::vector<InequalityCheckReport> run_all_lemma_checks(std::int64_t samples,
                                                        std::uint64_t seed) {
  return {check_arccos_bound(samples, seed), check_exp_log_real(samples, seed),
          check_one_minus_log_bound(samples, seed),
          check_real_func_bounds(samples, seed)};
}

}  // namespace mapquad
