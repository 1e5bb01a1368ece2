#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mapquad/conformal_maps.hpp"
#include "mapquad/error_bounds.hpp"
#include "mapquad/integrand_catalog.hpp"
#include "mapquad/theorem.hpp"

namespace mapquad {

// The map each theorem's bound is stated for: 1 -> stenger,
// 2 -> okayama_hanada, 3/4 -> proposed.
MapKind default_map_for(Theorem theorem);

struct StudyConfig {
  IntegrandId integrand = IntegrandId::i1;
  Theorem theorem = Theorem::t4;
  std::optional<MapKind> map;  // defaults to default_map_for(theorem)
  int n_start = 5;
  int n_stop = 100;
  int n_step = 5;
  std::string output_path;  // empty: no CSV file
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> d;
  std::optional<double> K;
};

struct ConvergenceRow {
  int n = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;
  double approximation = 0.0;
  double abs_error = 0.0;
  std::optional<double> bound;  // absent for theorem 1 or a mismatched map
};

struct StudyResult {
  IntegrandId integrand = IntegrandId::i1;
  Theorem theorem = Theorem::t4;
  MapKind map = MapKind::proposed;
  bool map_mismatch = false;  // map overridden away from the theorem's own
  double reference = 0.0;
  std::vector<ConvergenceRow> rows;

  // True when every row carrying a bound satisfies
  // abs_error <= bound * (1 + 1e-12); the slack absorbs double rounding in
  // the bound evaluation itself.
  bool certified() const;
};

// Runs one convergence study: for each n in the range, parameter selection,
// the trapezoidal sum, the absolute error against the exact value, and (for
// theorems 2-4 on their own map) the a-priori bound. Writes CSV to
// output_path when set.
StudyResult run_study(const StudyConfig& config);

// CSV schema (byte-deterministic): header
// integrand,map,theorem,n,h,M,N,approximation,abs_error,bound
// with shortest round-trip real formatting, "n/a" for an absent bound and
// "\n" line ends.
void write_csv(const StudyResult& result, std::ostream& out);
void write_csv_file(const StudyResult& result, const std::string& path);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace mapquad
