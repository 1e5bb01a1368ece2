// mapquad command-line front end: convergence studies with CSV output,
// inequality spot checks, and ad-hoc map/bound evaluation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mapquad/error_bounds.hpp"
#include "mapquad/errors.hpp"
#include "mapquad/integrand_catalog.hpp"
#include "mapquad/lemma_checks.hpp"
#include "mapquad/quadrature_plan.hpp"
#include "mapquad/study.hpp"
#include "mapquad/theorem.hpp"

namespace {

using namespace mapquad;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitCertification = 4;

const std::map<std::string, IntegrandId> kIntegrandTokens = {
    {"i1", IntegrandId::i1}, {"i2", IntegrandId::i2}, {"i3", IntegrandId::i3}};

const std::map<std::string, MapKind> kMapTokens = {
    {"stenger", MapKind::stenger},
    {"oh", MapKind::okayama_hanada},
    {"new", MapKind::proposed}};

struct NRange {
  int start = 5;
  int stop = 100;
  int step = 5;
};

NRange parse_n_range(const std::string& text) {
  NRange range;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw CLI::ValidationError("--n", "expected start:stop:step");
  }
  try {
    range.start = std::stoi(text.substr(0, first));
    range.stop = std::stoi(text.substr(first + 1, second - first - 1));
    range.step = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected integers in start:stop:step");
  }
  if (range.start < 1 || range.step < 1 || range.stop < range.start) {
    throw CLI::ValidationError("--n",
                               "need 1 <= start <= stop and step >= 1");
  }
  return range;
}

int cmd_run(IntegrandId integrand, int theorem_number,
            std::optional<MapKind> map, const std::string& n_text,
            const std::string& out_path, std::optional<double> alpha,
            std::optional<double> beta, std::optional<double> d,
            std::optional<double> K) {
  const NRange range = parse_n_range(n_text);
  StudyConfig config;
  config.integrand = integrand;
  config.theorem = theorem_from_number(theorem_number);
  config.map = map;
  config.n_start = range.start;
  config.n_stop = range.stop;
  config.n_step = range.step;
  config.output_path = out_path;
  config.alpha = alpha;
  config.beta = beta;
  config.d = d;
  config.K = K;

  const StudyResult result = run_study(config);
  if (result.map_mismatch) {
    std::cerr << "warning: map '" << map_name(result.map)
              << "' is not the one theorem " << theorem_name(result.theorem)
              << " is stated for; bound column suppressed\n";
  }
  if (out_path.empty()) {
    write_csv(result, std::cout);
  } else {
    std::cerr << "wrote " << result.rows.size() << " rows to " << out_path
              << "\n";
  }
  if (!result.certified()) {
    std::cerr << "certification violated: abs_error exceeded "
                 "bound*(1+1e-12) for some n\n";
    return kExitCertification;
  }
  return kExitOk;
}

int cmd_check_lemmas(std::int64_t samples, std::uint64_t seed) {
  bool all_ok = true;
  for (const InequalityCheckReport& report :
       run_all_lemma_checks(samples, seed)) {
    const bool ok = report.violations == 0;
    all_ok = all_ok && ok;
    std::printf("%-20s samples=%lld violations=%lld worst_margin=%.6e %s\n",
                report.name.c_str(), static_cast<long long>(report.samples),
                static_cast<long long>(report.violations), report.worst_margin,
                ok ? "PASS" : "FAIL");
  }
  return all_ok ? kExitOk : kExitDomain;
}

int cmd_value(MapKind kind, double t) {
  const MapDescriptor map = make_map(kind);
  std::cout << "map: " << map_name(kind) << "\n"
            << "value: " << format_double(map.value(t)) << "\n"
            << "derivative: " << format_double(map.derivative(t)) << "\n";
  return kExitOk;
}

int cmd_bound(int theorem_number, double alpha, double beta, double d,
              double K, int n) {
  const Theorem theorem = theorem_from_number(theorem_number);
  const TruncationSplit split = select_mn(alpha, beta, n);
  const double h = mesh_size(d, split.mu, n);
  std::cout << "theorem: " << theorem_name(theorem) << "\n"
            << "mu: " << format_double(split.mu) << "\n"
            << "M: " << split.M << "\nN: " << split.N << "\n"
            << "h: " << format_double(h) << "\n";
  if (theorem == Theorem::t1_rate_only) {
    if (d >= theorem_d_limit(theorem)) {
      throw strip_violation(d, theorem_d_limit(theorem),
                            "d violates the theorem-1 strip limit pi/2");
    }
    std::cout << "rate_envelope: " << format_double(rate_envelope(d, split.mu, n))
              << "\n"
              << "bound: n/a\n";
    return kExitOk;
  }
  const BoundSpec spec = make_bound_spec(theorem, alpha, beta, d, K);
  std::cout << "C_disc: " << format_double(spec.c_disc) << "\n"
            << "C_trunc: " << format_double(spec.c_trunc) << "\n"
            << "bound: " << format_double(bound_value(spec, n)) << "\n";
  return kExitOk;
}

int cmd_list() {
  for (IntegrandId id : {IntegrandId::i1, IntegrandId::i2, IntegrandId::i3}) {
    std::cout << integrand_name(id)
              << "  reference = " << format_double(reference_value(id)) << "\n";
    for (const ParameterRow& row : parameter_rows(id)) {
      std::cout << "  theorem " << theorem_name(row.theorem)
                << "  alpha=" << format_double(row.alpha)
                << "  beta=" << format_double(row.beta)
                << "  d=" << format_double(row.d)
                << "  K=" << (row.K ? format_double(*row.K) : std::string("n/a"))
                << "  map=" << map_name(default_map_for(row.theorem)) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Trapezoidal quadrature for infinite integrals of unilateral rapidly "
      "decreasing functions, with computable a-priori error bounds"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a convergence study, emit CSV");
  IntegrandId integrand{};
  int theorem_number = 0;
  std::optional<MapKind> map;
  std::string n_text = "5:100:5";
  std::string out_path;
  std::optional<double> alpha, beta, d_override, K_override;
  run->add_option("--integrand", integrand, "integrand id")
      ->required()
      ->transform(CLI::CheckedTransformer(kIntegrandTokens, CLI::ignore_case));
  run->add_option("--theorem", theorem_number, "error-analysis regime 1..4")
      ->required()
      ->check(CLI::Range(1, 4));
  run->add_option("--map", map, "conformal map (default: the theorem's own)")
      ->transform(CLI::CheckedTransformer(kMapTokens, CLI::ignore_case));
  run->add_option("--n", n_text, "n range start:stop:step")->required();
  run->add_option("--out", out_path, "CSV output path");
  run->add_option("--alpha", alpha, "override left-tail decay exponent");
  run->add_option("--beta", beta, "override right-tail decay rate");
  run->add_option("--d", d_override, "override strip half-width");
  run->add_option("--K", K_override, "override bound constant K");

  // check-lemmas
  auto* lemmas = app.add_subcommand("check-lemmas",
                                    "Sampled verification of the scalar "
                                    "inequalities behind the bounds");
  std::int64_t samples = 1000000;
  std::uint64_t seed = 42;
  lemmas->add_option("--samples", samples, "samples per check")
      ->check(CLI::PositiveNumber);
  lemmas->add_option("--seed", seed, "RNG seed");

  // value
  auto* value = app.add_subcommand("value", "Evaluate a map and its derivative");
  MapKind value_map{};
  double value_t = 0.0;
  value->add_option("--map", value_map, "conformal map")
      ->required()
      ->transform(CLI::CheckedTransformer(kMapTokens, CLI::ignore_case));
  value->add_option("--t", value_t, "evaluation point")->required();

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate an a-priori error bound");
  int bound_theorem = 0;
  double b_alpha = 0.0, b_beta = 0.0, b_d = 0.0, b_K = 1.0;
  int b_n = 0;
  bound->add_option("--theorem", bound_theorem)->required()->check(CLI::Range(1, 4));
  bound->add_option("--alpha", b_alpha)->required();
  bound->add_option("--beta", b_beta)->required();
  bound->add_option("--d", b_d)->required();
  bound->add_option("--K", b_K, "bound constant (default 1)");
  bound->add_option("--n", b_n)->required()->check(CLI::PositiveNumber);

  // list
  app.add_subcommand("list", "Print the integrand catalog and parameter rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(integrand, theorem_number, map, n_text, out_path, alpha,
                     beta, d_override, K_override);
    }
    if (lemmas->parsed()) return cmd_check_lemmas(samples, seed);
    if (value->parsed()) return cmd_value(value_map, value_t);
    if (bound->parsed()) {
      return cmd_bound(bound_theorem, b_alpha, b_beta, b_d, b_K, b_n);
    }
    return cmd_list();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mapquad::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mapquad::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
