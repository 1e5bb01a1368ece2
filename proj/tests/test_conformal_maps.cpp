#include "mapquad/conformal_maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dd.hpp"
#include "mapquad/errors.hpp"
#include "oracles.hpp"

using namespace mapquad;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double central_diff(double (*f)(double), double t, double step = 1e-6) {
  return (f(t + step) - f(t - step)) / (2.0 * step);
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("psi desk values against the dd oracle") {
  CHECK(oracles::rel_error(psi_value(0.0), oracles::psi_value(0.0)) < 1e-14);
  CHECK(psi_value(0.0) == doctest::Approx(-0.12660953504348399).epsilon(1e-14));
  CHECK(oracles::rel_error(psi_value(5.0), oracles::psi_value(5.0)) < 1e-13);
  CHECK(oracles::rel_error(psi_value(-3.0), oracles::psi_value(-3.0)) < 1e-13);
  CHECK(psi_deriv(0.0) == doctest::Approx(0.80868284621802467).epsilon(1e-14));
  CHECK(oracles::rel_error(psi_deriv(2.0), oracles::psi_deriv(2.0)) < 1e-13);
  CHECK(std::fabs(central_diff(&psi_value, 0.0) - psi_deriv(0.0)) /
            psi_deriv(0.0) <
        1e-8);
}

TEST_CASE("psi is monotone and overflow-free at large arguments") {
  CHECK(psi_value(-1.0) < psi_value(0.0));
  CHECK(psi_value(0.0) < psi_value(1.0));

  // At t = 700 the direct e^t form would overflow; asymptotically
  // arcsinh(e^t) = t + log 2 up to e^{-2t}.
  const double a = 700.0 + std::numbers::ln2;
  const double expected = 0.5 * (a - 1.0 / a);
  CHECK(std::isfinite(psi_value(700.0)));
  CHECK(psi_value(700.0) == doctest::Approx(expected).epsilon(1e-12));

  // psi'(t) = (1 + 1/arcsinh^2(e^t))/2 + O(e^{-2t}); at t = 50 the
  // asymptote with a = t + log 2 is exact to far below 1e-10, and the bare
  // 1/2 limit is reached at large t.
  const double a50 = 50.0 + std::numbers::ln2;
  CHECK(std::fabs(psi_deriv(50.0) - 0.5 * (1.0 + 1.0 / (a50 * a50))) < 1e-10);
  CHECK(std::fabs(psi_deriv(1e6) - 0.5) < 1e-10);
  CHECK(psi_deriv(0.0) > 0.0);
}

TEST_CASE("psi_tilde is exactly twice psi") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const double t = uniform(gen, -30.0, 30.0);
    CHECK(psi_tilde_value(t) == 2.0 * psi_value(t));
    CHECK(psi_tilde_deriv(t) == 2.0 * psi_deriv(t));
  }
  CHECK(psi_tilde_value(0.0) ==
        doctest::Approx(-0.25321907008696798).epsilon(1e-14));
  for (double t : {-2.0, 2.0}) {
    const double fd = central_diff(&psi_tilde_value, t);
    CHECK(std::fabs(fd - psi_tilde_deriv(t)) / psi_tilde_deriv(t) < 1e-8);
  }
}

TEST_CASE("phi desk values against the dd oracle") {
  CHECK(oracles::rel_error(phi_value(0.0), oracles::phi_value(0.0)) < 1e-14);
  CHECK(phi_value(0.0) == doctest::Approx(-0.74954786032901810).epsilon(1e-14));
  // (1 + log^2 2) / (2 log^2 2)
  CHECK(phi_deriv(0.0) == doctest::Approx(1.5406844905028039).epsilon(1e-14));
  CHECK(oracles::rel_error(phi_value(-3.0), oracles::phi_value(-3.0)) < 1e-13);
  CHECK(oracles::rel_error(phi_deriv(1.3), oracles::phi_deriv(1.3)) < 1e-13);
  CHECK(std::fabs(central_diff(&phi_value, 1.3) - phi_deriv(1.3)) /
            phi_deriv(1.3) <
        1e-8);
}

TEST_CASE("phi asymptotics and sign change") {
  CHECK(phi_value(-1.0) < phi_value(0.0));
  CHECK(phi_value(0.0) < phi_value(1.0));

  const double l = 100.0 + std::log1p(std::exp(-100.0));
  CHECK(std::fabs(phi_value(100.0) - (l - 1.0 / l)) < 1e-10);

  // phi'(t) = 1 + 1/log^2(1+e^t) + O(e^{-t}); the asymptote with l = 60 is
  // exact to well below 1e-10 at t = 60, the bare limit 1 far out.
  CHECK(std::fabs(phi_deriv(60.0) - (1.0 + 1.0 / 3600.0)) < 1e-10);
  CHECK(std::fabs(phi_deriv(1e6) - 1.0) < 1e-10);

  // phi(t) < 0 iff log(1+e^t) < 1, i.e. t < log(e-1).
  const double boundary = std::log(std::numbers::e - 1.0);
  std::mt19937_64 gen(11);
  for (int i = 0; i < 2000; ++i) {
    const double t = uniform(gen, -20.0, 20.0);
    if (std::fabs(t - boundary) < 1e-9) continue;
    CHECK((phi_value(t) < 0.0) == (t < boundary));
  }
}

TEST_CASE("map values are strictly increasing on a dense grid") {
  for (MapKind kind :
       {MapKind::stenger, MapKind::okayama_hanada, MapKind::proposed}) {
    const MapDescriptor map = make_map(kind);
    double prev = map.value(-30.0);
    for (int i = 1; i <= 10000; ++i) {
      const double t = -30.0 + 60.0 * i / 10000.0;
      const double v = map.value(t);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("derivatives match central finite differences") {
  std::mt19937_64 gen(13);
  for (MapKind kind :
       {MapKind::stenger, MapKind::okayama_hanada, MapKind::proposed}) {
    const MapDescriptor map = make_map(kind);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = uniform(gen, -20.0, 20.0);
      const double fd =
          (map.value(t + 1e-6) - map.value(t - 1e-6)) / 2e-6;
      const double d = map.derivative(t);
      worst = std::fmax(worst, std::fabs(fd - d) / std::fabs(d));
      CHECK(d > 0.0);
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("no NaN on any finite input; documented sentinels past -700") {
  const double extremes[] = {-1e308, -1e15,  -745.0, -709.0, -700.5,
                             -700.0, -699.9, -355.0, -36.0,  -1e-300,
                             0.0,    36.0,   700.0,  709.0,  1e15,
                             1e308};
  for (MapKind kind :
       {MapKind::stenger, MapKind::okayama_hanada, MapKind::proposed}) {
    const MapDescriptor map = make_map(kind);
    for (double t : extremes) {
      CHECK(!std::isnan(map.value(t)));
      CHECK(!std::isnan(map.derivative(t)));
      if (t >= -700.0) {
        CHECK(std::isfinite(map.value(t)));
        CHECK(std::isfinite(map.derivative(t)));
        CHECK(map.derivative(t) > 0.0);
      }
    }
    CHECK(map.value(-800.0) == -kInf);
    CHECK(map.derivative(-800.0) == kInf);
  }
}

TEST_CASE("non-finite inputs are rejected") {
  CHECK_THROWS_AS(psi_value(std::nan("")), domain_error);
  CHECK_THROWS_AS(phi_deriv(kInf), domain_error);
  CHECK_THROWS_AS(psi_tilde_value(-kInf), domain_error);
}

TEST_CASE("map metadata") {
  CHECK(make_map(MapKind::stenger).max_strip_half_width ==
        std::numbers::pi / 2.0);
  CHECK(make_map(MapKind::okayama_hanada).max_strip_half_width ==
        std::numbers::pi / 2.0);
  CHECK(make_map(MapKind::proposed).max_strip_half_width == std::numbers::pi);
  CHECK(map_name(MapKind::okayama_hanada) == doctest::String("oh"));
}
