#include "mapquad/conformal_maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mapquad/errors.hpp"

namespace mapquad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this the reciprocal terms 1/arcsinh(e^t), 1/log(1+e^t) leave the
// double range; the maps report saturated sentinels instead.
constexpr double kSentinelCutoff = -700.0;

void require_finite(double t) {
  if (!std::isfinite(t)) throw domain_error("conformal map: non-finite argument");
}

// arcsinh(e^t) without overflow: for large t, log(e^t + sqrt(1+e^{2t}))
// = t + log(1 + sqrt(1 + e^{-2t})).
double asinh_exp(double t) {
  if (t > 33.0) return t + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * t)));
  return std::asinh(std::exp(t));
}

// log(1+e^t) without overflow.
double log1p_exp(double t) {
  if (t > 36.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace

const char* map_name(MapKind kind) {
  switch (kind) {
    case MapKind::stenger: return "stenger";
    case MapKind::okayama_hanada: return "oh";
    case MapKind::proposed: return "new";
  }
  return "?";
}

double map_strip_half_width(MapKind kind) {
  return kind == MapKind::proposed ? std::numbers::pi : std::numbers::pi / 2.0;
}

double psi_value(double t) {
  require_finite(t);
  if (t < kSentinelCutoff) return -kInf;
  const double a = asinh_exp(t);
  return 0.5 * (a - 1.0 / a);
}

double psi_deriv(double t) {
  require_finite(t);
  if (t < kSentinelCutoff) return kInf;
  const double a = asinh_exp(t);
  // (1 + a^2) / (2 sqrt(1+e^{-2t}) a^2), grouped so that neither e^{-2t}
  // (t <= -355) nor a^2 (t <= -354) leaves the double range.
  const double s = t < 0.0 ? std::exp(-t) * std::sqrt(1.0 + std::exp(2.0 * t)) * a
                           : std::sqrt(1.0 + std::exp(-2.0 * t)) * a;
  return 0.5 * (1.0 / a + a) / s;
}

double psi_tilde_value(double t) { return 2.0 * psi_value(t); }

double psi_tilde_deriv(double t) { return 2.0 * psi_deriv(t); }

double phi_value(double t) {
  require_finite(t);
  if (t < kSentinelCutoff) return -kInf;
  const double l = log1p_exp(t);
  return l - 1.0 / l;
}

double phi_deriv(double t) {
  require_finite(t);
  if (t < kSentinelCutoff) return kInf;
  const double l = log1p_exp(t);
  // (1 + l^2) / ((1+e^{-t}) l^2); (1+e^{-t})*l stays near e^{-t}*l ~ 1 for
  // very negative t, so no intermediate overflows for t >= -700.
  return (1.0 / l + l) / ((1.0 + std::exp(-t)) * l);
}

double MapDescriptor::value(double t) const {
  switch (kind) {
    case MapKind::stenger: return psi_value(t);
    case MapKind::okayama_hanada: return psi_tilde_value(t);
    case MapKind::proposed: return phi_value(t);
  }
  throw domain_error("unknown map kind");
}

double MapDescriptor::derivative(double t) const {
  switch (kind) {
    case MapKind::stenger: return psi_deriv(t);
    case MapKind::okayama_hanada: return psi_tilde_deriv(t);
    case MapKind::proposed: return phi_deriv(t);
  }
  throw domain_error("unknown map kind");
}

MapDescriptor make_map(MapKind kind) {
  return MapDescriptor{kind, map_strip_half_width(kind)};
}

}  // namespace mapquad
