#pragma once

#include <string>

namespace mapquad {

// The three variable transformations used for infinite integrals of
// integrands that decay exponentially as x -> +inf but only algebraically
// as x -> -inf:
//
//   stenger:         x = psi(t)    = sinh(log(arcsinh(e^t)))
//   okayama_hanada:  x = psitilde(t) = 2 sinh(log(arcsinh(e^t)))
//   proposed:        x = phi(t)    = 2 sinh(log(log(1 + e^t)))
//
// All three are strictly increasing bijections of the real line whose
// transformed integrand f(map(t)) map'(t) decays exponentially on both
// sides, so the truncated trapezoidal rule converges exponentially.
enum class MapKind { stenger, okayama_hanada, proposed };

const char* map_name(MapKind kind);

// psi' and psitilde' stop being analytic at Im t = pi/2, phi' at Im t = pi;
// the admissible strip half-width d must stay strictly below this.
double map_strip_half_width(MapKind kind);

double psi_value(double t);
double psi_deriv(double t);
double psi_tilde_value(double t);
double psi_tilde_deriv(double t);
double phi_value(double t);
double phi_deriv(double t);

// One of the three maps plus its validity metadata. value/derivative are
// total on finite t: below t = -700 they return -inf/+inf sentinels instead
// of overflowing (the quadrature engine turns those terms into 0, which is
// exact for integrands satisfying the admissible decay conditions).
struct MapDescriptor {
  MapKind kind;
  double max_strip_half_width;

  double value(double t) const;
  double derivative(double t) const;
};

MapDescriptor make_map(MapKind kind);

}  // namespace mapquad
