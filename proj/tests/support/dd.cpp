#include "dd.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace ddmath {

namespace {

dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| or a == 0.
dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

dd renorm(double hi, double lo) { return quick_two_sum(hi, lo); }

}  // namespace

double to_double(dd a) { return a.hi + a.lo; }

dd operator-(dd a) { return {-a.hi, -a.lo}; }

dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  const dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

dd operator-(dd a, dd b) { return a + (-b); }

dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return renorm(p.hi, p.lo);
}

dd operator/(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  const double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + dd(q3);
}

bool operator<(dd a, dd b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

bool operator>(dd a, dd b) { return b < a; }

dd fabs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

dd ldexp(dd a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

dd pi() { return {3.141592653589793116e+00, 1.224646799147353207e-16}; }
dd half_pi() { return {1.570796326794896558e+00, 6.123233995736766036e-17}; }
dd e_const() { return {2.718281828459045091e+00, 1.445646891729250158e-16}; }
dd ln2() { return {6.931471805599452862e-01, 2.319046813846299558e-17}; }

dd sqrt(dd a) {
  if (a.hi == 0.0 && a.lo == 0.0) return {};
  if (a.hi < 0.0) throw std::domain_error("dd sqrt of negative value");
  dd y = dd(std::sqrt(a.hi));
  y = ldexp(y + a / y, -1);
  y = ldexp(y + a / y, -1);
  return y;
}

dd exp(dd a) {
  if (a.hi < -745.0) return {};
  if (a.hi > 709.0) throw std::overflow_error("dd exp overflow");
  const int k = static_cast<int>(std::lround(a.hi / ln2().hi));
  const dd r = a - dd(static_cast<double>(k)) * ln2();
  // |r| <= ln2/2; Taylor with term ratio < 0.35 converges well past 2^-106.
  dd term(1.0);
  dd sum(1.0);
  for (int i = 1; i < 40; ++i) {
    term = term * r / dd(static_cast<double>(i));
    sum = sum + term;
    if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
  }
  return ldexp(sum, k);
}

dd log(dd a) {
  if (!(a.hi > 0.0)) throw std::domain_error("dd log of non-positive value");
  dd y = dd(std::log(a.hi));
  y = y + a * exp(-y) - dd(1.0);
  y = y + a * exp(-y) - dd(1.0);
  return y;
}

dd sin(dd a) {
  assert(std::fabs(a.hi) <= 3.2);
  const dd a2 = a * a;
  dd term = a;
  dd sum = a;
  for (int i = 1; i < 40; ++i) {
    term = -term * a2 / dd((2.0 * i) * (2.0 * i + 1.0));
    sum = sum + term;
    if (std::fabs(term.hi) < 1e-38 * (std::fabs(sum.hi) + 1e-300)) break;
  }
  return sum;
}

dd cos(dd a) { return sin(half_pi() - fabs(a)); }

dd atan(dd a) {
  if (a.hi < 0.0) return -atan(-a);
  if (a.hi > 1.0 || (a.hi == 1.0 && a.lo > 0.0)) {
    return half_pi() - atan(dd(1.0) / a);
  }
  // Three angle halvings bring the argument under tan(pi/16) ~ 0.199.
  dd x = a;
  for (int i = 0; i < 3; ++i) {
    x = x / (dd(1.0) + sqrt(dd(1.0) + x * x));
  }
  const dd x2 = x * x;
  dd power = x;
  dd sum = x;
  for (int i = 1; i < 60; ++i) {
    power = -power * x2;
    const dd term = power / dd(2.0 * i + 1.0);
    sum = sum + term;
    if (std::fabs(term.hi) < 1e-38 * (std::fabs(sum.hi) + 1e-300)) break;
  }
  return ldexp(sum, 3);
}

dd asinh(dd a) {
  if (a.hi < 0.0) throw std::domain_error("dd asinh needs a >= 0 here");
  return log(a + sqrt(dd(1.0) + a * a));
}

dd pow(dd base, dd e) { return exp(e * log(base)); }

dd pow(dd base, double e) { return pow(base, dd(e)); }

dd from_string(std::string_view text) {
  dd value(0.0);
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("dd literal: two points");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      value = value * dd(10.0) + dd(static_cast<double>(c - '0'));
      if (seen_point) ++frac_digits;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("dd literal: no digits");
  int exponent = -frac_digits;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    exponent += std::atoi(std::string(text.substr(i + 1)).c_str());
    i = text.size();
  }
  if (i != text.size()) throw std::invalid_argument("dd literal: trailing junk");
  dd scale(1.0);
  const dd ten(10.0);
  for (int k = 0; k < std::abs(exponent); ++k) scale = scale * ten;
  value = exponent >= 0 ? value * scale : value / scale;
  return negative ? -value : value;
}

std::ostream& operator<<(std::ostream& os, dd a) {
  return os << "dd(" << a.hi << " + " << a.lo << ")";
}

}  // namespace ddmath
