#pragma once

#include <stdexcept>
#include <string>

namespace mapquad {

// Invalid argument to a numerical routine (non-finite input, value out of
// the mathematically admissible range).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Requested strip half-width d exceeds what the map/bound admits.
class strip_violation : public domain_error {
 public:
  strip_violation(double d, double limit, const std::string& what)
      : domain_error(what), d_(d), limit_(limit) {}
  double d() const { return d_; }
  double limit() const { return limit_; }

 private:
  double d_;
  double limit_;
};

// Argument is mathematically fine but outside the implemented range.
class unsupported_range : public domain_error {
 public:
  explicit unsupported_range(const std::string& what) : domain_error(what) {}
};

// Integrand returned NaN at a finite node.
class integrand_error : public std::runtime_error {
 public:
  integrand_error(double t, double x, const std::string& what)
      : std::runtime_error(what), t_(t), x_(x) {}
  double node() const { return t_; }
  double map_point() const { return x_; }

 private:
  double t_;
  double x_;
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mapquad
