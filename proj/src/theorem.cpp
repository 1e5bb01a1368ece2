#include "mapquad/theorem.hpp"

#include <numbers>

#include "mapquad/errors.hpp"

namespace mapquad {

const char* theorem_name(Theorem theorem) {
  switch (theorem) {
    case Theorem::t1_rate_only: return "1";
    case Theorem::t2: return "2";
    case Theorem::t3: return "3";
    case Theorem::t4: return "4";
  }
  return "?";
}

int theorem_number(Theorem theorem) {
  switch (theorem) {
    case Theorem::t1_rate_only: return 1;
    case Theorem::t2: return 2;
    case Theorem::t3: return 3;
    case Theorem::t4: return 4;
  }
  return 0;
}

Theorem theorem_from_number(int number) {
  switch (number) {
    case 1: return Theorem::t1_rate_only;
    case 2: return Theorem::t2;
    case 3: return Theorem::t3;
    case 4: return Theorem::t4;
  }
  throw domain_error("theorem number must be 1, 2, 3 or 4");
}

double theorem_d_limit(Theorem theorem) {
  switch (theorem) {
    case Theorem::t1_rate_only:
    case Theorem::t2:
      return std::numbers::pi / 2.0;
    case Theorem::t3:
      return std::numbers::pi;
    case Theorem::t4:
      return (1.0 + std::numbers::pi) / 2.0;
  }
  throw domain_error("unknown theorem");
}

}  // namespace mapquad
