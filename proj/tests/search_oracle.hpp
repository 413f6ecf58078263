#ifndef HOMLIE_TESTS_SEARCH_ORACLE_HPP
#define HOMLIE_TESTS_SEARCH_ORACLE_HPP

#include <optional>

#include "oracle/classical_oracle.hpp"

namespace oracle {

/// First bivector on Q^3 (pi12, pi13, pi23 over {0, 1, x, y, z}, pi23 fastest)
/// whose classical Schouten square is nonzero.
inline std::optional<Graded> first_non_poisson_bivector() {
  const std::vector<Poly> values{Poly(0), Poly(1), Poly::variable(0), Poly::variable(1), Poly::variable(2)};
  for (const Poly& a : values) {
    for (const Poly& b : values) {
      for (const Poly& c : values) {
        Graded pi(Kind::Vector, 3, 2);
        pi.add(bit(0) | bit(1), a);
        pi.add(bit(0) | bit(2), b);
        pi.add(bit(1) | bit(2), c);
        if (!schouten(pi, pi).is_zero()) return pi;
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle

#endif
