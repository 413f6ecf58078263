#ifndef HOMLIE_PROBES_HPP
#define HOMLIE_PROBES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "homlie/exterior.hpp"

namespace homlie {

inline constexpr int kDefaultProbeDegree = 3;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed1234abcdULL;

/// Functions used to multiply frame elements when checking identities.
struct ProbeSet {
  int dimension = 0;
  int degree = kDefaultProbeDegree;
  /// All monomials of degree <= `degree`, the constant 1 first.
  std::vector<Poly> functions;
  /// Number of seeded random combinations added per identity.
  int random_cases = 8;
  std::uint64_t seed = kDefaultSeed;

  /// Non-constant probe functions.
  std::vector<Poly> nonconstant() const { return {functions.begin() + 1, functions.end()}; }
};

ProbeSet make_probes(int n, int degree = kDefaultProbeDegree);

/// Deterministic generator of random polynomials, sections and forms.
class ProbeRng {
 public:
  explicit ProbeRng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Rational small_rational();
  Poly poly(int n, int max_degree, int max_terms = 3);
  PolyVector section(int n, int r, int max_degree, int max_terms = 2);
  Graded graded(Kind kind, int n, int r, int degree, int max_degree, int max_terms = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace homlie

#endif  // HOMLIE_PROBES_HPP
