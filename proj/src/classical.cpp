#include "homlie/classical.hpp"

#include <stdexcept>

namespace homlie::classical {

namespace {

// Right derivative d/d(theta_i) of theta_S.
int right_sign(IndexSet s, int i) { return std::popcount(s >> (i + 1)) % 2 == 0 ? 1 : -1; }

// sum_i (P d/dtheta_i)(dQ/dx_i)
Graded half(const Graded& p, const Graded& q, int degree) {
  const int n = p.rank();
  Graded out(Kind::Vector, n, degree);
  for (const auto& [s, f] : p.terms()) {
    for (int i = 0; i < n; ++i) {
      if ((s & bit(i)) == 0) continue;
      const IndexSet rest = s & ~bit(i);
      for (const auto& [t, g] : q.terms()) {
        const Poly dg = partial(g, i);
        if (dg.is_zero()) continue;
        const int sign = right_sign(s, i) * shuffle_sign(rest, t);
        if (sign == 0) continue;
        out.add(rest | t, sign > 0 ? f * dg : -(f * dg));
      }
    }
  }
  return out;
}

}  // namespace

Graded schouten(const Graded& p, const Graded& q) {
  if (p.kind() != Kind::Vector || q.kind() != Kind::Vector || p.rank() != q.rank()) {
    throw std::invalid_argument("classical schouten: expects multivector fields of equal rank");
  }
  const int k = p.degree();
  const int l = q.degree();
  const int degree = k + l - 1 < 0 ? 0 : k + l - 1;
  if (k + l == 0) return Graded(Kind::Vector, p.rank(), 0);
  Graded out = half(p, q, degree);
  const Graded back = half(q, p, degree);
  if (((k - 1) * (l - 1)) % 2 == 0) out -= back; else out += back;
  return out;
}

Graded pushforward(const AffineTwist& phi, const Graded& pi) {
  const int n = phi.dimension();
  if (pi.degree() != 2 || pi.rank() != n) throw std::invalid_argument("pushforward: expects a bivector field");
  const RationalMatrix& m = phi.matrix();
  Graded out(Kind::Vector, n, 2);
  for (const auto& [s, f] : pi.terms()) {
    const std::vector<int> ij = indices_of(s);
    const Poly g = phi.inverse_pullback(f);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Rational c = m(a, ij[0]) * m(b, ij[1]) - m(a, ij[1]) * m(b, ij[0]);
        if (c != 0) out.add(bit(a) | bit(b), g * c);
      }
    }
  }
  return out;
}

}  // namespace homlie::classical
