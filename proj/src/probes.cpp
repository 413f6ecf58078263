#include "homlie/probes.hpp"

namespace homlie {

ProbeSet make_probes(int n, int degree) {
  ProbeSet p;
  p.dimension = n;
  p.degree = degree;
  p.functions = monomials_up_to(n, degree);
  return p;
}

Rational ProbeRng::small_rational() {
  int num = 0;
  while (num == 0) num = integer(-3, 3);
  const int den = integer(1, 2);
  return Rational(num, den);
}

Poly ProbeRng::poly(int n, int max_degree, int max_terms) {
  const int count = integer(1, max_terms);
  std::vector<Poly::Term> terms;
  for (int t = 0; t < count; ++t) {
    std::vector<int> exps(n, 0);
    int budget = integer(0, max_degree);
    for (int i = 0; i < n && budget > 0; ++i) {
      const int e = i + 1 == n ? budget : integer(0, budget);
      exps[i] = e;
      budget -= e;
    }
    terms.push_back({Monomial::from_exponents(exps), small_rational()});
  }
  return Poly::from_terms(std::move(terms));
}

PolyVector ProbeRng::section(int n, int r, int max_degree, int max_terms) {
  PolyVector v = PolyVector::Zero(r);
  for (int i = 0; i < r; ++i) {
    if (integer(0, 2) != 0) v(i) = poly(n, max_degree, max_terms);
  }
  return v;
}

Graded ProbeRng::graded(Kind kind, int n, int r, int degree, int max_degree, int max_terms) {
  Graded g(kind, r, degree);
  for (IndexSet s : subsets(r, degree)) {
    if (integer(0, 2) != 0) g.add(s, poly(n, max_degree, max_terms));
  }
  return g;
}

}  // namespace homlie
