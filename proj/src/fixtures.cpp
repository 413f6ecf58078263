#include "homlie/fixtures.hpp"

namespace homlie::fixtures {

AffineTwist s1_base() { return AffineTwist::diagonal({Rational(2), Rational(1, 2)}); }

HomAlgebroid s0() {
  const AffineTwist id = AffineTwist::identity(2);
  return HomAlgebroid(SectionTwist::identity(id, 1), PolyMatrix::Zero(2, 1), zero_structure(1));
}

HomAlgebroid s1() { return make_pullback_tangent(s1_base()); }

HomAlgebroid s2() { return make_tm_r(s1_base()); }

HomAlgebroid s3() { return make_pullback_tangent(AffineTwist::identity(3)); }

HomAlgebroid s1_perturbed() {
  const HomAlgebroid a = s1();
  StructureTable c = a.structure();
  c[0][1](0) = Poly(1);
  c[1][0](0) = Poly(-1);
  return HomAlgebroid(a.twist(), a.anchor(), c, a.vars());
}

}  // namespace homlie::fixtures
