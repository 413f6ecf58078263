#include "doctest.h"
#include "fixtures_test.hpp"
#include "homlie/calculus.hpp"
#include "homlie/fixtures.hpp"
#include "oracle/classical_oracle.hpp"

using namespace testing_support;
namespace fx = homlie::fixtures;

namespace {

Graded e2(std::initializer_list<int> idx, const Poly& f = Poly(1)) { return Graded::basis(Kind::Vector, 2, idx, f); }
Graded eps2(std::initializer_list<int> idx, const Poly& f = Poly(1)) {
  return Graded::basis(Kind::Covector, 2, idx, f);
}
Graded fn(const CartanContext& c, const Poly& f) { return Graded::scalar(c.form_kind(), c.rank(), f); }

}  // namespace

TEST_CASE("differential on functions") {
  const CartanContext s1(fx::s1());
  CHECK(differential(s1, fn(s1, P("x"))) == eps2({0}));
  CHECK(differential(s1, fn(s1, P("y"))) == eps2({1}));
  const CartanContext s0(fx::s0());
  ProbeRng rng(1);
  for (int c = 0; c < 5; ++c) {
    CHECK(differential(s0, Graded::scalar(s0.form_kind(), 1, rng.poly(2, 3))).is_zero());
    CHECK(differential(s0, Graded::basis(s0.form_kind(), 1, {0}, rng.poly(2, 3))).is_zero());
  }
}

TEST_CASE("d squared and Leibniz on S1") {
  const CartanContext s1(fx::s1());
  const Graded w = eps2({0}, P("x"));
  CHECK(differential(s1, differential(s1, fn(s1, P("x^2*y")))).is_zero());
  CHECK(differential(s1, w).is_zero());
  const Graded a = eps2({0}), b = eps2({1});
  const Graded lhs = differential(s1, wedge(a, b));
  const Graded rhs =
      wedge(differential(s1, a), s1.dual_twist().apply(b)) - wedge(s1.dual_twist().apply(a), differential(s1, b));
  CHECK((lhs - rhs).is_zero());
  const Graded w2 = eps2({0}, P("y^2"));
  CHECK(differential(s1, w2) == eps2({1, 0}, P("2*y")));
}

TEST_CASE("differential properties hold on the canonical instances") {
  for (const HomAlgebroid& a : {fx::s0(), fx::s1(), fx::s2(), fx::s3()}) {
    const Report r = check_differential_props(CartanContext(a), make_probes(a.dimension(), 2));
    CAPTURE(r.first_failure() ? r.first_failure()->name : std::string("none"));
    CHECK(r.passed());
  }
  RationalMatrix m(2, 2);
  m << 1, 1, 0, 1;
  RationalVector b(2);
  b << 2, -1;
  const HomAlgebroid shear = make_pullback_tangent(AffineTwist(m, b));
  CHECK(check_differential_props(CartanContext(shear), make_probes(2, 2)).passed());
}

TEST_CASE("differential is not tensorial for the perturbed instance") {
  const Report r = check_differential_props(CartanContext(fx::s1_perturbed()), make_probes(2, 2));
  CHECK_FALSE(r.passed());
}

TEST_CASE("differential matches de Rham on the classical tangent algebroid") {
  const CartanContext s3(fx::s3());
  ProbeRng rng(14);
  for (int c = 0; c < 30; ++c) {
    const Graded w = rng.graded(Kind::Covector, 3, 3, rng.integer(0, 2), 3);
    REQUIRE(differential(s3, w) == oracle::de_rham(w));
  }
}

TEST_CASE("interior multiplication") {
  const CartanContext s1(fx::s1());
  CHECK(interior(s1, e2({0}), eps2({0, 1})) == eps2({1}, Poly(Rational(1, 2))));
  const CartanContext classical(make_pullback_tangent(AffineTwist::identity(2)));
  CHECK(interior(classical, e2({0}), eps2({0, 1})) == eps2({1}));
  CHECK_THROWS(interior(s1, e2({0, 1}), eps2({0})));
  ProbeRng rng(3);
  for (int c = 0; c < 10; ++c) {
    const Graded d = rng.graded(Kind::Vector, 2, 2, 2, 2);
    const Graded w = rng.graded(Kind::Covector, 2, 2, 2, 2);
    REQUIRE(interior(s1, d, w).value() == pair(s1.dual_twist().apply(w), s1.twist().apply(d)));
  }
}

TEST_CASE("Lie derivative on forms satisfies the pairing identity") {
  for (const HomAlgebroid& a : {fx::s1(), fx::s2()}) {
    const CartanContext ctx(a);
    const int r = ctx.rank();
    ProbeRng rng(31);
    std::vector<Graded> xs, alphas;
    for (int i = 0; i < r; ++i) {
      xs.push_back(ctx.frame(i));
      alphas.push_back(ctx.coframe(i));
    }
    for (int c = 0; c < 4; ++c) {
      xs.push_back(rng.graded(ctx.vector_kind(), 2, r, 1, 2));
      alphas.push_back(rng.graded(ctx.form_kind(), 2, r, 1, 2));
    }
    for (const auto& x : xs) {
      for (const auto& alpha : alphas) {
        const Graded lx = lie_derivative_form(ctx, x, alpha);
        for (int j = 0; j < r; ++j) {
          const Graded y = ctx.frame(j) * rng.poly(2, 1);
          const Graded py = ctx.twist_inverse().apply(y);
          const Poly rhs = a.act(ctx.twist().apply(x).vector(), pair(alpha, py)) -
                           pair(ctx.dual_twist().apply(alpha), schouten(ctx, x, py));
          REQUIRE(pair(lx, y) == rhs);
        }
      }
    }
  }
}

TEST_CASE("Lie derivative on functions is the twisted anchor action") {
  const CartanContext s1(fx::s1());
  const Graded x = e2({0}, P("y")) + e2({1}, P("x"));
  const Poly f = P("x^2*y");
  CHECK(lie_derivative_form(s1, x, fn(s1, f)).value() == s1.algebroid().act(s1.twist().apply(x.vector()), f));
  const CartanContext s0(fx::s0());
  CHECK(lie_derivative_form(s0, Graded::basis(Kind::Vector, 1, {0}, P("x")),
                            Graded::basis(Kind::Covector, 1, {0}, P("y")))
            .is_zero());
}

TEST_CASE("Lie derivative matches the classical Cartan formula at the identity") {
  const CartanContext s3(fx::s3());
  ProbeRng rng(5);
  for (int c = 0; c < 10; ++c) {
    const Graded x = rng.graded(Kind::Vector, 3, 3, 1, 2);
    const Graded w = rng.graded(Kind::Covector, 3, 3, rng.integer(1, 2), 2);
    const Graded classical = contract(x, oracle::de_rham(w)) + oracle::de_rham(contract(x, w));
    REQUIRE(lie_derivative_form(s3, x, w) == classical);
  }
}

TEST_CASE("Lie derivative on multivectors") {
  const CartanContext s1(fx::s1());
  const Graded x = e2({0}, P("x*y")) + e2({1});
  CHECK(lie_derivative_multivector(s1, x, x).is_zero());
  CHECK(lie_derivative_multivector(s1, e2({0}), e2({1}, P("x"))) == e2({1}));
  const CartanContext s0(fx::s0());
  CHECK(lie_derivative_multivector(s0, Graded::basis(Kind::Vector, 1, {0}, P("x")),
                                   Graded::basis(Kind::Vector, 1, {0}, P("y")))
            .is_zero());
}

TEST_CASE("Lie derivative of endomorphisms") {
  const CartanContext s1(fx::s1());
  const int r = 2;
  auto apply = [&](const Tensor& t, const PolyVector& y) { return PolyVector(t.endomorphism().matrix * y); };
  PolyMatrix nm(2, 2);
  nm << P("x"), Poly(1), Poly(0), P("y^2");
  const EndoMap n{nm, Kind::Vector};
  PolyMatrix n2m(2, 2);
  n2m << Poly(1), P("y"), P("x"), Poly(2);
  const EndoMap n2{n2m, Kind::Vector};
  const std::vector<Graded> xs{e2({0}), e2({1}, P("x")), e2({0}, P("y")) + e2({1})};
  for (const auto& x : xs) {
    const Tensor lid = lie_derivative_tensor(s1, x, Tensor::from_endomorphism(EndoMap::identity(r)));
    CHECK(lid.is_zero());
    for (const EndoMap& m : {n, n2}) {
      const Tensor ln = lie_derivative_tensor(s1, x, Tensor::from_endomorphism(m));
      for (int j = 0; j < r; ++j) {
        const PolyVector y = s1.algebroid().frame(j) * P("x+y");
        const PolyVector py = s1.twist_inverse().apply(y);
        const PolyVector expect =
            schouten(s1, x, Graded::section(Kind::Vector, PolyVector(m.matrix * py))).vector() -
            twist_endomorphism(s1.twist(), m).matrix * schouten(s1, x, Graded::section(Kind::Vector, py)).vector();
        REQUIRE(apply(ln, y) == expect);
      }
    }
    const EndoMap comp = n * n2;
    const EndoMap lhs = lie_derivative_tensor(s1, x, Tensor::from_endomorphism(comp)).endomorphism();
    const EndoMap ln = lie_derivative_tensor(s1, x, Tensor::from_endomorphism(n)).endomorphism();
    const EndoMap ln2 = lie_derivative_tensor(s1, x, Tensor::from_endomorphism(n2)).endomorphism();
    const PolyMatrix rhs = ln.matrix * twist_endomorphism(s1.twist(), n2).matrix +
                           twist_endomorphism(s1.twist(), n).matrix * ln2.matrix;
    CHECK(equal(lhs.matrix, rhs));
  }
  const CartanContext s0(fx::s0());
  const Tensor t = Tensor::product({vec({P("x")})}, {vec({P("y")})}, Kind::Vector);
  CHECK(lie_derivative_tensor(s0, Graded::basis(Kind::Vector, 1, {0}), t).is_zero());
}

TEST_CASE("Schouten bracket basics") {
  const CartanContext s1(fx::s1());
  const Graded f = Graded::scalar(Kind::Vector, 2, P("x"));
  const Graded g = Graded::scalar(Kind::Vector, 2, P("y^2"));
  CHECK(schouten(s1, f, g).is_zero());
  CHECK(schouten(s1, e2({0}), f) == Graded::scalar(Kind::Vector, 2, Poly(Rational(1, 2))));
  const Graded pi = e2({0, 1});
  CHECK(schouten(s1, pi, pi).is_zero());
}

TEST_CASE("Schouten bracket is graded antisymmetric") {
  for (const HomAlgebroid& a : {fx::s1(), fx::s2()}) {
    const CartanContext ctx(a);
    ProbeRng rng(77);
    for (int c = 0; c < 20; ++c) {
      const int k = rng.integer(0, 3), l = rng.integer(0, 3);
      if (k == 0 && l == 0) continue;
      const Graded d1 = rng.graded(ctx.vector_kind(), 2, ctx.rank(), k, 2);
      const Graded d2 = rng.graded(ctx.vector_kind(), 2, ctx.rank(), l, 2);
      const Graded ab = schouten(ctx, d1, d2);
      const Graded ba = schouten(ctx, d2, d1);
      REQUIRE(((k - 1) * (l - 1) % 2 == 0 ? ab == -ba : ab == ba));
    }
  }
}

TEST_CASE("Schouten bracket matches the classical bracket at the identity") {
  const CartanContext s3(fx::s3());
  ProbeRng rng(19);
  for (int c = 0; c < 40; ++c) {
    const int k = rng.integer(0, 3), l = rng.integer(0, 3);
    if (k == 0 && l == 0) continue;
    const Graded d1 = rng.graded(Kind::Vector, 3, 3, k, 2);
    const Graded d2 = rng.graded(Kind::Vector, 3, 3, l, 2);
    REQUIRE(schouten(s3, d1, d2) == oracle::schouten(d1, d2));
  }
}

TEST_CASE("Schouten wedge rule with twists") {
  const CartanContext s2(fx::s2());
  ProbeRng rng(23);
  for (int c = 0; c < 10; ++c) {
    const int k = rng.integer(1, 2);
    const Graded d1 = rng.graded(Kind::Vector, 2, 3, k, 2);
    const Graded d2 = rng.graded(Kind::Vector, 2, 3, 1, 2);
    const Graded d3 = rng.graded(Kind::Vector, 2, 3, 1, 2);
    const int l = 1;
    Graded rhs = wedge(schouten(s2, d1, d2), s2.twist().apply(d3));
    const Graded second = wedge(s2.twist().apply(d2), schouten(s2, d1, d3));
    if (((k + 1) * l) % 2 == 0) rhs += second; else rhs -= second;
    REQUIRE(schouten(s2, d1, wedge(d2, d3)) == rhs);
  }
}
