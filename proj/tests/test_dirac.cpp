#include "doctest.h"
#include "fixtures_test.hpp"
#include "homlie/dirac.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/poisson.hpp"
#include "search_oracle.hpp"

using namespace testing_support;
namespace fx = homlie::fixtures;

namespace {

PolyVector unit(int n, int i, const Poly& f = Poly(1)) {
  PolyVector v = PolyVector::Zero(n);
  v(i) = f;
  return v;
}

BialgebroidPair trivial_pair(const HomAlgebroid& a) { return BialgebroidPair(a, trivial_dual(a)); }

Subbundle factor(const CourantDouble& e, bool dual_part) {
  std::vector<PolyVector> gens;
  for (int i = 0; i < e.half_rank(); ++i) gens.push_back(e.frame(i + (dual_part ? e.half_rank() : 0)));
  return Subbundle(e, gens);
}

Graded e12(int r = 2, const Poly& f = Poly(1)) { return Graded::basis(Kind::Vector, r, {0, 1}, f); }

Graded non_poisson_s3() {
  const auto pi = oracle::first_non_poisson_bivector();
  REQUIRE(pi.has_value());
  return *pi;
}

}  // namespace

TEST_CASE("span membership") {
  const CourantDouble e = CourantDouble::of_pair(trivial_pair(fx::s1()));
  CHECK_THROWS_AS(Subbundle(e, {e.frame(0), e.frame(0)}), std::invalid_argument);
  CHECK_THROWS_AS(Subbundle(e, {e.frame(0)}), std::invalid_argument);

  const Subbundle l(e, {unit(4, 0, P("x")), e.frame(1)});
  CHECK(l.pivot_minor() == P("x"));
  const SpanSolution in = l.solve(unit(4, 0, P("x^2*y")));
  REQUIRE(in.status == Membership::Member);
  CHECK(equal(in.coefficients, vec({P("x*y"), Poly(0)})));
  CHECK(l.solve(e.frame(0)).status == Membership::NotPolynomialMember);
  const SpanSolution out = l.solve(e.frame(2));
  CHECK(out.status == Membership::NotMember);
  CHECK_FALSE(is_zero(out.residual));

  // phi_E(x e1) = (1/2) 2x e1 = x e1 is in the span, phi_E(e2) = 2 e2 too.
  CHECK(is_phi_invariant(l).passed());
  // The span of (e1 + x e2, eps1) is not invariant: phi_E gives (1/2) e1 + x e2.
  const Subbundle bent(e, {PolyVector(e.frame(0) + e.frame(1) * P("x")), e.frame(2)});
  const Report r = is_phi_invariant(bent);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure()->witness);
  CHECK(r.first_failure()->witness->inputs.front().first == "g");
}

TEST_CASE("restricted solver limitation") {
  const CourantDouble e = CourantDouble::of_pair(trivial_pair(fx::s1()));
  // phi_E(y eps2) = (1/2)(y/2) eps2 and phi_E(x e1) = x e1 stay in the span.
  const Subbundle l(e, {unit(4, 0, P("x")), unit(4, 3, P("y"))});
  CHECK(is_phi_invariant(l).passed());
  const Subbundle m(e, {unit(4, 0, P("x+1")), e.frame(3)});
  // phi_E((x+1) e1) = (x + 1/2) e1, coefficient (x + 1/2)/(x + 1).
  const Report r = is_phi_invariant(m);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->note == "fails (restricted solver)");
  CHECK(r.first_failure()->witness->residual.rfind("not a polynomial-frame member", 0) == 0);
}

TEST_CASE("factors") {
  const CourantDouble e = CourantDouble::of_pair(trivial_pair(fx::s1()));
  const ProbeSet probes = make_probes(2);
  for (bool dual_part : {false, true}) {
    const Subbundle l = factor(e, dual_part);
    CHECK(is_isotropic(l).passed());
    CHECK(is_phi_invariant(l).passed());
    CHECK(is_integrable(l, probes).passed());
    CHECK(is_hom_dirac(l, probes).holds("restricted twist invertible"));
  }
  const HomAlgebroid a = dirac_to_algebroid(factor(e, false), probes);
  const HomAlgebroid s1 = fx::s1();
  CHECK(equal(a.twist().matrix(), s1.twist().matrix()));
  CHECK(equal(a.anchor(), s1.anchor()));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(equal(a.structure()[i][j], s1.structure()[i][j]));
  }
  CHECK(check_axioms(a, probes).passed());

  const HomAlgebroid z = dirac_to_algebroid(factor(e, true), probes);
  CHECK(is_zero(z.anchor()));
  CHECK(is_zero(z.structure()[0][1]));
  CHECK(equal(z.twist().matrix(), CartanContext(s1).dual_twist().matrix()));
  CHECK(check_axioms(z, probes).passed());
}

TEST_CASE("graphs") {
  const ProbeSet probes = make_probes(2);
  const BialgebroidPair p = trivial_pair(fx::s1());
  const CourantDouble e = CourantDouble::of_pair(p);

  const Subbundle zero = graph(e, PolyMatrix::Zero(2, 2));
  CHECK(equal(zero.generators()[0], e.frame(2)));
  CHECK(is_hom_dirac(zero, probes).passed());

  const Subbundle g = graph(e, sharp_matrix(e12()));
  CHECK(equal(g.generators()[0], vec({0, 1, 1, 0})));
  CHECK(equal(g.generators()[1], vec({-1, 0, 0, 1})));
  CHECK(is_isotropic(g).passed());
  CHECK(is_phi_invariant(g).passed());
  CHECK(is_integrable(g, probes).passed());
  const HomAlgebroid ga = dirac_to_algebroid(g, probes);
  CHECK(check_axioms(ga, probes).passed());
  // phi_E on (e2 + eps1): (2 e2 + 2 eps1), so the restricted twist is phi_A^dagger.
  CHECK(equal(ga.twist().matrix(), CartanContext(fx::s1()).dual_twist().matrix()));

  const Subbundle gx = graph(e, sharp_matrix(e12(2, P("x"))));
  CHECK(is_isotropic(gx).passed());
  CHECK_FALSE(is_phi_invariant(gx).passed());
  CHECK_THROWS_AS(dirac_to_algebroid(gx, probes), PreconditionError);

  const Subbundle id = graph(e, PolyMatrix::Identity(2, 2));
  const Report ri = is_isotropic(id);
  CHECK_FALSE(ri.passed());
  REQUIRE(ri.first_failure()->witness);
  // <<e1 + eps1, e1 + eps1>> = 1.
  CHECK(ri.first_failure()->witness->residual == "1");
}

TEST_CASE("Maurer-Cartan defect") {
  const BialgebroidPair p = trivial_pair(fx::s1());
  CHECK(maurer_cartan_defect(p, e12()).is_zero());
  CHECK(maurer_cartan_defect(p, Graded(Kind::Vector, 2, 2)).is_zero());
  CHECK_THROWS_AS(maurer_cartan_defect(p, e12(2, P("x"))), PreconditionError);

  const HomAlgebroid s3 = fx::s3();
  const BialgebroidPair q = trivial_pair(s3);
  const Graded pi = non_poisson_s3();
  const Graded defect = maurer_cartan_defect(q, pi);
  CHECK_FALSE(defect.is_zero());
  CHECK(defect == oracle::schouten(pi, pi) * Poly(Rational(1, 2)));
  CHECK(defect == schouten(CartanContext(s3), pi, pi) * Poly(Rational(1, 2)));

  const ProbeSet probes = make_probes(3, 1);
  const Subbundle l = graph(CourantDouble::of_pair(q), sharp_matrix(pi));
  CHECK(is_isotropic(l).passed());
  CHECK(is_phi_invariant(l).passed());
  const Report r = is_integrable(l, probes);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure()->witness);
  CHECK(r.first_failure()->witness->inputs.size() == 2);

  // Poisson dual: d_{A*} pi = [pi, pi] = 0 for pi = e1^e2.
  const HomAlgebroid s1 = fx::s1();
  const BialgebroidPair pp(s1, dual_algebroid(CartanContext(s1), e12()));
  CHECK(maurer_cartan_defect(pp, e12()).is_zero());
}

TEST_CASE("graph theorem") {
  const ProbeSet probes = make_probes(2);
  const HomAlgebroid s1 = fx::s1();
  const BialgebroidPair p = trivial_pair(s1);

  const Report yes = graph_theorem_check(p, sharp_matrix(e12()), probes);
  CHECK(yes.passed());
  CHECK(yes.holds("graph is Hom-Dirac"));
  CHECK(yes.holds("H = pi#, pi invariant, Maurer-Cartan"));

  const Report zero = graph_theorem_check(p, PolyMatrix::Zero(2, 2), probes);
  CHECK(zero.passed());
  CHECK(zero.holds("graph is Hom-Dirac"));

  for (const PolyMatrix& h : {PolyMatrix(PolyMatrix::Identity(2, 2)), sharp_matrix(e12(2, P("x"))),
                              sharp_matrix(e12(2, P("y")))}) {
    const Report r = graph_theorem_check(p, h, probes);
    CHECK(r.passed());
    CHECK_FALSE(r.holds("graph is Hom-Dirac"));
    CHECK(r.holds("isotropy matches skew-symmetry"));
  }

  const HomAlgebroid s3 = fx::s3();
  const Report no = graph_theorem_check(trivial_pair(s3), sharp_matrix(non_poisson_s3()), make_probes(3, 1));
  CHECK(no.passed());
  CHECK_FALSE(no.holds("graph is Hom-Dirac"));
  CHECK_FALSE(no.holds("Maurer-Cartan equation"));
  CHECK(no.holds("H skew"));
  CHECK(no.holds("bivector phiA-invariant"));

  const Report z = graph_theorem_check(trivial_pair(s3), sharp_matrix(e12(3, P("z", 3))), make_probes(3, 1));
  CHECK(z.passed());
  CHECK(z.holds("graph is Hom-Dirac"));

  const BialgebroidPair pp(s1, dual_algebroid(CartanContext(s1), e12()));
  for (const PolyMatrix& h : {PolyMatrix(PolyMatrix::Zero(2, 2)), sharp_matrix(e12()),
                              sharp_matrix(e12(2, Poly(-1)))}) {
    CHECK(graph_theorem_check(pp, h, probes).passed());
  }
}
