#include "homlie/poisson.hpp"

#include <stdexcept>

#include "homlie/classical.hpp"
#include "homlie/courant.hpp"

namespace homlie {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

void require_bivector(const CartanContext& ctx, const Graded& pi) {
  if (pi.kind() != ctx.vector_kind() || pi.rank() != ctx.rank() || pi.degree() != 2) {
    throw std::invalid_argument("expected a bivector of the algebroid");
  }
}

CheckResult invariance_check(const CartanContext& ctx, const Graded& pi) {
  CheckBuilder b("phiA-invariance");
  const Graded diff = ctx.twist().apply(pi) - pi;
  const HomAlgebroid& a = ctx.algebroid();
  b.record(diff.is_zero(), [&] { return Inputs{{"pi", a.describe(pi)}}; }, [&] { return a.describe(diff); });
  return b.done();
}

}  // namespace

PolyMatrix sharp_matrix(const Graded& pi) {
  if (pi.degree() != 2) throw std::invalid_argument("sharp: expects a bivector");
  const int r = pi.rank();
  PolyMatrix h = PolyMatrix::Zero(r, r);
  for (const auto& [s, f] : pi.terms()) {
    const std::vector<int> ij = indices_of(s);
    h(ij[1], ij[0]) += f;
    h(ij[0], ij[1]) -= f;
  }
  return h;
}

Graded bivector_from_sharp(Kind kind, const PolyMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("sharp matrix must be square");
  if (!is_zero(PolyMatrix(h + h.transpose()))) throw std::invalid_argument("sharp matrix is not skew");
  const int r = static_cast<int>(h.rows());
  Graded pi(kind, r, 2);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) pi.add(bit(i) | bit(j), h(j, i));
  }
  return pi;
}

Graded sharp(const CartanContext& ctx, const Graded& pi, const Graded& alpha) {
  require_bivector(ctx, pi);
  if (alpha.kind() != ctx.form_kind() || alpha.degree() != 1) throw std::invalid_argument("sharp: expects a coform");
  return Graded::section(ctx.vector_kind(), PolyVector(sharp_matrix(pi) * alpha.vector()));
}

Report is_hom_poisson(const CartanContext& ctx, const Graded& pi) {
  require_bivector(ctx, pi);
  const HomAlgebroid& a = ctx.algebroid();
  Report report("Hom-Poisson");
  report.add(invariance_check(ctx, pi));
  CheckBuilder b("Schouten square vanishes");
  const Graded square = schouten(ctx, pi, pi);
  b.record(square.is_zero(), [&] { return Inputs{{"pi", a.describe(pi)}}; }, [&] { return a.describe(square); });
  report.add(b.done());
  return report;
}

Report sharp_commutes(const CartanContext& ctx, const Graded& pi, const ProbeSet& probes) {
  require_bivector(ctx, pi);
  const HomAlgebroid& a = ctx.algebroid();
  const int r = ctx.rank();
  std::vector<Graded> coforms;
  for (const PolyVector& v : probe_sections(r, probes)) coforms.push_back(Graded::section(ctx.form_kind(), v));
  ProbeRng rng(probes.seed);
  for (int c = 0; c < probes.random_cases; ++c) coforms.push_back(rng.graded(ctx.form_kind(), a.dimension(), r, 1, 2));

  Report report("sharp commutation");
  CheckBuilder b("sharp commutes with twists");
  for (const auto& alpha : coforms) {
    const Graded diff =
        ctx.twist().apply(sharp(ctx, pi, alpha)) - sharp(ctx, pi, ctx.dual_twist().apply(alpha));
    b.record(diff.is_zero(), [&] { return Inputs{{"alpha", a.describe(alpha)}}; }, [&] { return a.describe(diff); });
  }
  const CheckResult commutes = b.done();
  report.add(commutes);
  const CheckResult inv = invariance_check(ctx, pi);
  CheckBuilder eq("commutation matches invariance");
  if (commutes.holds == inv.holds) {
    eq.pass();
  } else {
    eq.fail(Witness{{{"pi", a.describe(pi)}},
                    std::string("invariance ") + (inv.holds ? "holds" : "fails") + ", commutation " +
                        (commutes.holds ? "holds" : "fails")});
  }
  report.add(eq.done());
  return report;
}

Graded bracket_sharp(const CartanContext& ctx, const PolyMatrix& h, const Graded& xi, const Graded& eta) {
  if (xi.kind() != ctx.form_kind() || eta.kind() != ctx.form_kind() || xi.degree() != 1 || eta.degree() != 1) {
    throw std::invalid_argument("bracket: expects coforms");
  }
  const Graded sx = Graded::section(ctx.vector_kind(), PolyVector(h * xi.vector()));
  const Graded se = Graded::section(ctx.vector_kind(), PolyVector(h * eta.vector()));
  return lie_derivative_form(ctx, sx, eta) - lie_derivative_form(ctx, se, xi) -
         differential(ctx, Graded::scalar(ctx.form_kind(), ctx.rank(), pair(eta, sx)));
}

Graded bracket_pi(const CartanContext& ctx, const Graded& pi, const Graded& xi, const Graded& eta) {
  require_bivector(ctx, pi);
  return bracket_sharp(ctx, sharp_matrix(pi), xi, eta);
}

HomAlgebroid induced_dual(const CartanContext& ctx, const Graded& pi) {
  require_bivector(ctx, pi);
  const HomAlgebroid& a = ctx.algebroid();
  const int r = ctx.rank();
  StructureTable c = zero_structure(r);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const PolyVector v = bracket_pi(ctx, pi, ctx.coframe(i), ctx.coframe(j)).vector();
      c[i][j] = v;
      c[j][i] = -v;
    }
  }
  return HomAlgebroid(ctx.dual_twist(), PolyMatrix(a.anchor() * sharp_matrix(pi)), std::move(c), a.vars());
}

HomAlgebroid dual_algebroid(const CartanContext& ctx, const Graded& pi) {
  const Report rep = is_hom_poisson(ctx, pi);
  if (!rep.passed()) throw PreconditionError("not a Hom-Poisson structure: " + rep.first_failure()->name, rep);
  return induced_dual(ctx, pi);
}

Graded d_pi(const CartanContext& ctx, const Graded& pi, const Graded& d) {
  require_bivector(ctx, pi);
  Report pre("d_pi precondition");
  pre.add(invariance_check(ctx, pi));
  if (!pre.passed()) throw PreconditionError("bivector is not phiA-invariant", pre);
  const CartanContext star(induced_dual(ctx, pi));
  const Graded value = differential(star, d);
  const Graded expect = schouten(ctx, pi, d);
  if (!(value == expect)) {
    const HomAlgebroid& a = ctx.algebroid();
    throw IdentityViolation("d_pi differs from [pi, .]",
                            Witness{{{"pi", a.describe(pi)}, {"D", a.describe(d)}}, a.describe(value - expect)});
  }
  return value;
}

PiPiSides pi_pi_sides(const CartanContext& ctx, const Graded& pi, const Graded& alpha, const Graded& beta) {
  const Graded square = schouten(ctx, pi, pi);
  const Graded t = wedge(ctx.dual_twist().apply(alpha), ctx.dual_twist().apply(beta));
  PiPiSides out;
  out.lhs = contract(t, square) * Poly(Rational(1, 2));
  out.rhs = schouten(ctx, sharp(ctx, pi, alpha), sharp(ctx, pi, beta)) -
            sharp(ctx, pi, bracket_pi(ctx, pi, alpha, beta));
  return out;
}

Report pi_pi_identity(const CartanContext& ctx, const Graded& pi, const Graded& alpha, const Graded& beta) {
  Report report("pi-pi identity");
  const CheckResult inv = invariance_check(ctx, pi);
  if (!inv.holds) {
    report.add(inv);
    throw PreconditionError("bivector is not phiA-invariant", report);
  }
  const HomAlgebroid& a = ctx.algebroid();
  const PiPiSides s = pi_pi_sides(ctx, pi, alpha, beta);
  CheckBuilder b("pi-pi identity");
  const Graded diff = s.lhs - s.rhs;
  b.record(diff.is_zero(),
           [&] { return Inputs{{"pi", a.describe(pi)}, {"alpha", a.describe(alpha)}, {"beta", a.describe(beta)}}; },
           [&] { return a.describe(diff); });
  report.add(b.done());
  return report;
}

PoissonLift classical_poisson_lift(const AffineTwist& phi, const Graded& pi_classical) {
  if (pi_classical.kind() != Kind::Vector || pi_classical.degree() != 2 || pi_classical.rank() != phi.dimension()) {
    throw std::invalid_argument("classical lift: expects a bivector field on the base");
  }
  PoissonLift out{make_pullback_tangent(phi), map_coefficients(pi_classical, [&](const Poly& f) { return phi.pullback(f); }),
                  false, false, Report()};
  out.classical_square_zero = classical::schouten(pi_classical, pi_classical).is_zero();
  out.classical_invariant = classical::pushforward(phi, pi_classical) == pi_classical;
  out.hom_side = is_hom_poisson(CartanContext(out.algebroid), out.lifted);
  return out;
}

Report check_bialgebroid_pair(const CartanContext& ctx, const Graded& pi, const ProbeSet& probes) {
  return check_bialgebroid(BialgebroidPair(ctx.algebroid(), dual_algebroid(ctx, pi)), probes);
}

}  // namespace homlie
