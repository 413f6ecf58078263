#include "homlie/courant.hpp"

#include <array>
#include <stdexcept>

namespace homlie {

BialgebroidPair::BialgebroidPair(HomAlgebroid a, HomAlgebroid astar) : a_(std::move(a)), astar_(std::move(astar)) {
  const HomAlgebroid& x = a_.algebroid();
  const HomAlgebroid& y = astar_.algebroid();
  if (x.rank() != y.rank() || x.section_kind() == y.section_kind()) {
    throw std::invalid_argument("bialgebroid pair: frames are not dual");
  }
  if (!(x.base() == y.base())) throw std::invalid_argument("bialgebroid pair: base maps differ");
  if (!(x.twist().dual() == y.twist())) throw std::invalid_argument("bialgebroid pair: twists are not daggers");
}

HomAlgebroid trivial_dual(const HomAlgebroid& a) {
  return HomAlgebroid(a.twist().dual(), PolyMatrix::Zero(a.dimension(), a.rank()), zero_structure(a.rank()), a.vars());
}

namespace {

CheckResult bialgebroid_identity(const CartanContext& a, const CartanContext& astar, const ProbeSet& probes,
                                 const std::string& name) {
  const HomAlgebroid& alg = a.algebroid();
  const int r = a.rank();
  const std::vector<PolyVector> singles = probe_sections(r, probes);
  std::vector<std::pair<PolyVector, PolyVector>> pairs;
  for (const auto& x : singles) {
    for (int j = 0; j < r; ++j) {
      pairs.emplace_back(x, alg.frame(j));
      pairs.emplace_back(alg.frame(j), x);
    }
  }
  ProbeRng rng(probes.seed);
  for (int c = 0; c < probes.random_cases / 2; ++c) {
    pairs.emplace_back(rng.section(alg.dimension(), r, 2), rng.section(alg.dimension(), r, 2));
  }
  CheckBuilder b(name);
  for (const auto& [xv, yv] : pairs) {
    const Graded x = alg.section(xv);
    const Graded y = alg.section(yv);
    const Graded lhs = differential(astar, alg.section(alg.bracket(xv, yv)));
    const Graded rhs = schouten(a, differential(astar, x), a.twist().apply(y)) +
                       schouten(a, a.twist().apply(x), differential(astar, y));
    const Graded diff = lhs - rhs;
    b.record(diff.is_zero(),
             [&] {
               return std::vector<std::pair<std::string, std::string>>{{"X", alg.describe(x)}, {"Y", alg.describe(y)}};
             },
             [&] { return alg.describe(diff); });
  }
  return b.done();
}

}  // namespace

Report check_bialgebroid(const BialgebroidPair& p, const ProbeSet& probes) {
  Report report("Hom-Lie bialgebroid");
  report.add(bialgebroid_identity(p.a(), p.astar(), probes, "bialgebroid identity"));
  report.add(bialgebroid_identity(p.astar(), p.a(), probes, "dual bialgebroid identity"));
  return report;
}

}  // namespace homlie

namespace homlie {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

PolyVector head(const PolyVector& u, int r) { return u.head(r); }
PolyVector tail(const PolyVector& u, int r) { return u.tail(r); }

PolyVector join(const PolyVector& a, const PolyVector& b) {
  PolyVector out(a.size() + b.size());
  out << a, b;
  return out;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m = PolyMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

PolyMatrix standard_pairing(int r) {
  PolyMatrix g = PolyMatrix::Zero(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    g(i, r + i) = Poly(Rational(1, 2));
    g(r + i, i) = Poly(Rational(1, 2));
  }
  return g;
}

Graded as_graded(Kind kind, const PolyVector& v) { return Graded::section(kind, v); }

}  // namespace

CourantDouble::CourantDouble(SectionTwist twist, PolyMatrix pairing, PolyMatrix anchor, std::vector<std::string> vars)
    : twist_(std::move(twist)), pairing_(std::move(pairing)), anchor_(std::move(anchor)), vars_(std::move(vars)) {
  const int n = rank();
  if (n % 2 != 0 || pairing_.cols() != n || twist_.rank() != n) {
    throw std::invalid_argument("Courant instance: frame sizes disagree");
  }
  if (anchor_.rows() != dimension() || anchor_.cols() != n) throw std::invalid_argument("Courant instance: anchor shape");
  if (!equal(pairing_, PolyMatrix(pairing_.transpose()))) throw std::invalid_argument("Courant instance: pairing not symmetric");
  pairing_inverse_ = inverse_unimodular(pairing_);
  if (vars_.empty()) vars_ = default_variable_names(dimension());
}

CourantDouble::CourantDouble(SectionTwist twist, PolyMatrix pairing, PolyMatrix anchor, FrameTable table,
                             std::vector<std::string> vars)
    : CourantDouble(std::move(twist), std::move(pairing), std::move(anchor), std::move(vars)) {
  const int n = rank();
  if (static_cast<int>(table.size()) != n) throw std::invalid_argument("Courant instance: product table shape");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Courant instance: product table shape");
  }
  table_ = std::move(table);
}

CourantDouble CourantDouble::of_pair(const BialgebroidPair& p) {
  const CartanContext& a = p.a();
  const CartanContext& s = p.astar();
  const int r = a.rank();
  const HomAlgebroid& alg = a.algebroid();
  const HomAlgebroid& star = s.algebroid();
  PolyMatrix anchor(alg.dimension(), 2 * r);
  anchor << alg.anchor(), star.anchor();
  SectionTwist twist(alg.base(), block_diagonal(alg.twist().matrix(), a.dual_twist().matrix()));
  CourantDouble e(std::move(twist), standard_pairing(r), std::move(anchor), alg.vars());
  e.pair_.emplace(p);
  return e;
}

PolyVector CourantDouble::product(const PolyVector& u, const PolyVector& v) const {
  const int m = rank();
  if (pair_) {
    const CartanContext& ca = pair_->a();
    const CartanContext& cs = pair_->astar();
    const int r = half_rank();
    const Kind vk = ca.vector_kind();
    const Kind fk = ca.form_kind();
    const Graded x = as_graded(vk, head(u, r));
    const Graded xi = as_graded(fk, tail(u, r));
    const Graded y = as_graded(vk, head(v, r));
    const Graded eta = as_graded(fk, tail(v, r));
    const Graded left = bracket(ca.algebroid(), x, y) + lie_derivative_form(cs, xi, y) -
                        interior(cs, eta, differential(cs, ca.twist_inverse().apply(x)));
    const Graded right = bracket(cs.algebroid(), xi, eta) + lie_derivative_form(ca, x, eta) -
                         interior(ca, y, differential(ca, ca.dual_twist_inverse().apply(xi)));
    return join(left.vector(), right.vector());
  }
  // (f E_i).(g E_j) = phi^*f E_i.(g E_j) - rho(phi(g E_j))(f) phi(E_i) + 2 D f phi^*<<E_i, g E_j>>,
  // E_i.(g E_j) = phi^*g E_i.E_j + rho(phi(E_i))(g) phi(E_j).
  PolyVector out = PolyVector::Zero(m);
  for (int i = 0; i < m; ++i) {
    if (u(i).is_zero()) continue;
    const Poly& f = u(i);
    const Poly pf = base().pullback(f);
    const PolyVector ti = apply_twist(frame(i));
    const PolyVector df = f.is_constant() ? PolyVector(PolyVector::Zero(m)) : script_D(*this, f);
    for (int j = 0; j < m; ++j) {
      if (v(j).is_zero()) continue;
      const Poly& g = v(j);
      const PolyVector right = table_[i][j] * base().pullback(g) + apply_twist(frame(j)) * act(ti, g);
      out += right * pf;
      if (!f.is_constant()) {
        out -= ti * act(apply_twist(PolyVector(frame(j) * g)), f);
        out += df * base().pullback(pairing_(i, j) * g * Poly(2));
      }
    }
  }
  return out;
}

PolyVector CourantDouble::frame(int i) const {
  PolyVector v = PolyVector::Zero(rank());
  v(i) = Poly(1);
  return v;
}

Poly CourantDouble::pairing(const PolyVector& u, const PolyVector& v) const { return (u.transpose() * pairing_ * v)(0, 0); }

CourantDouble::FrameTable CourantDouble::frame_table() const {
  const int n = rank();
  FrameTable t(n, std::vector<PolyVector>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = product(frame(i), frame(j));
  }
  return t;
}

std::string CourantDouble::describe(const PolyVector& u) const {
  const int r = half_rank();
  const Graded x = as_graded(Kind::Vector, head(u, r));
  const Graded xi = as_graded(Kind::Covector, tail(u, r));
  if (x.is_zero() && xi.is_zero()) return "0";
  if (xi.is_zero()) return to_string(x, vars_);
  if (x.is_zero()) return to_string(xi, vars_);
  return to_string(x, vars_) + " + " + to_string(xi, vars_);
}

std::string CourantDouble::describe(const Poly& f) const { return to_string(f, vars_); }

CourantDouble courant_double(const BialgebroidPair& p, const ProbeSet& probes) {
  const Report rep = check_bialgebroid(p, probes);
  if (!rep.passed()) throw PreconditionError("not a Hom-Lie bialgebroid: " + rep.first_failure()->name, rep);
  return CourantDouble::of_pair(p);
}

PolyVector courant_bracket(const CourantDouble& e, const PolyVector& u, const PolyVector& v) {
  return PolyVector(e.product(u, v) - e.product(v, u)) * Poly(Rational(1, 2));
}

PolyVector courant_bracket_closed(const CourantDouble& e, const PolyVector& u, const PolyVector& v) {
  if (!e.pair()) throw std::invalid_argument("closed bracket: instance is not a double");
  const CartanContext& ca = e.pair()->a();
  const CartanContext& cs = e.pair()->astar();
  const int r = ca.rank();
  const Kind vk = ca.vector_kind();
  const Kind fk = ca.form_kind();
  const Graded x = as_graded(vk, head(u, r));
  const Graded xi = as_graded(fk, tail(u, r));
  const Graded y = as_graded(vk, head(v, r));
  const Graded eta = as_graded(fk, tail(v, r));
  const Poly half_gap = (pair(eta, x) - pair(xi, y)) * Rational(1, 2);
  const Graded left = bracket(ca.algebroid(), x, y) + lie_derivative_form(cs, xi, y) - lie_derivative_form(cs, eta, x) +
                      differential(cs, Graded::scalar(vk, r, half_gap));
  const Graded right = bracket(cs.algebroid(), xi, eta) + lie_derivative_form(ca, x, eta) -
                       lie_derivative_form(ca, y, xi) - differential(ca, Graded::scalar(fk, r, half_gap));
  return join(left.vector(), right.vector());
}

PolyVector script_D(const CourantDouble& e, const Poly& f) {
  const int n = e.rank();
  PolyVector b(n);
  for (int k = 0; k < n; ++k) b(k) = e.act(e.frame(k), f) * Rational(1, 2);
  // <<w, E_k>> = (G^T w)_k and G is symmetric.
  return e.pairing_inverse() * b;
}

namespace {

Jacobiator jacobiator_parts(const CourantDouble& e, const PolyVector& e1, const PolyVector& e2, const PolyVector& e3) {
  const std::array<const PolyVector*, 3> s{&e1, &e2, &e3};
  Jacobiator out{PolyVector::Zero(e.rank()), Poly()};
  for (int c = 0; c < 3; ++c) {
    const PolyVector& a = *s[c];
    const PolyVector& b = *s[(c + 1) % 3];
    const PolyVector& z = *s[(c + 2) % 3];
    const PolyVector ab = courant_bracket(e, a, b);
    const PolyVector tz = e.apply_twist(z);
    out.cyclic_sum += courant_bracket(e, ab, tz);
    out.t += e.pairing(ab, tz);
  }
  out.t *= Rational(1, 3);
  return out;
}

}  // namespace

Jacobiator jacobiator(const CourantDouble& e, const PolyVector& e1, const PolyVector& e2, const PolyVector& e3) {
  Jacobiator j = jacobiator_parts(e, e1, e2, e3);
  const PolyVector diff = j.cyclic_sum - script_D(e, j.t);
  if (!is_zero(diff)) {
    throw IdentityViolation("cyclic bracket sum differs from D T",
                            Witness{{{"e1", e.describe(e1)}, {"e2", e.describe(e2)}, {"e3", e.describe(e3)}},
                                    e.describe(diff)});
  }
  return j;
}

Report check_courant_axioms(const CourantDouble& e, const ProbeSet& probes, int random_triples) {
  const int n = e.rank();
  const int dim = e.dimension();
  Report report("Hom-Courant algebroid");

  std::vector<PolyVector> frame;
  for (int i = 0; i < n; ++i) frame.push_back(e.frame(i));
  std::vector<PolyVector> singles = frame;
  for (const Poly& f : probes.nonconstant()) {
    for (const auto& u : frame) singles.push_back(u * f);
  }
  std::vector<std::pair<PolyVector, PolyVector>> pairs;
  for (const auto& u : singles) {
    for (const auto& v : frame) {
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
  }
  ProbeRng rng(probes.seed);
  for (int c = 0; c < probes.random_cases; ++c) {
    pairs.emplace_back(rng.section(dim, n, 2), rng.section(dim, n, 2));
  }
  std::vector<std::array<PolyVector, 3>> triples;
  for (const auto& a : frame) {
    for (const auto& b : frame) {
      for (const auto& c : frame) triples.push_back({a, b, c});
    }
  }
  for (int c = 0; c < random_triples; ++c) {
    // One probe single plus two random sections, rotated through the slots.
    const PolyVector s = singles[rng.integer(0, static_cast<int>(singles.size()) - 1)];
    const PolyVector p = rng.section(dim, n, 1);
    const PolyVector q = rng.section(dim, n, 2);
    if (c % 3 == 0) triples.push_back({s, p, q});
    if (c % 3 == 1) triples.push_back({p, s, q});
    if (c % 3 == 2) triples.push_back({p, q, s});
  }
  const auto pair_inputs = [&](const PolyVector& u, const PolyVector& v) {
    return [&e, &u, &v] { return Inputs{{"e1", e.describe(u)}, {"e2", e.describe(v)}}; };
  };
  const auto triple_inputs = [&](const std::array<PolyVector, 3>& t) {
    return [&e, &t] { return Inputs{{"e1", e.describe(t[0])}, {"e2", e.describe(t[1])}, {"e3", e.describe(t[2])}}; };
  };

  CheckBuilder hom("twist homomorphism");
  CheckBuilder anchor_br("anchor preserves products");
  CheckBuilder metric("twist preserves pairing");
  CheckBuilder closed("closed-form bracket");
  for (const auto& [u, v] : pairs) {
    const PolyVector uv = e.product(u, v);
    const PolyVector d1 = e.apply_twist(uv) - e.product(e.apply_twist(u), e.apply_twist(v));
    hom.record(is_zero(d1), pair_inputs(u, v), [&] { return e.describe(d1); });
    const PolyVector lhs = e.anchor_of(uv).coeffs;
    const PolyVector rhs = bracket_phistar(e.base(), e.anchor_of(u), e.anchor_of(v)).coeffs;
    const PolyVector d2 = lhs - rhs;
    anchor_br.record(is_zero(d2), pair_inputs(u, v), [&] { return to_string(Graded::section(Kind::Vector, d2), e.vars()); });
    const Poly d3 = e.pairing(e.apply_twist(u), e.apply_twist(v)) - e.base().pullback(e.pairing(u, v));
    metric.record(d3.is_zero(), pair_inputs(u, v), [&] { return e.describe(d3); });
    if (e.pair()) {
      const PolyVector d4 = courant_bracket(e, u, v) - courant_bracket_closed(e, u, v);
      closed.record(is_zero(d4), pair_inputs(u, v), [&] { return e.describe(d4); });
    }
  }

  CheckBuilder leibniz("Hom-Leibniz identity");
  CheckBuilder invariance("pairing invariance");
  CheckBuilder jac("cyclic bracket sum equals D T");
  for (const auto& t : triples) {
    const PolyVector p12 = e.product(t[0], t[1]);
    const PolyVector p13 = e.product(t[0], t[2]);
    const PolyVector p23 = e.product(t[1], t[2]);
    const PolyVector d1 = e.product(e.apply_twist(t[0]), p23) - e.product(p12, e.apply_twist(t[2])) -
                          e.product(e.apply_twist(t[1]), p13);
    leibniz.record(is_zero(d1), triple_inputs(t), [&] { return e.describe(d1); });
    // rho(phi(e))<<e1,e2>> = <<e.e1, phi(e2)>> + <<phi(e1), e.e2>> with (e, e1, e2) = t.
    const Poly d2 = e.act(e.apply_twist(t[0]), e.pairing(t[1], t[2])) - e.pairing(p12, e.apply_twist(t[2])) -
                    e.pairing(e.apply_twist(t[1]), p13);
    invariance.record(d2.is_zero(), triple_inputs(t), [&] { return e.describe(d2); });
    const Jacobiator j = jacobiator_parts(e, t[0], t[1], t[2]);
    const PolyVector d3 = j.cyclic_sum - script_D(e, j.t);
    jac.record(is_zero(d3), triple_inputs(t), [&] { return e.describe(d3); });
  }

  CheckBuilder anchor_tw("anchor intertwines twist");
  CheckBuilder square("square equals D of pairing");
  for (const auto& u : singles) {
    const PullbackVectorField lhs = e.anchor_of(e.apply_twist(u));
    const PullbackVectorField rhs = ad_twist(e.base(), e.anchor_of(u));
    const PolyVector d1 = lhs.coeffs - rhs.coeffs;
    anchor_tw.record(is_zero(d1), [&] { return Inputs{{"e", e.describe(u)}}; },
                     [&] { return to_string(Graded::section(Kind::Vector, d1), e.vars()); });
  }
  std::vector<PolyVector> squares = singles;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) squares.push_back(frame[i] + frame[j]);
  }
  for (const auto& [u, v] : pairs) squares.push_back(u + v);
  for (const auto& u : squares) {
    const PolyVector d = e.product(u, u) - script_D(e, e.pairing(u, u));
    square.record(is_zero(d), [&] { return Inputs{{"e", e.describe(u)}}; }, [&] { return e.describe(d); });
  }

  CheckBuilder right_rule("right function rule");
  CheckBuilder left_rule("left function rule");
  for (const Poly& f : probes.nonconstant()) {
    const Poly pf = e.base().pullback(f);
    const PolyVector df = script_D(e, f);
    for (const auto& u : frame) {
      for (const auto& v : singles) {
        const PolyVector uv = e.product(u, v);
        const auto inputs = [&] { return Inputs{{"e1", e.describe(u)}, {"e2", e.describe(v)}, {"f", e.describe(f)}}; };
        const PolyVector d1 = e.product(u, PolyVector(v * f)) - uv * pf -
                              e.apply_twist(v) * e.act(e.apply_twist(u), f);
        right_rule.record(is_zero(d1), inputs, [&] { return e.describe(d1); });
        const PolyVector d2 = e.product(PolyVector(u * f), v) - uv * pf + e.apply_twist(u) * e.act(e.apply_twist(v), f) -
                              df * e.base().pullback(e.pairing(u, v) * Poly(2));
        left_rule.record(is_zero(d2), inputs, [&] { return e.describe(d2); });
      }
    }
  }

  report.add(hom.done());
  report.add(leibniz.done());
  report.add(anchor_tw.done());
  report.add(anchor_br.done());
  report.add(square.done());
  report.add(metric.done());
  report.add(invariance.done());
  report.add(right_rule.done());
  report.add(left_rule.done());
  report.add(jac.done());

  if (e.pair()) {
    report.add(closed.done());
    const CartanContext& ca = e.pair()->a();
    const CartanContext& cs = e.pair()->astar();
    const int r = ca.rank();
    CheckBuilder dcheck("D f = d_A f + d_A* f");
    for (const Poly& f : probes.functions) {
      const PolyVector expect = join(differential(cs, Graded::scalar(ca.vector_kind(), r, f)).vector(),
                                     differential(ca, Graded::scalar(ca.form_kind(), r, f)).vector());
      const PolyVector d = script_D(e, f) - expect;
      dcheck.record(is_zero(d), [&] { return Inputs{{"f", e.describe(f)}}; }, [&] { return e.describe(d); });
    }
    report.add(dcheck.done());
  }
  return report;
}

}  // namespace homlie
