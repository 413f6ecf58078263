#include "homlie/dirac.hpp"

#include <algorithm>

#include "homlie/poisson.hpp"

namespace homlie {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

// Row subsets of size k in lexicographic order.
std::vector<std::vector<int>> row_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) rows.push_back(i);
    }
    out.push_back(std::move(rows));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::string describe_solution(const Subbundle& l, const SpanSolution& s) {
  if (s.status == Membership::NotPolynomialMember) {
    std::string text = "not a polynomial-frame member: coefficients (";
    for (Eigen::Index k = 0; k < s.numerators.size(); ++k) {
      if (k) text += ", ";
      text += "(" + l.host().describe(s.numerators(k)) + ")/(" + l.host().describe(s.denominator) + ")";
    }
    return text + ")";
  }
  return l.describe(s.residual);
}

void record_membership(CheckBuilder& b, const Subbundle& l, const SpanSolution& s, const Inputs& inputs) {
  if (s.status == Membership::Member) {
    b.pass();
    return;
  }
  if (s.status == Membership::NotPolynomialMember) b.note("fails (restricted solver)");
  b.fail(Witness{inputs, describe_solution(l, s)});
}

std::string describe_matrix(const PolyMatrix& m, const std::vector<std::string>& vars) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j), vars);
    out += "]";
  }
  return out + "]";
}

}  // namespace

Subbundle::Subbundle(CourantDouble host, std::vector<PolyVector> generators)
    : host_(std::move(host)), generators_(std::move(generators)) {
  const int r = host_.half_rank();
  if (static_cast<int>(generators_.size()) != r) {
    throw std::invalid_argument("subbundle: expected " + std::to_string(r) + " generators");
  }
  matrix_ = PolyMatrix(host_.rank(), r);
  for (int i = 0; i < r; ++i) {
    if (generators_[i].size() != host_.rank()) throw std::invalid_argument("subbundle: generator length mismatch");
    matrix_.col(i) = generators_[i];
  }
  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  for (const auto& rows : row_subsets(host_.rank(), r)) {
    Poly d = determinant(submatrix(matrix_, rows, cols));
    if (!d.is_zero()) {
      pivots_ = rows;
      minor_ = std::move(d);
      return;
    }
  }
  throw std::invalid_argument("subbundle: generators are rank-deficient");
}

SpanSolution Subbundle::solve(const PolyVector& target) const {
  if (target.size() != host_.rank()) throw std::invalid_argument("subbundle: section length mismatch");
  const int r = rank();
  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  const PolyMatrix square = submatrix(matrix_, pivots_, cols);
  SpanSolution s;
  s.denominator = minor_;
  s.numerators = PolyVector(r);
  for (int k = 0; k < r; ++k) {
    PolyMatrix m = square;
    for (int a = 0; a < r; ++a) m(a, k) = target(pivots_[a]);
    s.numerators(k) = determinant(m);
  }
  s.residual = PolyVector(target * minor_ - matrix_ * s.numerators);
  if (!is_zero(s.residual)) {
    s.status = Membership::NotMember;
    return s;
  }
  s.coefficients = PolyVector(r);
  for (int k = 0; k < r; ++k) {
    auto [q, rem] = divide(s.numerators(k), minor_);
    if (!rem.is_zero()) {
      s.status = Membership::NotPolynomialMember;
      s.coefficients = PolyVector();
      return s;
    }
    s.coefficients(k) = q;
  }
  s.status = Membership::Member;
  return s;
}

Report is_isotropic(const Subbundle& l) {
  Report report("isotropy");
  CheckBuilder b("isotropic");
  const auto& g = l.generators();
  for (int i = 0; i < l.rank(); ++i) {
    for (int j = i; j < l.rank(); ++j) {
      const Poly v = l.host().pairing(g[i], g[j]);
      b.record(
          v.is_zero(), [&] { return Inputs{{"g1", l.describe(g[i])}, {"g2", l.describe(g[j])}}; },
          [&] { return l.host().describe(v); });
    }
  }
  report.add(b.done());
  return report;
}

Report is_phi_invariant(const Subbundle& l) {
  Report report("phiE-invariance");
  CheckBuilder b("phiE-invariant");
  for (const PolyVector& g : l.generators()) {
    record_membership(b, l, l.solve(l.host().apply_twist(g)), Inputs{{"g", l.describe(g)}});
  }
  report.add(b.done());
  return report;
}

Report is_integrable(const Subbundle& l, const ProbeSet& probes) {
  Report report("integrability");
  const auto& g = l.generators();
  CheckBuilder frame("bracket closure");
  for (int i = 0; i < l.rank(); ++i) {
    for (int j = i + 1; j < l.rank(); ++j) {
      record_membership(frame, l, l.solve(courant_bracket(l.host(), g[i], g[j])),
                        Inputs{{"g1", l.describe(g[i])}, {"g2", l.describe(g[j])}});
    }
  }
  report.add(frame.done());
  CheckBuilder multiples("closure on function multiples");
  for (const Poly& f : probes.nonconstant()) {
    for (int i = 0; i < l.rank(); ++i) {
      for (int j = 0; j < l.rank(); ++j) {
        if (i == j && l.rank() > 1) continue;
        const PolyVector fg = g[i] * f;
        record_membership(multiples, l, l.solve(courant_bracket(l.host(), fg, g[j])),
                          Inputs{{"g1", l.describe(fg)}, {"g2", l.describe(g[j])}});
      }
    }
  }
  report.add(multiples.done());
  return report;
}

namespace {

PolyMatrix twist_columns(const Subbundle& l, bool& ok) {
  PolyMatrix t(l.rank(), l.rank());
  ok = true;
  for (int i = 0; i < l.rank(); ++i) {
    const SpanSolution s = l.solve(l.host().apply_twist(l.generators()[i]));
    if (s.status != Membership::Member) {
      ok = false;
      return t;
    }
    t.col(i) = s.coefficients;
  }
  return t;
}

bool unimodular(const PolyMatrix& m) {
  const Poly d = determinant(m);
  return !d.is_zero() && d.is_constant();
}

}  // namespace

SectionTwist restricted_twist(const Subbundle& l) {
  bool ok = false;
  PolyMatrix t = twist_columns(l, ok);
  if (!ok) throw PreconditionError("subbundle is not phiE-invariant", is_phi_invariant(l));
  return SectionTwist(l.host().base(), std::move(t));
}

bool restricted_twist_invertible(const Subbundle& l) {
  bool ok = false;
  const PolyMatrix t = twist_columns(l, ok);
  return ok && unimodular(t);
}

Report is_hom_dirac(const Subbundle& l, const ProbeSet& probes) {
  Report report("Hom-Dirac");
  report.append(is_isotropic(l));
  report.append(is_phi_invariant(l));
  report.append(is_integrable(l, probes));
  CheckResult inv;
  inv.name = "restricted twist invertible";
  inv.role = Role::Observation;
  inv.cases = 1;
  inv.holds = restricted_twist_invertible(l);
  if (!inv.holds) inv.note = "phiE restricted to L is not invertible in the generator frame";
  report.add(inv);
  return report;
}

HomAlgebroid dirac_to_algebroid(const Subbundle& l, const ProbeSet& probes) {
  const Report r = is_hom_dirac(l, probes);
  if (!r.passed()) throw PreconditionError("subbundle is not Hom-Dirac", r);
  if (!r.holds("restricted twist invertible")) {
    throw PreconditionError("restricted twist is not invertible", r);
  }
  const int n = l.rank();
  StructureTable table(n, std::vector<PolyVector>(n, PolyVector::Zero(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      table[i][j] = l.solve(courant_bracket(l.host(), l.generators()[i], l.generators()[j])).coefficients;
      table[j][i] = -table[i][j];
    }
  }
  return HomAlgebroid(restricted_twist(l), l.host().anchor() * l.matrix(), std::move(table), l.host().vars());
}

Subbundle graph(const CourantDouble& e, const PolyMatrix& h) {
  const int r = e.half_rank();
  if (h.rows() != r || h.cols() != r) throw std::invalid_argument("graph: matrix size mismatch");
  std::vector<PolyVector> gens;
  for (int i = 0; i < r; ++i) {
    PolyVector g = PolyVector::Zero(2 * r);
    g.head(r) = h.col(i);
    g(r + i) = Poly(1);
    gens.push_back(std::move(g));
  }
  return Subbundle(e, std::move(gens));
}

Graded maurer_cartan_defect(const BialgebroidPair& p, const Graded& pi) {
  const Report inv = is_hom_poisson(p.a(), pi);
  if (!inv.holds("phiA-invariance")) {
    Report pre("Maurer-Cartan defect");
    pre.add(*inv.find("phiA-invariance"));
    throw PreconditionError("bivector is not phiA-invariant", pre);
  }
  return differential(p.astar(), pi) + schouten(p.a(), pi, pi) * Poly(Rational(1, 2));
}

Report graph_theorem_check(const BialgebroidPair& p, const PolyMatrix& h, const ProbeSet& probes) {
  Report report("graph theorem");
  const CourantDouble e = CourantDouble::of_pair(p);
  const Subbundle l = graph(e, h);
  const Report dirac = is_hom_dirac(l, probes);
  for (CheckResult c : dirac.checks()) {
    c.name = "graph: " + c.name;
    c.role = Role::Observation;
    report.add(std::move(c));
  }

  auto observe = [&](const std::string& name, bool holds, std::string note = {}) {
    CheckResult c;
    c.name = name;
    c.role = Role::Observation;
    c.cases = 1;
    c.holds = holds;
    c.note = std::move(note);
    return c;
  };

  const bool dirac_side = dirac.passed();
  report.add(observe("graph is Hom-Dirac", dirac_side));

  const bool skew = is_zero(PolyMatrix(h + h.transpose()));
  report.add(observe("H skew", skew));
  bool invariant = false;
  bool mc = false;
  CheckResult mc_check = observe("Maurer-Cartan equation", false);
  if (skew) {
    const Graded pi = bivector_from_sharp(p.a().vector_kind(), h);
    invariant = is_hom_poisson(p.a(), pi).holds("phiA-invariance");
    if (invariant) {
      const Graded defect = maurer_cartan_defect(p, pi);
      mc = defect.is_zero();
      mc_check.holds = mc;
      if (!mc) mc_check.witness = Witness{{{"pi", p.a().algebroid().describe(pi)}}, p.a().algebroid().describe(defect)};
    } else {
      mc_check.note = "bivector is not phiA-invariant";
    }
  } else {
    mc_check.note = "H is not skew";
  }
  report.add(observe("bivector phiA-invariant", invariant, skew ? "" : "H is not skew"));
  report.add(mc_check);
  const bool algebraic_side = skew && invariant && mc;
  report.add(observe("H = pi#, pi invariant, Maurer-Cartan", algebraic_side));

  CheckResult agree;
  agree.name = "verdicts agree";
  agree.cases = 1;
  agree.holds = dirac_side == algebraic_side;
  if (!agree.holds) {
    agree.witness = Witness{{{"H", describe_matrix(h, e.vars())}}, std::string("Dirac ") + (dirac_side ? "holds" : "fails") +
                                                   ", Maurer-Cartan side " + (algebraic_side ? "holds" : "fails")};
  }
  report.add(agree);

  CheckResult iso;
  iso.name = "isotropy matches skew-symmetry";
  iso.cases = 1;
  iso.holds = dirac.holds("isotropic") == skew;
  if (!iso.holds) iso.witness = Witness{{}, std::string("isotropic ") + (skew ? "fails" : "holds") + " against skew"};
  report.add(iso);
  return report;
}

}  // namespace homlie
