// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "fixtures_test.hpp"
#include "homlie/catalog.hpp"
#include "homlie/classical.hpp"
#include "homlie/dirac.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/nijenhuis.hpp"
#include "homlie/runner.hpp"
#include "oracle/classical_oracle.hpp"
#include "search_oracle.hpp"

using namespace testing_support;
namespace fx = homlie::fixtures;

namespace {

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    for (const auto& f : failures_) out << "\n    failed: " << f;
    if (failed_ > static_cast<int>(failures_.size())) out << "\n    ... " << failed_ - failures_.size() << " more";
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

PolyMatrix diag(int a, int b) {
  PolyMatrix m = PolyMatrix::Zero(2, 2);
  m(0, 0) = Poly(a);
  m(1, 1) = Poly(b);
  return m;
}

Graded e12(int r = 2, const Poly& f = Poly(1)) { return Graded::basis(Kind::Vector, r, {0, 1}, f); }

RunReport run_entry(const FixtureEntry& f, const std::vector<std::string>& tasks = {}) {
  const int degree = f.scenario.probe_degree.value_or(kDefaultProbeDegree);
  return run(Workspace(f.scenario), plan_tasks(f.scenario, tasks.empty() ? f.scenario.tasks : tasks, "$.tasks"),
             degree);
}

// Classical contraction of a vector field into a form: dx_i components, alternating signs.
Graded contract_field(const PolyVector& x, const Graded& w) {
  const int n = w.rank();
  Graded out(w.kind(), n, w.degree() - 1);
  for (const auto& [s, f] : w.terms()) {
    const std::vector<int> idx = indices_of(s);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      std::vector<int> rest;
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q != p) rest.push_back(idx[q]);
      }
      Graded t = Graded::scalar(w.kind(), n, f * x(idx[p]));
      for (int i : rest) t = wedge(t, Graded::basis(w.kind(), n, {i}));
      if (p % 2 == 0) out += t; else out -= t;
    }
  }
  return out;
}

void classical_reduction(Criterion& c) {
  const CartanContext s3(fx::s3());
  ProbeRng rng(2024);
  int probes = 0;
  for (int i = 0; i < 60; ++i, ++probes) {
    const Graded w = rng.graded(Kind::Covector, 3, 3, rng.integer(0, 2), 3);
    c.require(differential(s3, w) == oracle::de_rham(w), "S3 d_A vs de Rham");
  }
  for (int i = 0; i < 60; ++i, ++probes) {
    const PolyVector x = rng.section(3, 3, 3);
    const Graded w = rng.graded(Kind::Covector, 3, 3, rng.integer(1, 3), 3);
    c.require(interior(s3, Graded::section(Kind::Vector, x), w) == contract_field(x, w), "S3 interior");
  }
  for (int i = 0; i < 50; ++i, ++probes) {
    const PolyVector x = rng.section(3, 3, 2);
    const Graded w = rng.graded(Kind::Covector, 3, 3, rng.integer(0, 2), 3);
    const Graded classical = contract_field(x, oracle::de_rham(w)) +
                             (w.degree() > 0 ? oracle::de_rham(contract_field(x, w)) : Graded(w.kind(), 3, w.degree()));
    c.require(lie_derivative_form(s3, Graded::section(Kind::Vector, x), w) == classical, "S3 Lie derivative");
  }
  for (int i = 0; i < 50; ++i, ++probes) {
    const int k = rng.integer(0, 3), l = rng.integer(1, 3);
    const Graded d1 = rng.graded(Kind::Vector, 3, 3, k, 3 - (k + l > 3 ? 1 : 0));
    const Graded d2 = rng.graded(Kind::Vector, 3, 3, l, 2);
    c.require(schouten(s3, d1, d2) == oracle::schouten(d1, d2), "S3 Schouten");
  }
  // S0: zero anchor and bracket with identity twists, so d, L and the bracket vanish and
  // the interior is the plain pairing.
  const CartanContext s0(fx::s0());
  for (int i = 0; i < 30; ++i, ++probes) {
    const Graded w = rng.graded(Kind::Covector, 2, 1, rng.integer(0, 1), 3);
    const Graded x = rng.graded(Kind::Vector, 2, 1, 1, 3);
    c.require(differential(s0, w).is_zero(), "S0 d_A");
    c.require(lie_derivative_form(s0, x, w).is_zero(), "S0 Lie derivative");
    if (w.degree() == 1) {
      c.require(interior(s0, x, w).value() == x.vector()(0) * w.vector()(0), "S0 interior");
    }
    c.require(schouten(s0, x, rng.graded(Kind::Vector, 2, 1, rng.integer(0, 1), 3)).is_zero(), "S0 Schouten");
  }
  c.note(std::to_string(probes) + " random probes");
}

void axiom_suite(Criterion& c) {
  const ProbeSet probes = make_probes(2);
  for (const auto& [name, a] : std::vector<std::pair<std::string, HomAlgebroid>>{{"S1", fx::s1()}, {"S2", fx::s2()}}) {
    const Report r = check_axioms(a, probes);
    c.require(r.passed(), name + " axioms");
    for (const char* check : {"Hom-Jacobi", "Leibniz rule", "anchor intertwines twist", "anchor preserves brackets"}) {
      c.require(r.find(check) != nullptr && r.holds(check) && r.find(check)->cases > 0, name + " " + check);
    }
  }
  const Report bad = check_axioms(fx::s1_perturbed(), probes);
  const CheckResult* f = bad.first_failure();
  c.require(f != nullptr && f->witness.has_value() && !f->witness->residual.empty(), "perturbed S1 witness");
  if (f) c.note("perturbed S1 fails \"" + f->name + "\"");
}

void calculus_identities(Criterion& c) {
  const std::vector<std::pair<std::string, HomAlgebroid>> all{
      {"S0", fx::s0()}, {"S1", fx::s1()}, {"S2", fx::s2()}, {"S3", fx::s3()}};
  for (const auto& [name, a] : all) {
    const CartanContext ctx(a);
    const Report r = check_differential_props(ctx, make_probes(a.dimension(), 2));
    for (const char* check : {"d squared zero", "d commutes with dual twist", "graded Leibniz rule"}) {
      c.require(r.holds(check), name + " " + check);
    }
    // L_X alpha (Y) = phi(X)<alpha, phi^-1 Y> - <phi^dagger alpha, [X, phi^-1 Y]>
    const int r_ = ctx.rank(), n = a.dimension();
    ProbeRng rng(77);
    std::vector<Graded> xs, alphas;
    for (int i = 0; i < r_; ++i) {
      xs.push_back(ctx.frame(i));
      alphas.push_back(ctx.coframe(i));
    }
    for (int k = 0; k < 3; ++k) {
      xs.push_back(rng.graded(ctx.vector_kind(), n, r_, 1, 2));
      alphas.push_back(rng.graded(ctx.form_kind(), n, r_, 1, 2));
    }
    for (const auto& x : xs) {
      for (const auto& alpha : alphas) {
        const Graded lx = lie_derivative_form(ctx, x, alpha);
        for (int j = 0; j < r_; ++j) {
          const Graded y = ctx.frame(j) * rng.poly(n, 1);
          const Graded py = ctx.twist_inverse().apply(y);
          const Poly rhs = a.act(ctx.twist().apply(x).vector(), pair(alpha, py)) -
                           pair(ctx.dual_twist().apply(alpha), schouten(ctx, x, py));
          c.require(pair(lx, y) == rhs, name + " Lie derivative pairing identity");
        }
      }
    }
  }
}

void poisson_suite(Criterion& c) {
  const CartanContext s1(fx::s1());
  const ProbeSet probes = make_probes(2);
  const Graded pi = e12();
  c.require(is_hom_poisson(s1, pi).passed(), "is_hom_poisson");
  c.require(sharp_commutes(s1, pi, probes).passed(), "sharp_commutes");
  ProbeRng rng(5);
  for (int i = 0; i < 12; ++i) {
    const Graded d = rng.graded(Kind::Vector, 2, 2, rng.integer(0, 1), 2);
    c.require(d_pi(s1, pi, d) == schouten(s1, pi, d), "d_pi = [pi, .]");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Graded a = Graded::basis(Kind::Covector, 2, {i}, rng.poly(2, 1));
      const Graded b = Graded::basis(Kind::Covector, 2, {j}, rng.poly(2, 1));
      c.require(pi_pi_identity(s1, pi, a, b).passed(), "pi-pi identity");
    }
  }
  c.require(check_axioms(dual_algebroid(s1, pi), probes).passed(), "dual algebroid axioms");
  c.require(check_bialgebroid_pair(s1, pi, probes).passed(), "bialgebroid pair");
  const Report bad = is_hom_poisson(s1, e12(2, P("x")));
  const CheckResult* f = bad.first_failure();
  c.require(f != nullptr && f->name == "phiA-invariance", "x pi rejected by phiA-invariance");
  c.require(f != nullptr && f->witness && f->witness->residual == "x*e1^e2", "x pi residual");
}

void correspondence(Criterion& c) {
  RationalMatrix det1(2, 2);
  det1 << 2, 0, 0, Rational(1, 2);
  RationalMatrix rot(2, 2);
  rot << 0, -1, 1, 0;
  const std::optional<Graded> q = oracle::first_non_poisson_bivector();
  c.require(q.has_value(), "search oracle finds a non-Poisson bivector");
  struct Case {
    AffineTwist phi;
    Graded pi;
    bool valid;
  };
  std::vector<Case> cases{
      {AffineTwist(det1), e12(), true},
      {AffineTwist(rot), e12(2, P("x^2 + y^2")), true},
      {AffineTwist::identity(2), e12(2, P("x*y")), true},
      {AffineTwist::diagonal({Rational(2), Rational(1)}), e12(), false},
  };
  if (q) cases.push_back({AffineTwist::identity(3), *q, false});
  int valid = 0, invalid = 0;
  for (const auto& k : cases) {
    const PoissonLift lift = classical_poisson_lift(k.phi, k.pi);
    c.require(lift.correspondence_holds(), "lift agrees in both directions");
    c.require(lift.hom_side.passed() == k.valid, "lift verdict");
    (k.valid ? valid : invalid)++;
  }
  c.note(std::to_string(valid) + " valid, " + std::to_string(invalid) + " invalid pairs");
}

void nijenhuis_suite(Criterion& c) {
  const CartanContext s1(fx::s1());
  const ProbeSet probes = make_probes(2);
  for (const PolyMatrix& n : {diag(1, 2), diag(3, 4)}) {
    c.require(is_hom_nijenhuis(s1, n, probes).passed(), "Hom-Nijenhuis");
    const Report lem = lemma_checks(s1, n, diag(3, 4), probes);
    c.require(lem.passed() && lem.checks().size() >= 5, "five lemma identities");
    c.require(check_axioms(deformed_algebroid(s1, n, probes), probes).passed(), "A_N axioms");
    const Report dn = d_n_props(s1, n, probes);
    c.require(dn.holds("d_N f = N* d_A f") && dn.holds("d_N d_A f = -d_A d_N f"), "d_N identities");
  }
  PolyMatrix shift = PolyMatrix::Zero(2, 2);
  shift(1, 0) = Poly(1);
  const Report bad = is_hom_nijenhuis(s1, shift, probes);
  c.require(!bad.passed(), "lower shift rejected");
  c.require(!bad.holds("phiA-invariance") && !bad.holds("commutes with twist"), "both formulations fail");
  c.require(bad.holds("commutation matches invariance"), "formulations consistent");
}

void hpn_suite(Criterion& c) {
  const CartanContext s1(fx::s1());
  const ProbeSet probes = make_probes(2);
  const char* conditions[] = {"condition C", "condition N-pi = pi_N", "condition N-pi = pi^N*", "condition C'"};
  const char* verdicts[] = {"HPN", "(A_N, A*_pi) bialgebroid", "(A*_pi, A_N) bialgebroid"};
  for (int scale : {2, 3}) {
    const Report good = is_hpn(s1, e12(), diag(scale, scale), probes);
    for (const char* k : conditions) c.require(good.holds(k), std::string("compatible ") + k);
    const Report eq = hpn_bialgebroid_equiv(s1, e12(), diag(scale, scale), probes);
    for (const char* k : verdicts) c.require(eq.holds(k), std::string("compatible ") + k);
  }
  const Hierarchy h = hierarchy(s1, e12(), diag(3, 3), 3, probes);
  c.require(h.bivectors.size() == 4, "hierarchy depth 3");
  for (const auto& a : h.bivectors) {
    for (const auto& b : h.bivectors) c.require(schouten(s1, a, b).is_zero(), "[pi_k, pi_l] = 0");
  }
  const Report bad = is_hpn(s1, e12(), diag(1, 2), probes);
  for (const char* k : conditions) c.require(!bad.holds(k), std::string("incompatible ") + k);
  const Report beq = hpn_bialgebroid_equiv(s1, e12(), diag(1, 2), probes);
  for (const char* k : verdicts) c.require(!beq.holds(k), std::string("incompatible ") + k);
}

using CatalogRuns = std::map<std::string, RunReport>;

void courant_suite(Criterion& c, const CatalogRuns& runs) {
  int doubles = 0;
  for (const auto& f : fixture_catalog()) {
    if (f.negative() || !f.has_tag("courant")) continue;
    const RunReport& r = runs.at(f.name);
    const TaskOutcome* t = nullptr;
    for (const auto& o : r.tasks) {
      if (o.task == "check_courant_axioms") t = &o;
    }
    if (!t) continue;
    ++doubles;
    c.require(t->verdict == Verdict::Pass, f.name + " Courant axioms");
    const Workspace w(f.scenario);
    const int rank = 2 * w.algebroid().rank();
    const std::size_t frame_triples = static_cast<std::size_t>(rank * rank * rank);
    for (const char* k : {"twist homomorphism", "anchor preserves products", "twist preserves pairing",
                          "Hom-Leibniz identity", "pairing invariance", "anchor intertwines twist",
                          "square equals D of pairing", "right function rule", "left function rule",
                          "cyclic bracket sum equals D T"}) {
      const CheckResult* x = t->report.find(k);
      c.require(x != nullptr && x->holds, f.name + " " + k);
    }
    const CheckResult* jac = t->report.find("cyclic bracket sum equals D T");
    c.require(jac != nullptr && jac->cases >= frame_triples + 100, f.name + " triple count");
  }
  c.note(std::to_string(doubles) + " doubles");
}

void dirac_suite(Criterion& c) {
  int graphs = 0, dirac_true = 0, dirac_false = 0, algebroids = 0;
  for (const auto& f : fixture_catalog()) {
    if (std::find(f.scenario.tasks.begin(), f.scenario.tasks.end(), "graph_theorem_check") == f.scenario.tasks.end()) {
      continue;
    }
    const Workspace w(f.scenario);
    const ProbeSet probes = make_probes(w.algebroid().dimension(), f.scenario.probe_degree.value_or(2));
    const Report r = graph_theorem_check(w.pair(), w.graph_matrix(), probes);
    ++graphs;
    c.require(r.holds("verdicts agree"), f.name + " graph verdicts agree");
    (r.holds("graph is Hom-Dirac") ? dirac_true : dirac_false)++;
  }
  c.require(graphs >= 4 && dirac_true > 0 && dirac_false > 0, "graph fixtures span both verdicts");
  c.note(std::to_string(graphs) + " graphs (" + std::to_string(dirac_true) + " Dirac)");

  const CartanContext s1(fx::s1()), s3(fx::s3());
  const BialgebroidPair p1(fx::s1(), trivial_dual(fx::s1()));
  const BialgebroidPair p3(fx::s3(), trivial_dual(fx::s3()));
  for (const Graded& pi : {e12(), Graded(Kind::Vector, 2, 2), e12(2, P("3"))}) {
    c.require(maurer_cartan_defect(p1, pi) == schouten(s1, pi, pi) * Poly(Rational(1, 2)), "S1 defect");
  }
  std::vector<Graded> s3_bivectors{e12(3, P("z", 3)), Graded::basis(Kind::Vector, 3, {1, 2}, P("x + y", 3))};
  if (const auto q = oracle::first_non_poisson_bivector()) s3_bivectors.push_back(*q);
  for (const Graded& pi : s3_bivectors) {
    const Graded defect = maurer_cartan_defect(p3, pi);
    c.require(defect == oracle::schouten(pi, pi) * Poly(Rational(1, 2)), "S3 defect vs oracle");
  }

  for (const auto& f : fixture_catalog()) {
    if (!f.scenario.dirac) continue;
    const Workspace w(f.scenario);
    const ProbeSet probes = make_probes(w.algebroid().dimension(), 2);
    const Subbundle l = w.subbundle();
    if (!is_hom_dirac(l, probes).passed() || !restricted_twist_invertible(l)) continue;
    ++algebroids;
    c.require(check_axioms(dirac_to_algebroid(l, probes), probes).passed(), f.name + " induced algebroid");
  }
  const CourantDouble e = CourantDouble::of_pair(p1);
  const ProbeSet probes = make_probes(2, 2);
  for (bool dual_part : {false, true}) {
    std::vector<PolyVector> gens;
    for (int i = 0; i < e.half_rank(); ++i) gens.push_back(e.frame(i + (dual_part ? e.half_rank() : 0)));
    ++algebroids;
    c.require(check_axioms(dirac_to_algebroid(Subbundle(e, gens), probes), probes).passed(), "factor algebroid");
  }
  c.note(std::to_string(algebroids) + " induced algebroids");
}

void determinism(Criterion& c, const CatalogRuns& first, const CatalogRuns& second) {
  int witnesses = 0;
  for (const auto& f : fixture_catalog()) {
    const RunReport& a = first.at(f.name);
    const RunReport& b = second.at(f.name);
    c.require(format_text(a, false) == format_text(b, false), f.name + " text identical");
    c.require(format_json(a, false).dump() == format_json(b, false).dump(), f.name + " json identical");
    c.require(a.exit_code() == (f.negative() ? 1 : 0), f.name + " catalog verdict");
    for (const auto& t : a.tasks) {
      if (t.verdict == Verdict::Pass) continue;
      const CheckResult* x = t.report.first_failure();
      c.require(t.verdict == Verdict::Fail && x && x->witness, f.name + " " + t.task + " witness");
      if (!x || !x->witness) continue;
      const RunReport alone = run_entry(f, {t.task});
      const CheckResult* y = alone.tasks.at(0).report.first_failure();
      c.require(y && y->name == x->name && y->witness && y->witness->residual == x->witness->residual &&
                    y->witness->inputs == x->witness->inputs,
                f.name + " " + t.task + " witness reproduces alone");
      ++witnesses;
    }
  }
  c.note(std::to_string(witnesses) + " witnesses reproduced");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  CatalogRuns first, second;
  for (const auto& f : fixture_catalog()) first.emplace(f.name, run_entry(f));
  for (const auto& f : fixture_catalog()) second.emplace(f.name, run_entry(f));

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"classical reduction", classical_reduction},
      {"algebroid axioms", axiom_suite},
      {"calculus identities", calculus_identities},
      {"Poisson suite", poisson_suite},
      {"classical Poisson correspondence", correspondence},
      {"Nijenhuis suite", nijenhuis_suite},
      {"Poisson-Nijenhuis equivalence and hierarchy", hpn_suite},
      {"Courant doubles", [&](Criterion& c) { courant_suite(c, first); }},
      {"Dirac structures and Maurer-Cartan", dirac_suite},
      {"determinism and witnesses", [&](Criterion& c) { determinism(c, first, second); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (!c.ok()) ++failed;
    std::printf("%s criterion %zu %s: %s\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.summary().c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
