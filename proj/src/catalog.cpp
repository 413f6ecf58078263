#include "homlie/catalog.hpp"

#include <algorithm>

#include "homlie/fixtures.hpp"

namespace homlie {

namespace {

using Strings = std::vector<std::string>;

Poly p(const std::string& text, const Scenario& s) { return parse_poly(text, s.vars); }

PolyMatrix matrix(std::initializer_list<std::initializer_list<const char*>> rows, const Scenario& s) {
  PolyMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index a = 0;
  for (const auto& row : rows) {
    Eigen::Index b = 0;
    for (const char* e : row) m(a, b++) = p(e, s);
    ++a;
  }
  return m;
}

FixtureEntry entry(std::string name, Strings tags, std::string note, Scenario s, Strings tasks) {
  s.name = name;
  s.tasks = std::move(tasks);
  return {std::move(name), std::move(tags), std::move(note), std::move(s)};
}

Scenario with_pi(Scenario s, std::vector<std::pair<std::pair<int, int>, const char*>> terms) {
  std::vector<BivectorEntry> pi;
  for (const auto& [ij, c] : terms) pi.push_back({ij.first, ij.second, p(c, s)});
  s.pi = std::move(pi);
  return s;
}

DualSpec dual(DualSpec::Type t) {
  DualSpec d;
  d.type = t;
  return d;
}

DiracSpec graph_spec(PolyMatrix h) {
  DiracSpec d;
  d.h = std::move(h);
  return d;
}

std::vector<FixtureEntry> build() {
  const Scenario s0 = scenario_of(fixtures::s0(), "S0");
  const Scenario s1 = scenario_of(fixtures::s1(), "S1");
  const Scenario s2 = scenario_of(fixtures::s2(), "S2");
  const Scenario s3 = scenario_of(fixtures::s3(), "S3");
  const Scenario s1pi = with_pi(s1, {{{0, 1}, "1"}});
  std::vector<FixtureEntry> out;

  out.push_back(entry("S0", {"valid", "algebroid", "courant"},
                      "rank-1 trivial algebroid on Q^2: identity twists, zero bracket and anchor", s0,
                      {"check_axioms", "check_differential_props", "check_bialgebroid", "check_courant_axioms",
                       "graph_theorem_check"}));
  out.push_back(entry("S1", {"valid", "algebroid", "courant"},
                      "pullback tangent algebroid of phi(x, y) = (2x, y/2) with its trivial dual", s1,
                      {"check_axioms", "check_differential_props", "check_bialgebroid", "check_courant_axioms"}));
  {
    Scenario s = s2;
    s.probe_degree = 2;
    out.push_back(entry("S2", {"valid", "algebroid", "courant"},
                        "pullback of TM + R along phi(x, y) = (2x, y/2), frame brackets from the closed formula", s,
                        {"check_axioms", "check_differential_props", "check_bialgebroid", "check_courant_axioms"}));
  }
  {
    Scenario s = s3;
    s.probe_degree = 2;
    out.push_back(entry("S3", {"valid", "algebroid", "classical"},
                        "classical tangent algebroid of Q^3 (identity twists)", s,
                        {"check_axioms", "check_differential_props"}));
  }
  out.push_back(entry("S1-perturbed", {"negative", "algebroid"},
                      "S1 with [e1, e2] = e1; the perturbed bracket breaks the twist homomorphism property",
                      scenario_of(fixtures::s1_perturbed(), "S1-perturbed"), {"check_axioms"}));
  out.push_back(entry("S1-poisson", {"valid", "poisson", "courant", "dirac"},
                      "pi = e1^e2 on S1: invariant with vanishing Schouten square; graph of pi# in the trivial double",
                      s1pi,
                      {"check_axioms", "is_hom_poisson", "sharp_commutes", "pi_pi_identity", "dual_algebroid",
                       "check_bialgebroid_pair", "check_bialgebroid", "check_courant_axioms", "maurer_cartan_defect",
                       "graph_theorem_check"}));
  {
    Scenario s = s1pi;
    s.dual = dual(DualSpec::Type::FromPi);
    out.push_back(entry("S1-poisson-double", {"valid", "poisson", "courant", "dirac"},
                        "double of (S1, A*_pi) for pi = e1^e2", s,
                        {"check_bialgebroid", "check_courant_axioms", "maurer_cartan_defect", "graph_theorem_check"}));
  }
  out.push_back(entry("S1-noninvariant-pi", {"negative", "poisson"},
                      "pi = x e1^e2 on S1 is not phiA-invariant", with_pi(s1, {{{0, 1}, "x"}}),
                      {"is_hom_poisson"}));
  {
    Scenario s = s1;
    s.N = matrix({{"1", "0"}, {"0", "2"}}, s);
    out.push_back(entry("S1-nijenhuis-diag12", {"valid", "nijenhuis"},
                        "N = diag(1, 2) on S1: constant diagonal, commutes with phiA", s,
                        {"is_hom_nijenhuis", "lemma_checks", "deformed_algebroid", "d_n_props"}));
    s.N = matrix({{"3", "0"}, {"0", "4"}}, s);
    out.push_back(entry("S1-nijenhuis-diag34", {"valid", "nijenhuis"}, "N = diag(3, 4) on S1", s,
                        {"is_hom_nijenhuis", "lemma_checks", "deformed_algebroid", "d_n_props"}));
    s.N = matrix({{"0", "0"}, {"1", "0"}}, s);
    out.push_back(entry("S1-lower-shift", {"negative", "nijenhuis"},
                        "N e1 = e2 on S1: torsion-free but does not commute with phiA", s, {"is_hom_nijenhuis"}));
  }
  {
    Scenario s = s1pi;
    s.N = matrix({{"3", "0"}, {"0", "3"}}, s);
    s.hierarchy_depth = 3;
    out.push_back(entry("S1-hpn", {"valid", "hpn", "nijenhuis", "poisson"},
                        "pi = e1^e2 with N = 3 id on S1: compatible pair, pi_k = 3^k pi", s,
                        {"is_hpn", "hierarchy", "defect_identities", "hpn_bialgebroid_equiv"}));
    s.N = matrix({{"1", "0"}, {"0", "2"}}, s);
    s.hierarchy_depth.reset();
    out.push_back(entry("S1-hpn-incompatible", {"negative", "hpn", "nijenhuis", "poisson"},
                        "pi = e1^e2 with N = diag(1, 2): N pi# is not skew, every compatibility condition fails", s,
                        {"is_hpn", "hpn_bialgebroid_equiv"}));
  }
  {
    Scenario s = s1;
    s.dirac = graph_spec(matrix({{"0", "-1"}, {"1", "0"}}, s));
    out.push_back(entry("S1-dirac-graph", {"valid", "dirac"}, "graph of pi# for pi = e1^e2 in the trivial double of S1",
                        s, {"is_hom_dirac", "dirac_to_algebroid", "graph_theorem_check"}));
    s.dirac = graph_spec(matrix({{"1", "0"}, {"0", "1"}}, s));
    out.push_back(entry("S1-graph-identity", {"negative", "dirac"},
                        "graph of H = id: symmetric, so the graph is not isotropic", s,
                        {"is_hom_dirac", "graph_theorem_check"}));
    s.dirac = graph_spec(matrix({{"0", "-x"}, {"x", "0"}}, s));
    out.push_back(entry("S1-graph-noninvariant", {"negative", "dirac"},
                        "graph of pi# for pi = x e1^e2: isotropic but not phiE-invariant", s,
                        {"is_hom_dirac", "graph_theorem_check"}));
    DiracSpec span;
    span.type = DiracSpec::Type::Span;
    for (int i = 0; i < 2; ++i) {
      PolyVector g = PolyVector::Zero(4);
      g(i) = Poly(1);
      span.generators.push_back(g);
    }
    s.dirac = span;
    out.push_back(entry("S1-factor-A", {"valid", "dirac"}, "the A-factor of the trivial double of S1", s,
                        {"is_hom_dirac", "dirac_to_algebroid"}));
  }
  {
    Scenario s = s1;
    DualSpec d = dual(DualSpec::Type::Explicit);
    d.anchor = PolyMatrix::Zero(2, 2);
    d.structure.push_back({0, 1, 0, Poly(1)});
    s.dual = d;
    out.push_back(entry("S1-bad-dual", {"negative", "courant"},
                        "S1 against a dual with [eps1, eps2] = eps1: not a bialgebroid", s, {"check_bialgebroid"}));
  }
  {
    Scenario s = with_pi(s3, {{{0, 2}, "1"}, {{1, 2}, "z"}});
    s.probe_degree = 1;
    out.push_back(entry("S3-non-poisson", {"negative", "poisson", "dirac", "classical"},
                        "pi = e1^e3 + z e2^e3 on Q^3: the first bivector with coefficients in {0, 1, x, y, z} "
                        "whose Schouten square is nonzero",
                        s, {"is_hom_poisson", "maurer_cartan_defect", "graph_theorem_check"}));
  }
  {
    Scenario s = with_pi(s3, {{{0, 1}, "z"}});
    s.dual = dual(DualSpec::Type::FromPi);
    s.probe_degree = 1;
    out.push_back(entry("S3-z-poisson", {"valid", "poisson", "courant", "dirac", "classical"},
                        "pi = z e1^e2 on Q^3 with its induced dual", s,
                        {"is_hom_poisson", "check_bialgebroid_pair", "check_courant_axioms", "graph_theorem_check"}));
  }
  return out;
}

}  // namespace

bool FixtureEntry::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

Scenario scenario_of(const HomAlgebroid& a, std::string name) {
  Scenario s;
  s.name = std::move(name);
  s.n = a.dimension();
  s.vars = a.vars();
  s.phi_matrix = a.base().matrix();
  s.phi_offset = a.base().offset();
  s.rank = a.rank();
  s.phiA_matrix = a.twist().matrix();
  s.anchor_matrix = a.anchor();
  for (int i = 0; i < s.rank; ++i) {
    for (int j = i + 1; j < s.rank; ++j) {
      for (int k = 0; k < s.rank; ++k) {
        const Poly& c = a.structure()[i][j](k);
        if (!c.is_zero()) s.structure.push_back({i, j, k, c});
      }
    }
  }
  return s;
}

const std::vector<FixtureEntry>& fixture_catalog() {
  static const std::vector<FixtureEntry> catalog = build();
  return catalog;
}

const FixtureEntry* find_fixture(const std::string& name) {
  for (const auto& e : fixture_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace homlie
