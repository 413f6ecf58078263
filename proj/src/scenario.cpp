#include "homlie/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "homlie/poisson.hpp"

namespace homlie {

namespace {

std::string join_messages(const std::vector<SchemaError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += e.path + ": " + e.message;
  }
  return out;
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class Reader {
 public:
  std::vector<SchemaError> errors;

  void error(const std::string& path, const std::string& message) { errors.push_back({path, message}); }

  bool object(const Json& j, const std::string& path, const std::set<std::string>& allowed,
              const std::set<std::string>& required) {
    if (!j.is_object()) {
      error(path, "expected an object");
      return false;
    }
    for (const auto& [key, value] : j.items()) {
      if (!allowed.count(key)) error(path + "." + key, "unknown key");
    }
    bool ok = true;
    for (const auto& key : required) {
      if (!j.contains(key)) {
        error(path + "." + key, "missing required key");
        ok = false;
      }
    }
    return ok;
  }

  std::optional<int> integer(const Json& j, const std::string& path, int lo, int hi) {
    if (!j.is_number_integer()) {
      error(path, "expected an integer");
      return std::nullopt;
    }
    const auto v = j.get<long long>();
    if (v < lo || v > hi) {
      error(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<int>(v);
  }

  std::optional<std::string> string(const Json& j, const std::string& path) {
    if (!j.is_string()) {
      error(path, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::optional<Rational> rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) {
      error(path, "expected a rational string \"p/q\"");
      return std::nullopt;
    }
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      error(path, std::string("invalid rational: ") + e.what());
      return std::nullopt;
    }
  }

  std::optional<Poly> poly(const Json& j, const std::string& path, const std::vector<std::string>& vars) {
    if (j.is_number_integer()) return Poly(Rational(j.get<long long>()));
    if (!j.is_string()) {
      error(path, "expected a polynomial string");
      return std::nullopt;
    }
    try {
      return parse_poly(j.get<std::string>(), vars);
    } catch (const std::exception& e) {
      error(path, std::string("invalid polynomial: ") + e.what());
      return std::nullopt;
    }
  }

  template <typename Entry, typename F>
  std::optional<Eigen::Matrix<Entry, Eigen::Dynamic, Eigen::Dynamic>> matrix(const Json& j, const std::string& path,
                                                                            int rows, int cols, F&& entry) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
      error(path, "expected an array of " + std::to_string(rows) + " rows");
      return std::nullopt;
    }
    Eigen::Matrix<Entry, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
    bool ok = true;
    for (int a = 0; a < rows; ++a) {
      const std::string rp = index_path(path, a);
      if (!j[a].is_array() || static_cast<int>(j[a].size()) != cols) {
        error(rp, "expected a row of " + std::to_string(cols) + " entries");
        ok = false;
        continue;
      }
      for (int b = 0; b < cols; ++b) {
        auto v = entry(j[a][b], index_path(rp, b));
        if (v) {
          m(a, b) = *v;
        } else {
          ok = false;
        }
      }
    }
    if (!ok) return std::nullopt;
    return m;
  }

  std::optional<PolyMatrix> poly_matrix(const Json& j, const std::string& path, int rows, int cols,
                                        const std::vector<std::string>& vars) {
    return matrix<Poly>(j, path, rows, cols, [&](const Json& e, const std::string& p) { return poly(e, p, vars); });
  }

  std::optional<PolyVector> poly_vector(const Json& j, const std::string& path, int size,
                                        const std::vector<std::string>& vars) {
    if (!j.is_array() || static_cast<int>(j.size()) != size) {
      error(path, "expected an array of " + std::to_string(size) + " entries");
      return std::nullopt;
    }
    PolyVector v(size);
    bool ok = true;
    for (int a = 0; a < size; ++a) {
      auto e = poly(j[a], index_path(path, a), vars);
      if (e) {
        v(a) = *e;
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return v;
  }

  std::vector<StructureEntry> structure(const Json& j, const std::string& path, int r,
                                        const std::vector<std::string>& vars) {
    std::vector<StructureEntry> out;
    if (!j.is_array()) {
      error(path, "expected an array of {i, j, k, coeff}");
      return out;
    }
    for (std::size_t a = 0; a < j.size(); ++a) {
      const std::string p = index_path(path, a);
      if (!object(j[a], p, {"i", "j", "k", "coeff"}, {"i", "j", "k", "coeff"})) continue;
      auto i = integer(j[a]["i"], p + ".i", 1, r);
      auto jj = integer(j[a]["j"], p + ".j", 1, r);
      auto k = integer(j[a]["k"], p + ".k", 1, r);
      auto c = poly(j[a]["coeff"], p + ".coeff", vars);
      if (!i || !jj || !k || !c) continue;
      if (*i == *jj) {
        error(p, "i and j must differ");
        continue;
      }
      out.push_back({*i - 1, *jj - 1, *k - 1, *c});
    }
    return out;
  }

  std::vector<BivectorEntry> bivector(const Json& j, const std::string& path, int r,
                                      const std::vector<std::string>& vars) {
    std::vector<BivectorEntry> out;
    if (!j.is_array()) {
      error(path, "expected an array of {i, j, coeff}");
      return out;
    }
    for (std::size_t a = 0; a < j.size(); ++a) {
      const std::string p = index_path(path, a);
      if (!object(j[a], p, {"i", "j", "coeff"}, {"i", "j", "coeff"})) continue;
      auto i = integer(j[a]["i"], p + ".i", 1, r);
      auto jj = integer(j[a]["j"], p + ".j", 1, r);
      auto c = poly(j[a]["coeff"], p + ".coeff", vars);
      if (!i || !jj || !c) continue;
      if (*i >= *jj) {
        error(p, "expected i < j");
        continue;
      }
      out.push_back({*i - 1, *jj - 1, *c});
    }
    return out;
  }
};

Json poly_json(const Poly& f, const std::vector<std::string>& vars) { return to_string(f, vars); }

Json matrix_json(const PolyMatrix& m, const std::vector<std::string>& vars) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(poly_json(m(a, b), vars));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json structure_json(const std::vector<StructureEntry>& entries, const std::vector<std::string>& vars) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"coeff", poly_json(e.coeff, vars)}});
  }
  return out;
}

StructureTable table_of(const std::vector<StructureEntry>& entries, int r) {
  StructureTable t = zero_structure(r);
  for (const auto& e : entries) {
    t[e.i][e.j](e.k) += e.coeff;
    t[e.j][e.i](e.k) -= e.coeff;
  }
  return t;
}

HomAlgebroid build_algebroid(const Scenario& s) {
  std::vector<SchemaError> errors;
  try {
    AffineTwist phi(s.phi_matrix, s.phi_offset);
    SectionTwist twist(phi, s.phiA_matrix);
    try {
      (void)twist.inverse();
    } catch (const std::exception&) {
      errors.push_back({"$.phiA_matrix", "determinant must be a nonzero constant"});
    }
    if (errors.empty()) return HomAlgebroid(twist, s.anchor_matrix, table_of(s.structure, s.rank), s.vars);
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    errors.push_back({"$.phi.matrix", e.what()});
  }
  throw ScenarioError(errors);
}

}  // namespace

ScenarioError::ScenarioError(std::vector<SchemaError> errors)
    : std::runtime_error("invalid scenario: " + join_messages(errors)), errors_(std::move(errors)) {}

Scenario parse_scenario(const Json& j) {
  Reader rd;
  Scenario s;
  const std::set<std::string> keys{"name",  "n",    "vars", "phi",   "rank",  "phiA_matrix",     "anchor_matrix",
                                   "structure", "pi", "N",    "dual",  "dirac", "hierarchy_depth", "probe_degree",
                                   "tasks"};
  if (!rd.object(j, "$", keys, {"n", "phi", "rank", "phiA_matrix", "anchor_matrix"})) {
    throw ScenarioError(rd.errors);
  }
  if (j.contains("name")) {
    if (auto v = rd.string(j["name"], "$.name")) s.name = *v;
  }
  const auto n = rd.integer(j["n"], "$.n", 1, kMaxVariables);
  const auto r = rd.integer(j["rank"], "$.rank", 1, 8);
  if (!n || !r) throw ScenarioError(rd.errors);
  s.n = *n;
  s.rank = *r;

  if (j.contains("vars")) {
    const Json& v = j["vars"];
    if (!v.is_array() || static_cast<int>(v.size()) != s.n) {
      rd.error("$.vars", "expected " + std::to_string(s.n) + " variable names");
    } else {
      std::set<std::string> seen;
      for (std::size_t a = 0; a < v.size(); ++a) {
        auto name = rd.string(v[a], index_path("$.vars", a));
        if (!name) continue;
        if (name->empty() || !seen.insert(*name).second) rd.error(index_path("$.vars", a), "empty or repeated name");
        s.vars.push_back(*name);
      }
    }
  }
  if (static_cast<int>(s.vars.size()) != s.n) s.vars = default_variable_names(s.n);
  const auto& vars = s.vars;
  const int nn = s.n, rr = s.rank;

  if (rd.object(j["phi"], "$.phi", {"matrix", "offset"}, {"matrix"})) {
    auto rat = [&](const Json& e, const std::string& p) { return rd.rational(e, p); };
    if (auto m = rd.matrix<Rational>(j["phi"]["matrix"], "$.phi.matrix", nn, nn, rat)) s.phi_matrix = *m;
    s.phi_offset = RationalVector::Zero(nn);
    if (j["phi"].contains("offset")) {
      const Json& o = j["phi"]["offset"];
      if (!o.is_array() || static_cast<int>(o.size()) != nn) {
        rd.error("$.phi.offset", "expected an array of " + std::to_string(nn) + " entries");
      } else {
        for (int a = 0; a < nn; ++a) {
          if (auto q = rd.rational(o[a], index_path("$.phi.offset", a))) s.phi_offset(a) = *q;
        }
      }
    }
  }
  if (auto m = rd.poly_matrix(j["phiA_matrix"], "$.phiA_matrix", rr, rr, vars)) s.phiA_matrix = *m;
  if (auto m = rd.poly_matrix(j["anchor_matrix"], "$.anchor_matrix", nn, rr, vars)) s.anchor_matrix = *m;
  if (j.contains("structure")) s.structure = rd.structure(j["structure"], "$.structure", rr, vars);
  if (j.contains("pi")) s.pi = rd.bivector(j["pi"], "$.pi", rr, vars);
  if (j.contains("N")) {
    if (auto m = rd.poly_matrix(j["N"], "$.N", rr, rr, vars)) s.N = *m;
  }
  if (j.contains("dual")) {
    const Json& d = j["dual"];
    DualSpec spec;
    if (d.is_string()) {
      const auto v = d.get<std::string>();
      if (v == "trivial") {
        s.dual = spec;
      } else if (v == "from_pi") {
        spec.type = DualSpec::Type::FromPi;
        s.dual = spec;
      } else {
        rd.error("$.dual", "expected \"trivial\", \"from_pi\" or {structure, anchor}");
      }
    } else if (rd.object(d, "$.dual", {"structure", "anchor"}, {"anchor"})) {
      spec.type = DualSpec::Type::Explicit;
      if (d.contains("structure")) spec.structure = rd.structure(d["structure"], "$.dual.structure", rr, vars);
      if (auto m = rd.poly_matrix(d["anchor"], "$.dual.anchor", nn, rr, vars)) {
        spec.anchor = *m;
        s.dual = spec;
      }
    }
  }
  if (j.contains("dirac")) {
    const Json& d = j["dirac"];
    if (rd.object(d, "$.dirac", {"type", "H", "generators"}, {"type"})) {
      DiracSpec spec;
      const auto type = rd.string(d["type"], "$.dirac.type");
      if (type == "graph") {
        if (d.contains("generators")) rd.error("$.dirac.generators", "not allowed for type \"graph\"");
        if (!d.contains("H")) {
          rd.error("$.dirac.H", "missing required key");
        } else if (auto m = rd.poly_matrix(d["H"], "$.dirac.H", rr, rr, vars)) {
          spec.h = *m;
          s.dirac = spec;
        }
      } else if (type == "span") {
        spec.type = DiracSpec::Type::Span;
        if (d.contains("H")) rd.error("$.dirac.H", "not allowed for type \"span\"");
        if (!d.contains("generators")) {
          rd.error("$.dirac.generators", "missing required key");
        } else if (!d["generators"].is_array() || static_cast<int>(d["generators"].size()) != rr) {
          rd.error("$.dirac.generators", "expected " + std::to_string(rr) + " generators");
        } else {
          bool ok = true;
          for (int a = 0; a < rr; ++a) {
            auto g = rd.poly_vector(d["generators"][a], index_path("$.dirac.generators", a), 2 * rr, vars);
            if (g) {
              spec.generators.push_back(*g);
            } else {
              ok = false;
            }
          }
          if (ok) s.dirac = spec;
        }
      } else if (type) {
        rd.error("$.dirac.type", "expected \"graph\" or \"span\"");
      }
    }
  }
  if (j.contains("hierarchy_depth")) s.hierarchy_depth = rd.integer(j["hierarchy_depth"], "$.hierarchy_depth", 0, 8);
  if (j.contains("probe_degree")) s.probe_degree = rd.integer(j["probe_degree"], "$.probe_degree", 0, 6);
  if (j.contains("tasks")) {
    const Json& t = j["tasks"];
    if (!t.is_array()) {
      rd.error("$.tasks", "expected an array of task names");
    } else {
      for (std::size_t a = 0; a < t.size(); ++a) {
        if (auto name = rd.string(t[a], index_path("$.tasks", a))) s.tasks.push_back(*name);
      }
    }
  }
  if (!rd.errors.empty()) throw ScenarioError(rd.errors);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError({{"$", "cannot read " + path}});
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ScenarioError({{"$", std::string("invalid JSON: ") + e.what()}});
  }
  return parse_scenario(j);
}

Json to_json(const Scenario& s) {
  const auto& vars = s.vars;
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["n"] = s.n;
  j["vars"] = vars;
  Json phi_rows = Json::array();
  for (Eigen::Index a = 0; a < s.phi_matrix.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < s.phi_matrix.cols(); ++b) row.push_back(format_rational(s.phi_matrix(a, b)));
    phi_rows.push_back(std::move(row));
  }
  Json offset = Json::array();
  for (Eigen::Index a = 0; a < s.phi_offset.size(); ++a) offset.push_back(format_rational(s.phi_offset(a)));
  j["phi"] = {{"matrix", phi_rows}, {"offset", offset}};
  j["rank"] = s.rank;
  j["phiA_matrix"] = matrix_json(s.phiA_matrix, vars);
  j["anchor_matrix"] = matrix_json(s.anchor_matrix, vars);
  j["structure"] = structure_json(s.structure, vars);
  if (s.pi) {
    Json pi = Json::array();
    for (const auto& e : *s.pi) pi.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"coeff", poly_json(e.coeff, vars)}});
    j["pi"] = pi;
  }
  if (s.N) j["N"] = matrix_json(*s.N, vars);
  if (s.dual) {
    switch (s.dual->type) {
      case DualSpec::Type::Trivial:
        j["dual"] = "trivial";
        break;
      case DualSpec::Type::FromPi:
        j["dual"] = "from_pi";
        break;
      case DualSpec::Type::Explicit:
        j["dual"] = {{"structure", structure_json(s.dual->structure, vars)},
                     {"anchor", matrix_json(s.dual->anchor, vars)}};
        break;
    }
  }
  if (s.dirac) {
    if (s.dirac->type == DiracSpec::Type::Graph) {
      j["dirac"] = {{"type", "graph"}, {"H", matrix_json(s.dirac->h, vars)}};
    } else {
      Json gens = Json::array();
      for (const auto& g : s.dirac->generators) {
        Json v = Json::array();
        for (Eigen::Index a = 0; a < g.size(); ++a) v.push_back(poly_json(g(a), vars));
        gens.push_back(std::move(v));
      }
      j["dirac"] = {{"type", "span"}, {"generators", gens}};
    }
  }
  if (s.hierarchy_depth) j["hierarchy_depth"] = *s.hierarchy_depth;
  if (s.probe_degree) j["probe_degree"] = *s.probe_degree;
  j["tasks"] = s.tasks;
  return j;
}

Workspace::Workspace(Scenario s) : s_(std::move(s)), ctx_(build_algebroid(s_)) {
  if (s_.pi) {
    Graded pi(ctx_.vector_kind(), s_.rank, 2);
    for (const auto& e : *s_.pi) pi += Graded::basis(ctx_.vector_kind(), s_.rank, {e.i, e.j}, e.coeff);
    pi_ = pi;
  }
  std::vector<SchemaError> errors;
  if (s_.dual && s_.dual->type == DualSpec::Type::FromPi && !pi_) {
    errors.push_back({"$.dual", "\"from_pi\" requires key \"pi\""});
  }
  if (s_.dual && s_.dual->type == DualSpec::Type::Explicit) {
    try {
      (void)pair();
    } catch (const std::invalid_argument& e) {
      errors.push_back({"$.dual", e.what()});
    }
  }
  if (errors.empty() && s_.dirac && s_.dirac->type == DiracSpec::Type::Span) {
    try {
      (void)subbundle();
    } catch (const std::invalid_argument& e) {
      errors.push_back({"$.dirac.generators", e.what()});
    } catch (const std::exception&) {
      // dual problems surface when the tasks run
    }
  }
  if (!errors.empty()) throw ScenarioError(errors);
}

BialgebroidPair Workspace::pair() const {
  const HomAlgebroid& a = ctx_.algebroid();
  if (!s_.dual || s_.dual->type == DualSpec::Type::Trivial) return BialgebroidPair(a, trivial_dual(a));
  if (s_.dual->type == DualSpec::Type::FromPi) return BialgebroidPair(a, dual_algebroid(ctx_, *pi_));
  const HomAlgebroid star(ctx_.dual_twist(), s_.dual->anchor, table_of(s_.dual->structure, s_.rank), a.vars());
  return BialgebroidPair(a, star);
}

Subbundle Workspace::subbundle() const {
  const CourantDouble e = CourantDouble::of_pair(pair());
  if (s_.dirac && s_.dirac->type == DiracSpec::Type::Span) return Subbundle(e, s_.dirac->generators);
  return graph(e, graph_matrix());
}

PolyMatrix Workspace::graph_matrix() const {
  if (s_.dirac && s_.dirac->type == DiracSpec::Type::Graph) return s_.dirac->h;
  if (pi_) return sharp_matrix(*pi_);
  return PolyMatrix::Zero(s_.rank, s_.rank);
}

}  // namespace homlie
