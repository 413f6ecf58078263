#include "homlie/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "homlie/poisson.hpp"

namespace homlie {

namespace {

using TaskFn = std::function<Report(const Workspace&, const ProbeSet&)>;

struct TaskSpec {
  std::string name;
  std::vector<std::string> needs;
  TaskFn fn;
};

Report single(const std::string& name, bool holds, const Witness& w) {
  Report r(name);
  CheckBuilder b(name);
  if (holds) {
    b.pass();
  } else {
    b.fail(w);
  }
  r.add(b.done());
  return r;
}

Report axioms_of(const HomAlgebroid& a, const ProbeSet& probes) { return check_axioms(a, probes); }

Report pi_pi_task(const Workspace& w, const ProbeSet& probes) {
  const CartanContext& ctx = w.context();
  const int r = ctx.rank();
  std::vector<Graded> coforms;
  for (int i = 0; i < r; ++i) coforms.push_back(ctx.coframe(i));
  for (const Poly& f : probes.nonconstant()) {
    for (int i = 0; i < r; ++i) coforms.push_back(ctx.coframe(i) * f);
  }
  CheckBuilder b("pi-pi identity");
  for (int i = 0; i < r; ++i) {
    for (const Graded& beta : coforms) {
      const Report one = pi_pi_identity(ctx, *w.pi(), ctx.coframe(i), beta);
      const CheckResult& c = one.checks().back();
      if (c.holds) {
        b.pass();
      } else {
        b.fail(*c.witness);
      }
    }
  }
  Report out("pi-pi identity");
  out.add(b.done());
  return out;
}

const std::vector<TaskSpec>& registry() {
  static const std::vector<TaskSpec> tasks{
      {"check_axioms", {}, [](const Workspace& w, const ProbeSet& p) { return axioms_of(w.algebroid(), p); }},
      {"check_differential_props", {},
       [](const Workspace& w, const ProbeSet& p) { return check_differential_props(w.context(), p); }},
      {"is_hom_poisson", {"pi"}, [](const Workspace& w, const ProbeSet&) { return is_hom_poisson(w.context(), *w.pi()); }},
      {"sharp_commutes", {"pi"},
       [](const Workspace& w, const ProbeSet& p) { return sharp_commutes(w.context(), *w.pi(), p); }},
      {"pi_pi_identity", {"pi"}, pi_pi_task},
      {"dual_algebroid", {"pi"},
       [](const Workspace& w, const ProbeSet& p) { return axioms_of(dual_algebroid(w.context(), *w.pi()), p); }},
      {"check_bialgebroid_pair", {"pi"},
       [](const Workspace& w, const ProbeSet& p) { return check_bialgebroid_pair(w.context(), *w.pi(), p); }},
      {"is_hom_nijenhuis", {"N"},
       [](const Workspace& w, const ProbeSet& p) { return is_hom_nijenhuis(w.context(), *w.n(), p); }},
      {"lemma_checks", {"N"},
       [](const Workspace& w, const ProbeSet& p) { return lemma_checks(w.context(), *w.n(), *w.n(), p); }},
      {"deformed_algebroid", {"N"},
       [](const Workspace& w, const ProbeSet& p) { return axioms_of(deformed_algebroid(w.context(), *w.n(), p), p); }},
      {"d_n_props", {"N"}, [](const Workspace& w, const ProbeSet& p) { return d_n_props(w.context(), *w.n(), p); }},
      {"is_hpn", {"pi", "N"},
       [](const Workspace& w, const ProbeSet& p) { return is_hpn(w.context(), *w.pi(), *w.n(), p); }},
      {"hierarchy", {"pi", "N"},
       [](const Workspace& w, const ProbeSet& p) {
         return hierarchy(w.context(), *w.pi(), *w.n(), w.hierarchy_depth(), p).report;
       }},
      {"defect_identities", {"pi", "N"},
       [](const Workspace& w, const ProbeSet& p) { return defect_identities(w.context(), *w.pi(), *w.n(), p); }},
      {"hpn_bialgebroid_equiv", {"pi", "N"},
       [](const Workspace& w, const ProbeSet& p) { return hpn_bialgebroid_equiv(w.context(), *w.pi(), *w.n(), p); }},
      {"check_bialgebroid", {}, [](const Workspace& w, const ProbeSet& p) { return check_bialgebroid(w.pair(), p); }},
      {"check_courant_axioms", {},
       [](const Workspace& w, const ProbeSet& p) { return check_courant_axioms(courant_double(w.pair(), p), p); }},
      {"is_hom_dirac", {"dirac"}, [](const Workspace& w, const ProbeSet& p) { return is_hom_dirac(w.subbundle(), p); }},
      {"dirac_to_algebroid", {"dirac"},
       [](const Workspace& w, const ProbeSet& p) { return axioms_of(dirac_to_algebroid(w.subbundle(), p), p); }},
      {"maurer_cartan_defect", {"pi"},
       [](const Workspace& w, const ProbeSet&) {
         const BialgebroidPair pair = w.pair();
         const Graded d = maurer_cartan_defect(pair, *w.pi());
         const HomAlgebroid& a = w.algebroid();
         return single("Maurer-Cartan defect vanishes", d.is_zero(),
                       Witness{{{"pi", a.describe(*w.pi())}}, a.describe(d)});
       }},
      {"graph_theorem_check", {},
       [](const Workspace& w, const ProbeSet& p) { return graph_theorem_check(w.pair(), w.graph_matrix(), p); }},
  };
  return tasks;
}

const TaskSpec* find_task(const std::string& name) {
  for (const auto& t : registry()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool has_key(const Scenario& s, const std::string& key) {
  if (key == "pi") return s.pi.has_value();
  if (key == "N") return s.N.has_value();
  if (key == "dirac") return s.dirac.has_value();
  return false;
}

Report precondition_report(const PreconditionError& e) {
  Report r(e.what());
  for (CheckResult c : e.report().checks()) {
    c.name = "precondition: " + c.name;
    r.add(std::move(c));
  }
  return r;
}

void write_check_text(std::ostringstream& out, const CheckResult& c) {
  const bool obs = c.role == Role::Observation;
  out << "  " << (c.holds ? "ok  " : (obs ? "no  " : "FAIL")) << " " << c.name;
  if (obs) out << " [observation]";
  out << " (" << c.cases << (c.cases == 1 ? " case" : " cases") << ")";
  if (!c.note.empty()) out << " note: " << c.note;
  out << "\n";
  if (c.witness && !c.holds) {
    out << "       " << c.name << " residual: " << c.witness->residual << "\n";
    for (const auto& [k, v] : c.witness->inputs) out << "       input " << k << " = " << v << "\n";
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Error:
      return "error";
  }
  return "error";
}

int RunReport::exit_code() const {
  return std::all_of(tasks.begin(), tasks.end(), [](const TaskOutcome& t) { return t.verdict == Verdict::Pass; }) ? 0
                                                                                                                  : 1;
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& t : registry()) out.push_back(t.name);
    return out;
  }();
  return names;
}

std::vector<std::string> task_requirements(const std::string& task) {
  const TaskSpec* t = find_task(task);
  if (!t) throw std::invalid_argument("unknown task " + task);
  return t->needs;
}

std::vector<std::string> plan_tasks(const Scenario& s, const std::vector<std::string>& names,
                                    const std::string& origin) {
  std::vector<SchemaError> errors;
  std::vector<std::string> plan;
  auto push = [&](const std::string& t) {
    if (std::find(plan.begin(), plan.end(), t) == plan.end()) plan.push_back(t);
  };
  const std::vector<std::string> requested = names.empty() ? std::vector<std::string>{"full"} : names;
  for (std::size_t i = 0; i < requested.size(); ++i) {
    const std::string path = origin + "[" + std::to_string(i) + "]";
    const std::string& name = requested[i];
    if (name == "full") {
      for (const auto& t : registry()) {
        if (std::all_of(t.needs.begin(), t.needs.end(), [&](const std::string& k) { return has_key(s, k); })) {
          push(t.name);
        }
      }
      continue;
    }
    const TaskSpec* t = find_task(name);
    if (!t) {
      errors.push_back({path, "unknown task \"" + name + "\""});
      continue;
    }
    bool ok = true;
    for (const auto& k : t->needs) {
      if (!has_key(s, k)) {
        errors.push_back({path, "task \"" + name + "\" requires key \"" + k + "\""});
        ok = false;
      }
    }
    if (ok) push(name);
  }
  if (!errors.empty()) throw ScenarioError(errors);
  return plan;
}

TaskOutcome run_task(const Workspace& w, const std::string& task, const ProbeSet& probes) {
  const TaskSpec* spec = find_task(task);
  if (!spec) throw std::invalid_argument("unknown task " + task);
  TaskOutcome out;
  out.task = task;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.report = spec->fn(w, probes);
    out.verdict = out.report.passed() ? Verdict::Pass : Verdict::Fail;
  } catch (const PreconditionError& e) {
    out.report = precondition_report(e);
    out.message = e.what();
    out.verdict = Verdict::Fail;
  } catch (const IdentityViolation& e) {
    CheckResult c;
    c.name = e.what();
    c.holds = false;
    c.cases = 1;
    c.witness = e.witness();
    out.report.add(c);
    out.message = e.what();
    out.verdict = Verdict::Fail;
  } catch (const std::exception& e) {
    out.message = e.what();
    out.verdict = Verdict::Error;
  }
  out.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

RunReport run(const Workspace& w, const std::vector<std::string>& plan, int probe_degree) {
  RunReport r;
  r.scenario = w.scenario().name;
  r.probe_degree = probe_degree;
  const ProbeSet probes = make_probes(w.scenario().n, probe_degree);
  for (const auto& t : plan) r.tasks.push_back(run_task(w, t, probes));
  return r;
}

std::string format_text(const RunReport& r, bool timing) {
  std::ostringstream out;
  out << "scenario " << (r.scenario.empty() ? "(unnamed)" : r.scenario) << ", probe degree " << r.probe_degree
      << "\n";
  int passed = 0;
  for (const auto& t : r.tasks) {
    if (t.verdict == Verdict::Pass) ++passed;
    out << (t.verdict == Verdict::Pass ? "PASS " : (t.verdict == Verdict::Fail ? "FAIL " : "ERROR ")) << t.task;
    if (timing) out << " [" << static_cast<long long>(t.milliseconds + 0.5) << " ms]";
    out << "\n";
    if (!t.message.empty()) out << "  " << t.message << "\n";
    for (const auto& c : t.report.checks()) write_check_text(out, c);
  }
  out << passed << "/" << r.tasks.size() << " tasks passed\n";
  return out.str();
}

Json format_json(const RunReport& r, bool timing) {
  Json j;
  j["scenario"] = r.scenario;
  j["probe_degree"] = r.probe_degree;
  Json tasks = Json::array();
  for (const auto& t : r.tasks) {
    Json jt;
    jt["task"] = t.task;
    jt["verdict"] = to_string(t.verdict);
    if (!t.message.empty()) jt["message"] = t.message;
    Json checks = Json::array();
    for (const auto& c : t.report.checks()) {
      Json jc;
      jc["name"] = c.name;
      jc["role"] = c.role == Role::Assertion ? "assertion" : "observation";
      jc["holds"] = c.holds;
      jc["cases"] = c.cases;
      if (!c.note.empty()) jc["note"] = c.note;
      if (c.witness && !c.holds) {
        Json inputs = Json::array();
        for (const auto& [k, v] : c.witness->inputs) inputs.push_back({{"name", k}, {"value", v}});
        jc["witness"] = {{"inputs", inputs}, {"residual", c.witness->residual}};
      }
      checks.push_back(std::move(jc));
    }
    jt["checks"] = std::move(checks);
    if (timing) jt["milliseconds"] = static_cast<long long>(t.milliseconds + 0.5);
    tasks.push_back(std::move(jt));
  }
  j["tasks"] = std::move(tasks);
  j["exit_code"] = r.exit_code();
  return j;
}

}  // namespace homlie
