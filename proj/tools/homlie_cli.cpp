#include <iostream>

#include <CLI11.hpp>

#include "homlie/catalog.hpp"
#include "homlie/runner.hpp"

using namespace homlie;

namespace {

constexpr int kMalformed = 2;
const std::string kFixturePrefix = "fixture:";

void print_errors(const std::vector<SchemaError>& errors, const std::string& format) {
  if (format == "json") {
    Json j;
    Json list = Json::array();
    for (const auto& e : errors) list.push_back({{"path", e.path}, {"message", e.message}});
    j["errors"] = list;
    j["exit_code"] = kMalformed;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& e : errors) std::cerr << "error: " << e.path << ": " << e.message << "\n";
}

Scenario resolve(const std::string& arg) {
  if (arg.rfind(kFixturePrefix, 0) == 0) {
    const FixtureEntry* f = find_fixture(arg.substr(kFixturePrefix.size()));
    if (!f) throw ScenarioError({{"$", "no built-in fixture named \"" + arg.substr(kFixturePrefix.size()) + "\""}});
    return f->scenario;
  }
  return load_scenario(arg);
}

int check(const std::string& arg, const std::vector<std::string>& tasks, int probe_degree, const std::string& format,
          bool timing) {
  try {
    Scenario s = resolve(arg);
    const auto plan = tasks.empty() ? plan_tasks(s, s.tasks, "$.tasks") : plan_tasks(s, tasks, "--task");
    const int degree = probe_degree >= 0 ? probe_degree : s.probe_degree.value_or(kDefaultProbeDegree);
    const Workspace w(std::move(s));
    const RunReport r = run(w, plan, degree);
    if (format == "json") {
      std::cout << format_json(r, timing).dump(2) << "\n";
    } else {
      std::cout << format_text(r, timing);
    }
    return r.exit_code();
  } catch (const ScenarioError& e) {
    print_errors(e.errors(), format);
    return kMalformed;
  }
}

int fixtures(const std::string& format, const std::vector<std::string>& tags) {
  std::vector<const FixtureEntry*> chosen;
  for (const auto& f : fixture_catalog()) {
    if (std::all_of(tags.begin(), tags.end(), [&](const std::string& t) { return f.has_tag(t); })) chosen.push_back(&f);
  }
  if (format == "json") {
    Json list = Json::array();
    for (const auto* f : chosen) {
      list.push_back({{"name", f->name}, {"tags", f->tags}, {"note", f->note}, {"scenario", to_json(f->scenario)}});
    }
    std::cout << list.dump(2) << "\n";
  } else {
    for (const auto* f : chosen) {
      std::string tagline;
      for (const auto& t : f->tags) tagline += (tagline.empty() ? "" : ",") + t;
      std::cout << f->name << "  [" << tagline << "]  " << f->note << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for Hom-Lie algebroid structures"};
  app.require_subcommand(1);

  std::string scenario;
  std::vector<std::string> tasks;
  int probe_degree = -1;
  std::string format = "text";
  bool timing = false;
  CLI::App* chk = app.add_subcommand("check", "Run the tasks of a scenario file (or fixture:NAME)");
  chk->add_option("scenario", scenario, "Scenario JSON path or fixture:NAME")->required();
  chk->add_option("--task", tasks, "Task to run instead of the scenario's list (repeatable; \"full\" runs all)");
  chk->add_option("--probe-degree", probe_degree, "Maximum degree of probe monomials")->check(CLI::Range(0, 6));
  chk->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  chk->add_flag("--timing", timing, "Include per-task wall time (makes output nondeterministic)");

  std::string fx_format = "text";
  std::vector<std::string> tags;
  CLI::App* fx = app.add_subcommand("fixtures", "List the built-in fixture catalog");
  fx->add_option("--format", fx_format, "Output format")->check(CLI::IsMember({"text", "json"}));
  fx->add_option("--tag", tags, "Keep fixtures carrying every given tag (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }
  if (chk->parsed()) return check(scenario, tasks, probe_degree, format, timing);
  return fixtures(fx_format, tags);
}
