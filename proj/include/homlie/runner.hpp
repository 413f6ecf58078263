#ifndef HOMLIE_RUNNER_HPP
#define HOMLIE_RUNNER_HPP

#include <string>
#include <vector>

#include "homlie/scenario.hpp"

namespace homlie {

enum class Verdict { Pass, Fail, Error };

std::string to_string(Verdict v);

struct TaskOutcome {
  std::string task;
  Verdict verdict = Verdict::Pass;
  Report report;
  /// Exception text for Error verdicts and precondition failures.
  std::string message;
  double milliseconds = 0;
};

struct RunReport {
  std::string scenario;
  int probe_degree = kDefaultProbeDegree;
  std::vector<TaskOutcome> tasks;
  /// 0 all pass, 1 some task failed or errored.
  int exit_code() const;
};

/// Task names in the order "full" runs them.
const std::vector<std::string>& task_names();
/// Scenario keys a task needs ("pi", "N", "dirac").
std::vector<std::string> task_requirements(const std::string& task);

/// Expands "full" to every task whose requirements the scenario meets and validates
/// names and requirements. Errors are reported at path `origin`[i].
std::vector<std::string> plan_tasks(const Scenario& s, const std::vector<std::string>& names,
                                    const std::string& origin);

TaskOutcome run_task(const Workspace& w, const std::string& task, const ProbeSet& probes);
RunReport run(const Workspace& w, const std::vector<std::string>& plan, int probe_degree);

std::string format_text(const RunReport& r, bool timing);
Json format_json(const RunReport& r, bool timing);

}  // namespace homlie

#endif  // HOMLIE_RUNNER_HPP
