#ifndef HOMLIE_REPORT_HPP
#define HOMLIE_REPORT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

/// Concrete counterexample: named inputs and the nonzero residual.
struct Witness {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string residual;
};

enum class Role {
  Assertion,    // must hold for the report to pass
  Observation,  // recorded truth value of a condition, never fails the report
};

struct CheckResult {
  std::string name;
  bool holds = true;
  Role role = Role::Assertion;
  std::size_t cases = 0;
  std::optional<Witness> witness;
  std::string note;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  CheckResult& add(CheckResult c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }
  void append(const Report& other, const std::string& prefix = "");

  bool passed() const;
  /// First failing assertion in insertion order.
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;
  /// Truth value of a named check; throws if absent.
  bool holds(const std::string& name) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

/// Thrown when an operation's precondition fails; carries the failing report.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Thrown when an identity an operation asserts internally is violated.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(const std::string& what, Witness witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Accumulates cases for one identity and keeps the first nonzero residual.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name, Role role = Role::Assertion) {
    result_.name = std::move(name);
    result_.role = role;
  }

  /// Records one case; `residual_zero` false makes it the witness if none yet.
  template <typename InputsFn, typename ResidualFn>
  void record(bool residual_zero, InputsFn&& inputs, ResidualFn&& residual) {
    ++result_.cases;
    if (residual_zero || result_.witness) {
      if (!residual_zero) result_.holds = false;
      return;
    }
    result_.holds = false;
    result_.witness = Witness{inputs(), residual()};
  }
  void fail(Witness w) {
    ++result_.cases;
    if (!result_.witness) result_.witness = std::move(w);
    result_.holds = false;
  }
  void pass() { ++result_.cases; }
  bool holds() const { return result_.holds; }
  CheckBuilder& note(std::string n) {
    result_.note = std::move(n);
    return *this;
  }
  CheckResult done() const { return result_; }

 private:
  CheckResult result_;
};

}  // namespace homlie

#endif  // HOMLIE_REPORT_HPP
