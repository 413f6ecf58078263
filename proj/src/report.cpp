#include "homlie/report.hpp"

namespace homlie {

void Report::append(const Report& other, const std::string& prefix) {
  for (CheckResult c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (c.role == Role::Assertion && !c.holds) return &c;
  }
  return nullptr;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::holds(const std::string& name) const {
  const CheckResult* c = find(name);
  if (c == nullptr) throw std::out_of_range("report has no check named " + name);
  return c->holds;
}

}  // namespace homlie
