#ifndef HOMLIE_CATALOG_HPP
#define HOMLIE_CATALOG_HPP

#include <string>
#include <vector>

#include "homlie/scenario.hpp"

namespace homlie {

struct FixtureEntry {
  std::string name;
  /// "valid" or "negative" first, then topic tags.
  std::vector<std::string> tags;
  std::string note;
  Scenario scenario;

  bool negative() const { return !tags.empty() && tags.front() == "negative"; }
  bool has_tag(const std::string& t) const;
};

/// Scenario fields for an algebroid; the optional keys stay empty.
Scenario scenario_of(const HomAlgebroid& a, std::string name);

/// Built-in instances S0-S3 and the positive and negative fixtures built on them.
/// Every valid entry's tasks pass and every negative entry has a failing task.
const std::vector<FixtureEntry>& fixture_catalog();
const FixtureEntry* find_fixture(const std::string& name);

}  // namespace homlie

#endif  // HOMLIE_CATALOG_HPP
