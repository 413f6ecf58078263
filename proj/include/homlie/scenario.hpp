#ifndef HOMLIE_SCENARIO_HPP
#define HOMLIE_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homlie/dirac.hpp"
#include "homlie/nijenhuis.hpp"

namespace homlie {

using Json = nlohmann::ordered_json;

struct SchemaError {
  std::string path;
  std::string message;
};

/// Malformed scenario input; lists every problem with its JSON path.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<SchemaError> errors);
  const std::vector<SchemaError>& errors() const { return errors_; }

 private:
  std::vector<SchemaError> errors_;
};

/// [e_i, e_j] has coefficient `coeff` on e_k; indices are 0-based here, 1-based in JSON.
struct StructureEntry {
  int i = 0, j = 0, k = 0;
  Poly coeff;
};

/// coeff * e_i ^ e_j with i < j.
struct BivectorEntry {
  int i = 0, j = 0;
  Poly coeff;
};

struct DualSpec {
  enum class Type { Trivial, FromPi, Explicit };
  Type type = Type::Trivial;
  std::vector<StructureEntry> structure;
  PolyMatrix anchor;
};

struct DiracSpec {
  enum class Type { Graph, Span };
  Type type = Type::Graph;
  PolyMatrix h;
  std::vector<PolyVector> generators;
};

struct Scenario {
  std::string name;
  int n = 0;
  std::vector<std::string> vars;
  RationalMatrix phi_matrix;
  RationalVector phi_offset;
  int rank = 0;
  PolyMatrix phiA_matrix;
  PolyMatrix anchor_matrix;
  std::vector<StructureEntry> structure;
  std::optional<std::vector<BivectorEntry>> pi;
  std::optional<PolyMatrix> N;
  std::optional<DualSpec> dual;
  std::optional<DiracSpec> dirac;
  std::optional<int> hierarchy_depth;
  std::optional<int> probe_degree;
  std::vector<std::string> tasks;
};

/// Throws ScenarioError on unknown keys, wrong types or shapes, and unparsable entries.
Scenario parse_scenario(const Json& j);
/// Reads and parses a file; unreadable or invalid JSON is reported at path "$".
Scenario load_scenario(const std::string& path);
Json to_json(const Scenario& s);

/// The objects a scenario describes, built and cross-checked.
class Workspace {
 public:
  /// Throws ScenarioError when the data does not form an algebroid instance
  /// (non-invertible twists, structure entries out of range, ...).
  explicit Workspace(Scenario s);

  const Scenario& scenario() const { return s_; }
  const HomAlgebroid& algebroid() const { return ctx_.algebroid(); }
  const CartanContext& context() const { return ctx_; }
  const std::optional<Graded>& pi() const { return pi_; }
  const std::optional<PolyMatrix>& n() const { return s_.N; }
  int hierarchy_depth() const { return s_.hierarchy_depth.value_or(3); }

  /// The dual named by "dual" (trivial if absent). FromPi throws PreconditionError
  /// when pi is not Hom-Poisson.
  BialgebroidPair pair() const;
  /// Subbundle of the double named by "dirac".
  Subbundle subbundle() const;
  /// "dirac" graph matrix if given, else pi#, else zero.
  PolyMatrix graph_matrix() const;

 private:
  Scenario s_;
  CartanContext ctx_;
  std::optional<Graded> pi_;
};

}  // namespace homlie

#endif  // HOMLIE_SCENARIO_HPP
