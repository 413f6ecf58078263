#ifndef HOMLIE_HOMALG_HPP
#define HOMLIE_HOMALG_HPP

#include <string>
#include <vector>

#include "homlie/exterior.hpp"
#include "homlie/probes.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// Section of the pullback tangent bundle acting as f -> sum_i c_i phi^*(d_i f).
struct PullbackVectorField {
  AffineTwist base;
  PolyVector coeffs;

  Poly operator()(const Poly& f) const;
  friend bool operator==(const PullbackVectorField& a, const PullbackVectorField& b) {
    return a.base == b.base && equal(a.coeffs, b.coeffs);
  }
};

/// Lift of a classical vector field: c_i = phi^* X_i.
PullbackVectorField pullback_section(const AffineTwist& phi, const PolyVector& classical);
/// phi^* o X o (phi^*)^{-1}.
PullbackVectorField ad_twist(const AffineTwist& phi, const PullbackVectorField& x);
/// (phi^*)^{-1} o X o phi^*.
PullbackVectorField ad_twist_inverse(const AffineTwist& phi, const PullbackVectorField& x);
/// phi^* X (phi^*)^{-1} Y (phi^*)^{-1} - phi^* Y (phi^*)^{-1} X (phi^*)^{-1}.
PullbackVectorField bracket_phistar(const AffineTwist& phi, const PullbackVectorField& x,
                                    const PullbackVectorField& y);

/// structure[i][j] = coefficient vector of [e_i, e_j].
using StructureTable = std::vector<std::vector<PolyVector>>;

StructureTable zero_structure(int r);

/// Frame description of a Hom-Lie algebroid candidate (phi, phi_A, bracket, anchor)
/// on a free module. Axioms are not enforced; see check_axioms.
class HomAlgebroid {
 public:
  HomAlgebroid(SectionTwist twist, PolyMatrix anchor, StructureTable structure,
               std::vector<std::string> vars = {});

  int dimension() const { return twist_.base().dimension(); }
  int rank() const { return twist_.rank(); }
  Kind section_kind() const { return twist_.kind(); }
  const AffineTwist& base() const { return twist_.base(); }
  const SectionTwist& twist() const { return twist_; }
  const PolyMatrix& anchor() const { return anchor_; }
  const StructureTable& structure() const { return structure_; }
  const std::vector<std::string>& vars() const { return vars_; }

  PolyVector frame(int i) const;
  Graded section(const PolyVector& v) const { return Graded::section(section_kind(), v); }

  PullbackVectorField anchor_of(const PolyVector& x) const;
  /// a(X)(f).
  Poly act(const PolyVector& x, const Poly& f) const;
  /// Bilinear extension of the frame brackets by the Leibniz rule.
  PolyVector bracket(const PolyVector& x, const PolyVector& y) const;

  std::string describe(const PolyVector& v) const;
  std::string describe(const Graded& g) const;
  std::string describe(const Poly& f) const;

 private:
  SectionTwist twist_;
  PolyMatrix anchor_;
  StructureTable structure_;
  std::vector<std::string> vars_;
};

inline Graded bracket(const HomAlgebroid& a, const Graded& x, const Graded& y) {
  return a.section(a.bracket(x.vector(), y.vector()));
}

/// Verifies function-linearity and the homomorphism property of the twist,
/// Hom-Jacobi, the Leibniz rule and both anchor conditions, in that order.
/// Throws std::invalid_argument for a non-antisymmetric structure table.
Report check_axioms(const HomAlgebroid& a, const ProbeSet& probes);

/// Pullback tangent bundle: anchor = id, twist = Ad, bracket from [.,.]_{phi^*}.
HomAlgebroid make_pullback_tangent(const AffineTwist& phi, std::vector<std::string> vars = {});
/// Pullback of TM + R: frame (e_1..e_n, u), u spanning the trivial factor.
HomAlgebroid make_tm_r(const AffineTwist& phi, std::vector<std::string> vars = {});

/// Bracket on pullback sections (X, h) of TM + R by the closed formula
/// ([X,Y]_{phi^*}, X(k) - Y(h)).
std::pair<PullbackVectorField, Poly> tm_r_formula_bracket(const AffineTwist& phi, const PullbackVectorField& x,
                                                          const Poly& h, const PullbackVectorField& y,
                                                          const Poly& k);

/// Multi-indexed probe sections: frame elements, then f*e_i for non-constant probes f.
std::vector<PolyVector> probe_sections(int r, const ProbeSet& probes);

}  // namespace homlie

#endif  // HOMLIE_HOMALG_HPP
