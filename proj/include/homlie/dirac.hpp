#ifndef HOMLIE_DIRAC_HPP
#define HOMLIE_DIRAC_HPP

#include <vector>

#include "homlie/courant.hpp"

namespace homlie {

enum class Membership {
  Member,
  NotMember,
  /// In the span over rational functions only.
  NotPolynomialMember,
};

struct SpanSolution {
  Membership status = Membership::NotMember;
  /// Polynomial coefficients when status is Member.
  PolyVector coefficients;
  /// Cramer data: target * denominator - generators * numerators is the residual.
  PolyVector numerators;
  Poly denominator;
  PolyVector residual;
};

/// Rank-r subbundle of a rank-2r Courant candidate, given by r generating sections.
class Subbundle {
 public:
  /// Throws std::invalid_argument for a wrong generator count or length, or rank-deficient generators.
  Subbundle(CourantDouble host, std::vector<PolyVector> generators);

  const CourantDouble& host() const { return host_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<PolyVector>& generators() const { return generators_; }
  /// 2r x r matrix with the generators as columns.
  const PolyMatrix& matrix() const { return matrix_; }
  /// Rows of the first nonzero r x r minor and its determinant.
  const std::vector<int>& pivot_rows() const { return pivots_; }
  const Poly& pivot_minor() const { return minor_; }

  PolyVector section(const PolyVector& coeffs) const { return matrix_ * coeffs; }
  /// Exact membership of a section in the span of the generators.
  SpanSolution solve(const PolyVector& target) const;

  std::string describe(const PolyVector& u) const { return host_.describe(u); }

 private:
  CourantDouble host_;
  std::vector<PolyVector> generators_;
  PolyMatrix matrix_;
  std::vector<int> pivots_;
  Poly minor_;
};

/// <<g_i, g_j>> = 0 for all generator pairs.
Report is_isotropic(const Subbundle& l);
/// phi_E(g_i) in the span for each generator.
Report is_phi_invariant(const Subbundle& l);
/// [[g_i, g_j]] in the span on generator pairs, and on function multiples of them for probe functions.
Report is_integrable(const Subbundle& l, const ProbeSet& probes);
/// The three checks together plus the observation "restricted twist invertible".
Report is_hom_dirac(const Subbundle& l, const ProbeSet& probes);

/// Matrix of phi_E restricted to L in the generator frame; PreconditionError unless invariant.
SectionTwist restricted_twist(const Subbundle& l);
bool restricted_twist_invertible(const Subbundle& l);

/// (L, phi, phi_E|L, [[.,.]]|L, rho|L) in the generator frame. PreconditionError unless
/// is_hom_dirac passes and the restricted twist is invertible.
HomAlgebroid dirac_to_algebroid(const Subbundle& l, const ProbeSet& probes);

/// Generators H eps^i + eps^i for a matrix H from the dual frame to the primal one.
Subbundle graph(const CourantDouble& e, const PolyMatrix& h);

/// d_{A*} pi + (1/2)[pi, pi]_A; PreconditionError unless pi is phiA-invariant.
Graded maurer_cartan_defect(const BialgebroidPair& p, const Graded& pi);

/// Dirac verdict on graph(H) in the double of p against: H skew, the bivector of H
/// phiA-invariant, and a vanishing Maurer-Cartan defect. Asserts that the verdicts agree
/// and that isotropy of the graph matches skew-symmetry of H.
Report graph_theorem_check(const BialgebroidPair& p, const PolyMatrix& h, const ProbeSet& probes);

}  // namespace homlie

#endif  // HOMLIE_DIRAC_HPP
