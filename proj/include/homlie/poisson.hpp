#ifndef HOMLIE_POISSON_HPP
#define HOMLIE_POISSON_HPP

#include "homlie/calculus.hpp"

namespace homlie {

/// Matrix H of pi^sharp in the frames: (pi^sharp alpha)_a = sum_j H(a, j) alpha_j,
/// so that (X ^ Y)^sharp alpha = <alpha, X> Y - <alpha, Y> X.
PolyMatrix sharp_matrix(const Graded& pi);
/// Bivector whose sharp is H; throws std::invalid_argument unless H is skew.
Graded bivector_from_sharp(Kind kind, const PolyMatrix& h);

Graded sharp(const CartanContext& ctx, const Graded& pi, const Graded& alpha);

/// Schouten square and phi_A-invariance.
Report is_hom_poisson(const CartanContext& ctx, const Graded& pi);

/// phi_A o pi^sharp = pi^sharp o phi_A^dagger on probe coforms, and that this
/// agrees with phi_A-invariance.
Report sharp_commutes(const CartanContext& ctx, const Graded& pi, const ProbeSet& probes);

/// L_{H xi} eta - L_{H eta} xi - d <H xi, eta> for a matrix H from coforms to sections.
Graded bracket_sharp(const CartanContext& ctx, const PolyMatrix& h, const Graded& xi, const Graded& eta);

/// [xi, eta]_pi = L_{pi# xi} eta - L_{pi# eta} xi - d <pi# xi, eta>.
Graded bracket_pi(const CartanContext& ctx, const Graded& pi, const Graded& xi, const Graded& eta);

/// (A*, phi, phi_A^dagger, [.,.]_pi, a o pi^sharp) without any check on pi.
HomAlgebroid induced_dual(const CartanContext& ctx, const Graded& pi);
/// Same, after is_hom_poisson; throws PreconditionError otherwise.
HomAlgebroid dual_algebroid(const CartanContext& ctx, const Graded& pi);

/// The differential of the induced dual applied to a multivector. Requires
/// phi_A-invariance (PreconditionError) and throws IdentityViolation if the
/// result differs from [pi, D].
Graded d_pi(const CartanContext& ctx, const Graded& pi, const Graded& d);

struct PiPiSides {
  Graded lhs;  // (1/2)[pi,pi](phi^dagger alpha, phi^dagger beta, .)
  Graded rhs;  // [pi# alpha, pi# beta] - pi# [alpha, beta]_pi
};
PiPiSides pi_pi_sides(const CartanContext& ctx, const Graded& pi, const Graded& alpha, const Graded& beta);
/// Residual of the identity above; requires phi_A-invariance.
Report pi_pi_identity(const CartanContext& ctx, const Graded& pi, const Graded& alpha, const Graded& beta);

struct PoissonLift {
  HomAlgebroid algebroid;
  Graded lifted;
  bool classical_square_zero = false;
  bool classical_invariant = false;
  Report hom_side;
  /// Classical pair valid iff the lifted structure is Hom-Poisson.
  bool correspondence_holds() const {
    return (classical_square_zero && classical_invariant) == hom_side.passed();
  }
};
/// Pullback tangent algebroid of phi with the lift phi^* pi_cl.
PoissonLift classical_poisson_lift(const AffineTwist& phi, const Graded& pi_classical);

/// Bialgebroid compatibility of (A, A*_pi); PreconditionError if pi is not Hom-Poisson.
Report check_bialgebroid_pair(const CartanContext& ctx, const Graded& pi, const ProbeSet& probes);

}  // namespace homlie

#endif  // HOMLIE_POISSON_HPP
