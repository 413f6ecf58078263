#ifndef HOMLIE_CALCULUS_HPP
#define HOMLIE_CALCULUS_HPP

#include <vector>

#include "homlie/homalg.hpp"

namespace homlie {

/// Read-only view of an algebroid with its twists and their inverses cached.
class CartanContext {
 public:
  explicit CartanContext(HomAlgebroid a);

  const HomAlgebroid& algebroid() const { return a_; }
  int rank() const { return a_.rank(); }
  /// Kind of multivectors (sections of A and their wedges).
  Kind vector_kind() const { return a_.section_kind(); }
  /// Kind of forms on A.
  Kind form_kind() const { return dual(a_.section_kind()); }

  const SectionTwist& twist() const { return a_.twist(); }
  const SectionTwist& twist_inverse() const { return inverse_; }
  const SectionTwist& dual_twist() const { return dual_; }
  const SectionTwist& dual_twist_inverse() const { return dual_inverse_; }

  Graded frame(int i) const { return Graded::basis(vector_kind(), rank(), {i}); }
  Graded coframe(int i) const { return Graded::basis(form_kind(), rank(), {i}); }

 private:
  HomAlgebroid a_;
  SectionTwist inverse_;
  SectionTwist dual_;
  SectionTwist dual_inverse_;
};

/// Right-hand side of the defining formula of d_A evaluated on arbitrary sections
/// X_0..X_k (as coefficient vectors).
Poly evaluate_differential(const CartanContext& ctx, const Graded& omega, const std::vector<PolyVector>& args);

/// d_A, with coefficients read off on increasing frame tuples.
Graded differential(const CartanContext& ctx, const Graded& omega);

/// d^2 = 0, commutation with the dual twist, graded Leibniz rule, and
/// function-linearity of the defining formula in each argument.
Report check_differential_props(const CartanContext& ctx, const ProbeSet& probes);

/// iota_D omega = contraction of phi_A(D) into phi_A^dagger(omega); degree m - k.
Graded interior(const CartanContext& ctx, const Graded& d, const Graded& omega);

/// L_X on forms from the twisted Cartan formula.
Graded lie_derivative_form(const CartanContext& ctx, const Graded& x, const Graded& eta);

/// L_X D = [X, D].
Graded lie_derivative_multivector(const CartanContext& ctx, const Graded& x, const Graded& d);

/// Slotwise Lie derivative of a mixed tensor, other slots twisted.
Tensor lie_derivative_tensor(const CartanContext& ctx, const Graded& x, const Tensor& t);

/// Graded Schouten bracket extending the algebroid bracket; degree k + l - 1.
Graded schouten(const CartanContext& ctx, const Graded& d1, const Graded& d2);

/// Split of a multivector into its single-term pieces f*e_I.
std::vector<Graded> monomial_terms(const Graded& g);

}  // namespace homlie

#endif  // HOMLIE_CALCULUS_HPP
