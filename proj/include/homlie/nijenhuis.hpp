#ifndef HOMLIE_NIJENHUIS_HPP
#define HOMLIE_NIJENHUIS_HPP

#include <vector>

#include "homlie/poisson.hpp"

namespace homlie {

/// Endomorphism of the sections of an algebroid with its transpose and twisted image cached.
class NijenhuisCandidate {
 public:
  /// Throws std::invalid_argument if the matrix does not fit the algebroid.
  NijenhuisCandidate(const CartanContext& ctx, PolyMatrix n);

  const EndoMap& map() const { return n_; }
  const EndoMap& transpose() const { return transpose_; }
  /// phi_A(N).
  const EndoMap& twisted() const { return twisted_; }
  const PolyMatrix& matrix() const { return n_.matrix; }

 private:
  EndoMap n_;
  EndoMap transpose_;
  EndoMap twisted_;
};

/// [NX,NY] - N[NX,Y] - N[X,NY] + N^2[X,Y].
PolyVector torsion(const CartanContext& ctx, const PolyMatrix& n, const PolyVector& x, const PolyVector& y);
/// Torsion on frame pairs.
StructureTable torsion_table(const CartanContext& ctx, const PolyMatrix& n);

/// Torsion on frame pairs, phiA-invariance, tensoriality of the torsion when N is
/// invariant, and agreement of invariance with N o phi_A = phi_A o N.
Report is_hom_nijenhuis(const CartanContext& ctx, const PolyMatrix& n, const ProbeSet& probes);

/// The five twisted-image identities for N and N' on frame and probe inputs.
Report lemma_checks(const CartanContext& ctx, const PolyMatrix& n, const PolyMatrix& n2, const ProbeSet& probes);

/// [NX,Y] + [X,NY] - N[X,Y].
PolyVector deformed_bracket(const CartanContext& ctx, const PolyMatrix& n, const PolyVector& x, const PolyVector& y);

/// (A, phi, phi_A, [.,.]_N, a o N) with frame brackets from deformed_bracket; no check on N.
HomAlgebroid induced_deformation(const CartanContext& ctx, const PolyMatrix& n);
/// Same, after is_hom_nijenhuis; throws PreconditionError otherwise.
HomAlgebroid deformed_algebroid(const CartanContext& ctx, const PolyMatrix& n, const ProbeSet& probes);

/// d_N f = N* d_A f and d_N d_A f = -d_A d_N f on probe functions.
Report d_n_props(const CartanContext& ctx, const PolyMatrix& n, const ProbeSet& probes);

/// [a,b]_pi^{N*} = [N*a, b]_pi + [a, N*b]_pi - N*[a,b]_pi.
Graded bracket_pi_transposed(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const Graded& alpha,
                             const Graded& beta);

/// [a,b]_{N pi#} - [a,b]_pi^{N*}.
Graded compat_C(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const Graded& alpha,
                const Graded& beta);

/// N o pi# = pi# o N*.
bool sharp_compatible(const Graded& pi, const PolyMatrix& n);

struct CprimeValue {
  Graded value;
  /// Whether N o pi# = pi# o N*; the value is computed either way.
  bool precondition_holds = false;
};
/// (L_{pi#a} N)* phi^dagger b - (L_{pi#b} N)* phi^dagger a + N* d<pi#a, b> - d<pi# N*a, b>.
CprimeValue compat_Cprime(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const Graded& alpha,
                          const Graded& beta);

/// L^N_{pi#a} b - L^N_{pi#b} a - d_N <pi#a, b> in the deformed algebroid.
/// Throws PreconditionError unless N is Hom-Nijenhuis.
Graded bracket_Npi(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const Graded& alpha,
                   const Graded& beta, const ProbeSet& probes);

/// Hom-Poisson-Nijenhuis check plus the four equivalent compatibility conditions
/// ("condition C", "condition N-pi = pi_N", "condition N-pi = pi^N*", "condition C'")
/// and "conditions agree", asserted only when pi and N are invariant and N o pi# = pi# o N*.
Report is_hpn(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const ProbeSet& probes);

struct Hierarchy {
  std::vector<Graded> bivectors;
  Report report;
};
/// pi_0 = pi, pi_{k+1}# = N o pi_k#. PreconditionError unless is_hpn passes;
/// IdentityViolation if some N o pi_k# is not skew.
Hierarchy hierarchy(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, int depth,
                    const ProbeSet& probes);

enum class DefectForm {
  /// d_N[x1,x2]_pi - [d_N x1, phi(x2)]_pi - (-1)^{deg x1 + 1}[phi(x1), d_N x2]_pi, phi = phi_A^dagger.
  Twisted,
  /// The same with the undifferentiated arguments left untwisted.
  Untwisted,
};

/// d_N, the Schouten bracket of A*_pi and the graded derivation defect of d_N on forms of A.
class BialgebroidDefect {
 public:
  /// Constructs A_N and A*_pi without checks; throws std::invalid_argument for malformed input.
  BialgebroidDefect(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n,
                    DefectForm form = DefectForm::Twisted);

  const CartanContext& deformed() const { return deformed_; }
  const CartanContext& dual() const { return dual_; }

  Graded d_n(const Graded& xi) const { return differential(deformed_, xi); }
  Graded bracket(const Graded& a, const Graded& b) const { return schouten(dual_, a, b); }
  Graded operator()(const Graded& xi1, const Graded& xi2) const;

 private:
  CartanContext deformed_;
  CartanContext dual_;
  DefectForm form_;
};

Graded bialgebroid_defect(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const Graded& xi1,
                          const Graded& xi2, DefectForm form = DefectForm::Twisted);

/// Values of the defect on (f,g), (d f, g), (d f, d g), the wedge rule and graded antisymmetry.
Report defect_identities(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const ProbeSet& probes,
                         DefectForm form = DefectForm::Twisted);

/// Observations "HPN", "(A_N, A*_pi) bialgebroid", "(A*_pi, A_N) bialgebroid" and the
/// assertion "verdicts agree". PreconditionError unless pi is Hom-Poisson and N Hom-Nijenhuis.
Report hpn_bialgebroid_equiv(const CartanContext& ctx, const Graded& pi, const PolyMatrix& n, const ProbeSet& probes);

}  // namespace homlie

#endif  // HOMLIE_NIJENHUIS_HPP
