#ifndef HOMLIE_COURANT_HPP
#define HOMLIE_COURANT_HPP

#include <functional>
#include <optional>
#include <tuple>

#include "homlie/calculus.hpp"

namespace homlie {

/// Two algebroids on mutually dual frames with daggered twists.
class BialgebroidPair {
 public:
  /// Throws std::invalid_argument unless the frames and twists are dual.
  BialgebroidPair(HomAlgebroid a, HomAlgebroid astar);

  const CartanContext& a() const { return a_; }
  const CartanContext& astar() const { return astar_; }
  BialgebroidPair swapped() const { return BialgebroidPair(astar_.algebroid(), a_.algebroid()); }

 private:
  CartanContext a_;
  CartanContext astar_;
};

/// Dual with zero bracket and anchor and twist phi_A^dagger.
HomAlgebroid trivial_dual(const HomAlgebroid& a);

/// d_{A*}[X,Y] = [d_{A*}X, phi(Y)] + [phi(X), d_{A*}Y] for (A, A*) and for (A*, A).
Report check_bialgebroid(const BialgebroidPair& p, const ProbeSet& probes);

/// Hom-Courant candidate on a free module of rank 2r with frame (e_1..e_r, eps^1..eps^r).
/// Sections are coefficient vectors of length 2r, the A-part first.
class CourantDouble {
 public:
  using FrameTable = std::vector<std::vector<PolyVector>>;

  /// Hand-built instance: frame products table[i][j] = E_i . E_j, extended to all sections
  /// by the two function-multiplication rules. The pairing matrix must be invertible.
  CourantDouble(SectionTwist twist, PolyMatrix pairing, PolyMatrix anchor, FrameTable table,
                std::vector<std::string> vars = {});

  /// Double of a bialgebroid pair with the product given by the closed doubling formula.
  static CourantDouble of_pair(const BialgebroidPair& p);

  int rank() const { return static_cast<int>(pairing_.rows()); }
  int half_rank() const { return rank() / 2; }
  int dimension() const { return twist_.base().dimension(); }
  const AffineTwist& base() const { return twist_.base(); }
  const SectionTwist& twist() const { return twist_; }
  const PolyMatrix& pairing_matrix() const { return pairing_; }
  const PolyMatrix& pairing_inverse() const { return pairing_inverse_; }
  const PolyMatrix& anchor() const { return anchor_; }
  const std::vector<std::string>& vars() const { return vars_; }
  /// The pair this double was built from, if any.
  const std::optional<BialgebroidPair>& pair() const { return pair_; }

  PolyVector frame(int i) const;
  PolyVector apply_twist(const PolyVector& u) const { return twist_.apply(u); }
  Poly pairing(const PolyVector& u, const PolyVector& v) const;
  PullbackVectorField anchor_of(const PolyVector& u) const { return {base(), anchor_ * u}; }
  Poly act(const PolyVector& u, const Poly& f) const { return anchor_of(u)(f); }
  PolyVector product(const PolyVector& u, const PolyVector& v) const;
  /// Frame products E_i . E_j.
  FrameTable frame_table() const;

  std::string describe(const PolyVector& u) const;
  std::string describe(const Poly& f) const;

 private:
  CourantDouble(SectionTwist twist, PolyMatrix pairing, PolyMatrix anchor, std::vector<std::string> vars);

  SectionTwist twist_;
  PolyMatrix pairing_;
  PolyMatrix anchor_;
  PolyMatrix pairing_inverse_;
  std::vector<std::string> vars_;
  FrameTable table_;
  std::optional<BialgebroidPair> pair_;
};

/// Double of p after check_bialgebroid; throws PreconditionError otherwise.
CourantDouble courant_double(const BialgebroidPair& p, const ProbeSet& probes);

/// (1/2)(u.v - v.u).
PolyVector courant_bracket(const CourantDouble& e, const PolyVector& u, const PolyVector& v);

/// Closed form of the bracket on a double; throws std::invalid_argument for hand-built instances.
PolyVector courant_bracket_closed(const CourantDouble& e, const PolyVector& u, const PolyVector& v);

/// The section D f with <<D f, e>> = (1/2) rho(e) f for every e.
PolyVector script_D(const CourantDouble& e, const Poly& f);

struct Jacobiator {
  PolyVector cyclic_sum;
  Poly t;
};
/// Cyclic sum of [[ [[e1,e2]], phi(e3) ]] and T = (1/3) sum <<[[e1,e2]], phi(e3)>>.
/// Throws IdentityViolation unless the sum equals D T.
Jacobiator jacobiator(const CourantDouble& e, const PolyVector& e1, const PolyVector& e2, const PolyVector& e3);

/// Axioms (i)(a), (i)(b), (ii)-(vi), both function-multiplication rules, the
/// Jacobiator identity, and for doubles the closed-form bracket and D f = d_A f + d_{A*} f.
/// Triples: all frame triples and `random_triples` seeded probe triples.
Report check_courant_axioms(const CourantDouble& e, const ProbeSet& probes, int random_triples = 100);

}  // namespace homlie

#endif  // HOMLIE_COURANT_HPP
