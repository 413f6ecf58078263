#ifndef HOMLIE_AFFINE_HPP
#define HOMLIE_AFFINE_HPP

#include "homlie/matrix.hpp"

namespace homlie {

/// Invertible affine map x -> M x + b of Q^n, with its exact inverse.
class AffineTwist {
 public:
  AffineTwist(RationalMatrix matrix, RationalVector offset);
  explicit AffineTwist(RationalMatrix matrix);

  static AffineTwist identity(int n);
  static AffineTwist diagonal(std::initializer_list<Rational> entries);

  int dimension() const { return static_cast<int>(matrix_.rows()); }
  const RationalMatrix& matrix() const { return matrix_; }
  const RationalVector& offset() const { return offset_; }
  const RationalMatrix& inverse_matrix() const { return inverse_; }
  bool is_identity() const;

  /// f o phi.
  Poly pullback(const Poly& f) const;
  /// f o phi^{-1}; the two-sided inverse of pullback.
  Poly inverse_pullback(const Poly& f) const;

  AffineTwist inverse() const;

  friend bool operator==(const AffineTwist& a, const AffineTwist& b) {
    return a.matrix_ == b.matrix_ && a.offset_ == b.offset_;
  }

 private:
  static Poly substitute(const Poly& f, const RationalMatrix& m, const RationalVector& b, bool diagonal);
  void check(const Poly& f) const;

  RationalMatrix matrix_;
  RationalVector offset_;
  RationalMatrix inverse_;
  RationalVector inverse_offset_;
  bool diagonal_ = false;
  bool inverse_diagonal_ = false;
};

inline Poly pullback(const AffineTwist& phi, const Poly& f) { return phi.pullback(f); }
inline Poly inverse_pullback(const AffineTwist& phi, const Poly& f) { return phi.inverse_pullback(f); }

inline AffineTwist invert(const AffineTwist& phi) { return phi.inverse(); }

/// a o b.
AffineTwist compose(const AffineTwist& a, const AffineTwist& b);

inline PolyMatrix pullback(const AffineTwist& phi, const PolyMatrix& m) {
  return map_entries(m, [&](const Poly& f) { return phi.pullback(f); });
}
inline PolyVector pullback(const AffineTwist& phi, const PolyVector& v) {
  return map_entries(v, [&](const Poly& f) { return phi.pullback(f); });
}
inline PolyMatrix inverse_pullback(const AffineTwist& phi, const PolyMatrix& m) {
  return map_entries(m, [&](const Poly& f) { return phi.inverse_pullback(f); });
}
inline PolyVector inverse_pullback(const AffineTwist& phi, const PolyVector& v) {
  return map_entries(v, [&](const Poly& f) { return phi.inverse_pullback(f); });
}

}  // namespace homlie

#endif  // HOMLIE_AFFINE_HPP
