#ifndef HOMLIE_EXTERIOR_HPP
#define HOMLIE_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homlie/affine.hpp"

namespace homlie {

/// Which side of the duality an element lives on. Multivectors of A and forms
/// of A* are Vector; forms of A and multivectors of A* are Covector.
enum class Kind { Vector, Covector };

inline Kind dual(Kind k) { return k == Kind::Vector ? Kind::Covector : Kind::Vector; }

/// Increasing index tuple stored as a bitmask over frame indices 0..r-1.
using IndexSet = std::uint32_t;

inline int size_of(IndexSet s) { return std::popcount(s); }
inline IndexSet bit(int i) { return IndexSet{1} << i; }
std::vector<int> indices_of(IndexSet s);
IndexSet set_of(std::span<const int> indices);
/// All k-subsets of {0..r-1} in increasing numeric order.
std::vector<IndexSet> subsets(int r, int k);

/// Sign of the shuffle sorting the concatenation (I, J); 0 if they overlap.
inline int shuffle_sign(IndexSet i, IndexSet j) {
  if ((i & j) != 0) return 0;
  int inversions = 0;
  for (IndexSet rest = j; rest != 0; rest &= rest - 1) {
    const int b = std::countr_zero(rest);
    inversions += std::popcount(i >> (b + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Homogeneous element of the exterior algebra over a free rank-r module:
/// sum over increasing k-tuples I of f_I e_I. Zero coefficients are pruned.
class Graded {
 public:
  using Map = std::map<IndexSet, Poly>;

  Graded() = default;
  Graded(Kind kind, int rank, int degree);

  static Graded scalar(Kind kind, int rank, const Poly& f);
  /// f * e_{i1} ^ ... ^ e_{ik} for indices in any order (sign applied).
  static Graded basis(Kind kind, int rank, std::initializer_list<int> indices, const Poly& f = Poly(1));
  static Graded basis(Kind kind, int rank, IndexSet set, const Poly& f = Poly(1));
  static Graded section(Kind kind, const PolyVector& coeffs);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const Map& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Poly coefficient(IndexSet i) const;
  Poly coefficient(std::initializer_list<int> indices) const;
  void add(IndexSet i, const Poly& f);
  /// Degree-1 coefficient vector.
  PolyVector vector() const;
  /// Degree-0 value.
  Poly value() const { return coefficient(0); }

  Graded& operator+=(const Graded& o);
  Graded& operator-=(const Graded& o);
  Graded& operator*=(const Poly& f);
  Graded operator-() const;
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const Poly& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const Poly& f) { return a *= f; }
  friend bool operator==(const Graded& a, const Graded& b);

 private:
  void require_compatible(const Graded& o) const;

  Kind kind_ = Kind::Vector;
  int rank_ = 0;
  int degree_ = 0;
  Map coeffs_;
};

using MultiVector = Graded;
using Form = Graded;

Graded wedge(const Graded& a, const Graded& b);
/// Full pairing of elements of opposite kind and equal degree (determinant convention).
Poly pair(const Graded& a, const Graded& b);
/// Contraction inserting t into the leading slots of w: result(e_J) = w(t, e_J).
Graded contract(const Graded& t, const Graded& w);
Graded map_coefficients(const Graded& g, const std::function<Poly(const Poly&)>& f);

/// Frame labels: e1.. for Vector, eps1.. for Covector.
std::string to_string(const Graded& g, std::span<const std::string> vars);
std::string to_string(const Graded& g);

struct IndexedCoefficient {
  std::vector<int> indices;
  Poly coeff;
};
std::vector<IndexedCoefficient> coefficient_table(const Graded& g);

/// Function-linear (relative to a base map) invertible map of sections,
/// v -> R * sigma^*(v), on the sections of the given kind.
class SectionTwist {
 public:
  SectionTwist(AffineTwist base, PolyMatrix matrix, Kind kind = Kind::Vector);

  static SectionTwist identity(const AffineTwist& base, int rank, Kind kind = Kind::Vector);

  const AffineTwist& base() const { return base_; }
  const PolyMatrix& matrix() const { return matrix_; }
  Kind kind() const { return kind_; }
  int rank() const { return static_cast<int>(matrix_.rows()); }

  PolyVector apply(const PolyVector& v) const;
  /// Wedge extension; on degree 0 it is the pullback of the base map.
  Graded apply(const Graded& g) const;

  /// Throws std::domain_error unless det R is a nonzero constant.
  SectionTwist inverse() const;
  /// The twist on the dual frame defined by <dual(xi), X> = sigma^* <xi, inverse(X)>.
  SectionTwist dual() const;

  friend bool operator==(const SectionTwist& a, const SectionTwist& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_ && equal(a.matrix_, b.matrix_);
  }

 private:
  AffineTwist base_;
  PolyMatrix matrix_;
  Kind kind_;
};

inline SectionTwist dual_twist(const SectionTwist& t) { return t.dual(); }

/// Bundle map given by a frame matrix: (N v)_a = sum_b N_ab v_b, acting on the sections of `kind`.
struct EndoMap {
  PolyMatrix matrix;
  Kind kind = Kind::Vector;

  int rank() const { return static_cast<int>(matrix.rows()); }
  PolyVector apply(const PolyVector& v) const { return matrix * v; }
  /// Transpose acting on the dual frame.
  EndoMap transpose() const { return {matrix.transpose(), dual(kind)}; }
  friend EndoMap operator*(const EndoMap& a, const EndoMap& b) { return {a.matrix * b.matrix, a.kind}; }
  friend bool operator==(const EndoMap& a, const EndoMap& b) {
    return a.kind == b.kind && equal(a.matrix, b.matrix);
  }
  static EndoMap identity(int r, Kind kind = Kind::Vector) {
    return {PolyMatrix::Identity(r, r), kind};
  }
};

/// phi_A(N) = R sigma^*(N) R^{-1} for a twist acting on the same kind as N.
EndoMap twist_endomorphism(const SectionTwist& t, const EndoMap& n);

/// Tensor with `upper` contravariant slots followed by `lower` covariant slots,
/// relative to a reference kind (contravariant = sections of that kind).
class Tensor {
 public:
  using Key = std::vector<int>;

  Tensor(Kind kind, int rank, int upper, int lower);
  static Tensor from_endomorphism(const EndoMap& n);
  static Tensor product(const std::vector<PolyVector>& upper, const std::vector<PolyVector>& lower,
                        Kind kind);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  int upper() const { return upper_; }
  int lower() const { return lower_; }
  const std::map<Key, Poly>& terms() const { return coeffs_; }
  void add(const Key& k, const Poly& f);
  Poly coefficient(const Key& k) const;
  EndoMap endomorphism() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.upper_ == b.upper_ && a.lower_ == b.lower_ &&
           a.coeffs_ == b.coeffs_;
  }
  bool is_zero() const { return coeffs_.empty(); }

 private:
  Kind kind_;
  int rank_;
  int upper_;
  int lower_;
  std::map<Key, Poly> coeffs_;
};

/// Applies t to every contravariant slot and its dual to every covariant slot.
Tensor twist_tensor(const Tensor& tensor, const SectionTwist& t);
/// Wedge-extension of t (same as t.apply), stated as a tensor twist on Lambda^k.
inline Graded twist_tensor(const Graded& g, const SectionTwist& t) { return t.apply(g); }

}  // namespace homlie

#endif  // HOMLIE_EXTERIOR_HPP
