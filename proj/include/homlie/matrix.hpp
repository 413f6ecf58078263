#ifndef HOMLIE_MATRIX_HPP
#define HOMLIE_MATRIX_HPP

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "homlie/polynomial.hpp"

namespace Eigen {

template <>
struct NumTraits<homlie::Poly> : GenericNumTraits<homlie::Poly> {
  using Real = homlie::Poly;
  using NonInteger = homlie::Poly;
  using Nested = homlie::Poly;
  using Literal = homlie::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace homlie {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using PolyMatrix = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<Poly, Eigen::Dynamic, 1>;

/// Exact determinant by fraction-free (Bareiss) elimination.
Poly determinant(const PolyMatrix& m);

/// Inverse of a square polynomial matrix whose determinant is a nonzero
/// rational constant; throws std::domain_error otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

/// Exact Gauss-Jordan inverse; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

PolyMatrix to_poly(const RationalMatrix& m);

/// Entrywise application of a Poly -> Poly map.
template <typename F>
PolyMatrix map_entries(const PolyMatrix& m, F&& f) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

template <typename F>
PolyVector map_entries(const PolyVector& v, F&& f) {
  PolyVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = f(v(i));
  return out;
}

inline bool is_zero(const PolyVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

inline bool is_zero(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

inline bool equal(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && is_zero(PolyMatrix(a - b));
}

inline bool equal(const PolyVector& a, const PolyVector& b) {
  return a.size() == b.size() && is_zero(PolyVector(a - b));
}

/// Extracts the minor with the given rows and columns.
PolyMatrix submatrix(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols);

}  // namespace homlie

#endif  // HOMLIE_MATRIX_HPP
