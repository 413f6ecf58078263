#include "homlie/matrix.hpp"

#include <stdexcept>

namespace homlie {

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Poly(1);
  PolyMatrix a = m;
  Poly prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return Poly();
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Poly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto [q, rem] = divide(num, prev);
        if (!rem.is_zero()) throw std::logic_error("determinant: inexact fraction-free step");
        a(i, j) = std::move(q);
      }
      a(i, k) = Poly();
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Poly(-a(n - 1, n - 1));
}

PolyMatrix submatrix(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  PolyMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
  const Poly det = determinant(m);
  if (det.is_zero() || !det.is_constant()) {
    throw std::domain_error("matrix determinant is not a nonzero constant: " + to_string(det));
  }
  const Rational inv_det = Rational(1) / det.constant_value();
  const int n = static_cast<int>(m.rows());
  PolyMatrix out(n, n);
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Poly cof = determinant(submatrix(m, rows, cols));
      if ((i + j) % 2 == 1) cof = -cof;
      out(i, j) = cof * inv_det;
    }
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    a.row(k).swap(a.row(p));
    inv.row(k).swap(inv.row(p));
    const Rational pivot = a(k, k);
    a.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      a.row(i) -= factor * a.row(k);
      inv.row(i) -= factor * inv.row(k);
    }
  }
  return inv;
}

PolyMatrix to_poly(const RationalMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  }
  return out;
}

}  // namespace homlie
