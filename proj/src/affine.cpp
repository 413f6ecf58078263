#include "homlie/affine.hpp"

#include <map>

namespace homlie {

namespace {

bool is_plain_diagonal(const RationalMatrix& m, const RationalVector& b) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (b(i) != 0) return false;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace

AffineTwist::AffineTwist(RationalMatrix matrix, RationalVector offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != offset_.size()) {
    throw std::invalid_argument("affine map: matrix and offset sizes disagree");
  }
  if (matrix_.rows() > kMaxVariables) throw std::invalid_argument("affine map: more than 8 variables");
  inverse_ = homlie::inverse(matrix_);
  inverse_offset_ = -(inverse_ * offset_);
  diagonal_ = is_plain_diagonal(matrix_, offset_);
  inverse_diagonal_ = is_plain_diagonal(inverse_, inverse_offset_);
}

AffineTwist::AffineTwist(RationalMatrix matrix)
    : AffineTwist(matrix, RationalVector::Zero(matrix.rows())) {}

AffineTwist AffineTwist::identity(int n) { return AffineTwist(RationalMatrix::Identity(n, n)); }

AffineTwist AffineTwist::diagonal(std::initializer_list<Rational> entries) {
  const int n = static_cast<int>(entries.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  int i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return AffineTwist(m);
}

bool AffineTwist::is_identity() const {
  return diagonal_ && matrix_ == RationalMatrix::Identity(matrix_.rows(), matrix_.cols());
}

void AffineTwist::check(const Poly& f) const {
  if (f.support() > dimension()) {
    throw std::invalid_argument("pullback: polynomial uses more variables than the base dimension");
  }
}

Poly AffineTwist::substitute(const Poly& f, const RationalMatrix& m, const RationalVector& b, bool diagonal) {
  const int n = static_cast<int>(m.rows());
  if (diagonal) {
    std::vector<Poly::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      Rational c = t.coeff;
      for (int i = 0; i < n; ++i) {
        for (int e = t.mono.exponent(i); e > 0; --e) c *= m(i, i);
      }
      terms.push_back({t.mono, c});
    }
    return Poly::from_terms(std::move(terms));
  }
  std::vector<Poly> images(n);
  for (int i = 0; i < n; ++i) {
    Poly li(b(i));
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != 0) li += Poly::variable(j) * m(i, j);
    }
    images[i] = std::move(li);
  }
  std::map<std::pair<int, int>, Poly> powers;
  auto power = [&](int i, int e) -> const Poly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(images[i], e)).first;
    return it->second;
  };
  Poly out;
  for (const auto& t : f.terms()) {
    Poly term(t.coeff);
    for (int i = 0; i < n; ++i) {
      const int e = t.mono.exponent(i);
      if (e > 0) term *= power(i, e);
    }
    out += term;
  }
  return out;
}

Poly AffineTwist::pullback(const Poly& f) const {
  check(f);
  return substitute(f, matrix_, offset_, diagonal_);
}

Poly AffineTwist::inverse_pullback(const Poly& f) const {
  check(f);
  return substitute(f, inverse_, inverse_offset_, inverse_diagonal_);
}

AffineTwist AffineTwist::inverse() const { return AffineTwist(inverse_, inverse_offset_); }

AffineTwist compose(const AffineTwist& a, const AffineTwist& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("compose: dimension mismatch");
  return AffineTwist(a.matrix() * b.matrix(), a.matrix() * b.offset() + a.offset());
}

}  // namespace homlie
