#ifndef HOMLIE_POLYNOMIAL_HPP
#define HOMLIE_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

inline constexpr int kMaxVariables = 8;
inline constexpr int kMaxExponent = 255;

/// Exponent multi-index packed one byte per variable, variable 0 in the most
/// significant byte, so integer order on the packed word is lex order with
/// x0 > x1 > ... .
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVariables)) {
      throw std::invalid_argument("monomial: more than 8 variables");
    }
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > kMaxExponent) {
        throw std::invalid_argument("monomial: exponent out of range");
      }
      word |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
    }
    return Monomial(word);
  }

  static Monomial variable(int i, int power = 1) {
    check_index(i);
    if (power < 0 || power > kMaxExponent) throw std::invalid_argument("monomial: exponent out of range");
    return Monomial(static_cast<std::uint64_t>(power) << shift(i));
  }

  int exponent(int i) const { return static_cast<int>((word_ >> shift(i)) & 0xffu); }

  int degree() const {
    int d = 0;
    for (int i = 0; i < kMaxVariables; ++i) d += exponent(i);
    return d;
  }

  /// One past the highest variable that occurs.
  int support() const {
    for (int i = kMaxVariables - 1; i >= 0; --i) {
      if (exponent(i) != 0) return i + 1;
    }
    return 0;
  }

  bool is_one() const { return word_ == 0; }

  bool divides(Monomial other) const {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exponent(i) > other.exponent(i)) return false;
    }
    return true;
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    const std::uint64_t sum = a.word_ + b.word_;
    // A carry out of any byte shows up as a mismatch in the low bit of the next byte.
    const std::uint64_t carries = (a.word_ ^ b.word_ ^ sum) & 0x0101010101010100ull;
    if (carries != 0 || sum < a.word_) throw std::overflow_error("monomial: exponent overflow");
    return Monomial(sum);
  }

  /// Requires divides(a, b).
  friend Monomial operator/(Monomial b, Monomial a) { return Monomial(b.word_ - a.word_); }

  Monomial without(int i) const { return Monomial(word_ & ~(0xffull << shift(i))); }

  std::uint64_t word() const { return word_; }

  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  explicit constexpr Monomial(std::uint64_t w) : word_(w) {}
  static constexpr int shift(int i) { return 8 * (kMaxVariables - 1 - i); }
  static void check_index(int i) {
    if (i < 0 || i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  }

  std::uint64_t word_ = 0;
};

/// Sparse multivariate polynomial in canonical form: terms sorted by
/// decreasing monomial, no zero coefficients.
template <typename Scalar>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // NOLINT: integer literals act as constants
  Polynomial(const Scalar& c) {                 // NOLINT
    if (c != 0) terms_.push_back({Monomial{}, c});
  }

  static Polynomial monomial(Monomial m, const Scalar& c = Scalar(1)) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(int i) { return monomial(Monomial::variable(i)); }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Scalar constant_value() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Scalar(0);
  }
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int support() const {
    int s = 0;
    for (const auto& t : terms_) s = std::max(s, t.mono.support());
    return s;
  }
  const Term& leading() const { return terms_.front(); }

  Scalar coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Scalar(0);
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.terms_[0].coeff;
    if (b.is_constant()) return a * b.terms_[0].coeff;
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return from_terms(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->mono > i->mono) {
        r.terms_.push_back({j->mono, subtract ? Scalar(-j->coeff) : j->coeff});
        ++j;
      } else {
        Scalar c = subtract ? Scalar(i->coeff - j->coeff) : Scalar(i->coeff + j->coeff);
        if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

using Poly = Polynomial<Rational>;

/// Exact formal partial derivative with respect to variable i.
template <typename Scalar>
Polynomial<Scalar> partial(const Polynomial<Scalar>& f, int i) {
  if (i < 0 || i >= kMaxVariables) throw std::out_of_range("partial: variable index out of range");
  std::vector<typename Polynomial<Scalar>::Term> out;
  for (const auto& t : f.terms()) {
    const int e = t.mono.exponent(i);
    if (e == 0) continue;
    out.push_back({t.mono / Monomial::variable(i), t.coeff * Scalar(e)});
  }
  return Polynomial<Scalar>::from_terms(std::move(out));
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& f, int e) {
  Polynomial<Scalar> r(1);
  Polynomial<Scalar> base = f;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

/// Quotient and remainder of lex-order division by a single divisor. The
/// remainder is zero exactly when `divisor` divides `f` in Q[x].
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divide(const Polynomial<Scalar>& f,
                                                         const Polynomial<Scalar>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  using P = Polynomial<Scalar>;
  const auto& lead = divisor.leading();
  P quotient;
  P remainder;
  P rest = f;
  while (!rest.is_zero()) {
    const auto& t = rest.leading();
    if (lead.mono.divides(t.mono)) {
      P step = P::monomial(t.mono / lead.mono, t.coeff / lead.coeff);
      quotient += step;
      rest -= step * divisor;
    } else {
      P head = P::monomial(t.mono, t.coeff);
      remainder += head;
      rest -= head;
    }
  }
  return {quotient, remainder};
}

/// Standard variable names: x, y, z for up to three variables, x1..xn otherwise.
inline std::vector<std::string> default_variable_names(int n) {
  if (n <= 3) {
    static const std::array<std::string, 3> xyz{"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + n};
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Poly& f, std::span<const std::string> vars);
std::string to_string(const Poly& f);

/// Parses expressions such as "2*x^2 - y/3 + 1" over the given variable names.
Poly parse_poly(std::string_view text, std::span<const std::string> vars);

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

/// All monomials of total degree <= max_degree in n variables, increasing degree
/// first and lex within a degree. These are the default probe functions.
std::vector<Poly> monomials_up_to(int n, int max_degree);

}  // namespace homlie

#endif  // HOMLIE_POLYNOMIAL_HPP
