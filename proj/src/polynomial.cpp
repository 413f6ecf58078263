#include "homlie/polynomial.hpp"

#include <cctype>

namespace homlie {

std::string to_string(const Poly& f, std::span<const std::string> vars) {
  if (f.is_zero()) return "0";
  std::vector<std::string> fallback;
  if (static_cast<int>(vars.size()) < f.support()) {
    fallback = default_variable_names(f.support());
    vars = fallback;
  }
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxVariables; ++i) {
      const int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += format_rational(c) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const Poly& f) {
  const auto names = default_variable_names(std::max(3, f.support()));
  return to_string(f, names);
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_space();
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.constant_value();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_space();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Poly b = base();
    skip_space();
    if (eat('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      b = pow(b, e);
    }
    return b;
  }

  Poly base() {
    skip_space();
    if (eat('(')) {
      Poly p = expr();
      skip_space();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Poly::variable(static_cast<int>(i));
      }
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("expected a number, variable or '('");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

void monomials_of_degree(int n, int var, int remaining, std::vector<int>& exps, std::vector<Poly>& out) {
  if (var == n - 1) {
    exps[var] = remaining;
    out.push_back(Poly::monomial(Monomial::from_exponents(exps)));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    monomials_of_degree(n, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars) {
  return PolyParser(text, vars).parse();
}

std::vector<Poly> monomials_up_to(int n, int max_degree) {
  std::vector<Poly> out;
  if (n == 0) {
    if (max_degree >= 0) out.emplace_back(1);
    return out;
  }
  std::vector<int> exps(n, 0);
  for (int d = 0; d <= max_degree; ++d) monomials_of_degree(n, 0, d, exps, out);
  return out;
}

}  // namespace homlie
