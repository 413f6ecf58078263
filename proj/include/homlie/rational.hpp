#ifndef HOMLIE_RATIONAL_HPP
#define HOMLIE_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace homlie {

/// Arbitrary-precision rational. Expression templates are off so the type
/// behaves as a plain value inside Eigen matrices and std containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "p/q" (q > 0 after normalisation). Whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace homlie

#endif  // HOMLIE_RATIONAL_HPP
