#ifndef SPINE_RATIONAL_HPP
#define SPINE_RATIONAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spine {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; integers are written as "p/1".
inline auto to_fraction_string(const Rational & r) -> std::string {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Decimal rounded half away from zero to `digits` places, trailing zeros
/// trimmed. Computed in integer arithmetic so output never depends on the
/// platform's floating point.
inline auto to_decimal_string(const Rational & r, unsigned digits = 6) -> std::string {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  if (negative)
    num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i)
    scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(0, digits - f.size(), '0');
    while (!f.empty() && f.back() == '0')
      f.pop_back();
    out += "." + f;
  }
  if (negative && scaled != 0)
    out.insert(0, "-");
  return out;
}

inline auto parse_fraction(const std::string & text) -> Rational {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("malformed rational '" + text + "'");
  BigInt p(text.substr(0, slash));
  BigInt q(text.substr(slash + 1));
  if (q == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(p, q);
}

} // namespace spine

#endif
