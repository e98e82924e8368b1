#ifndef SYMDG_RATIONAL_HPP
#define SYMDG_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "symdg/errors.hpp"

namespace symdg {

/// Arbitrary-precision rational in canonical form (GMP keeps it reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p", "-p", "p/q"; the denominator must be nonzero.
inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  auto const first = s.find_first_not_of(" \t\r\n");
  auto const last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ParseError("empty rational");
  s = s.substr(first, last - first + 1);
  if (s.front() == '+')
    s.erase(0, 1);
  auto const slash = s.find('/');
  auto valid_int = [](std::string const &t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  Rational r;
  r.get_num() = Integer(num);
  r.get_den() = Integer(den);
  if (r.get_den() == 0)
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

inline std::string to_string(Rational const &r) { return r.get_str(); }

} // namespace symdg

#endif // SYMDG_RATIONAL_HPP
