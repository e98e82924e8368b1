#ifndef SYMDG_CYCLOTOMIC_HPP
#define SYMDG_CYCLOTOMIC_HPP

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/polynomial.hpp"
#include "symdg/rational.hpp"

namespace symdg {

/**
 * Element c0 + c1 z + ... + c5 z^5 of Q(z), z a primitive 7th root of unity.
 * Stored reduced by z^6 = -(1 + z + ... + z^5), so equality is coefficientwise.
 */
class CyclotomicElement {
public:
  static constexpr std::size_t kDegree = 6;

  CyclotomicElement() { _c.fill(Rational(0)); }

  CyclotomicElement(long value) : CyclotomicElement(Rational(value)) {}

  CyclotomicElement(Rational value)
  {
    _c.fill(Rational(0));
    _c[0] = std::move(value);
  }

  explicit CyclotomicElement(std::array<Rational, kDegree> coefficients) : _c(std::move(coefficients)) {}

  /// z^k for any integer k.
  static CyclotomicElement zeta_power(long long k)
  {
    long long e = ((k % 7) + 7) % 7;
    std::array<Rational, 7> wide;
    wide.fill(Rational(0));
    wide[e] = 1;
    return fold(wide);
  }

  std::array<Rational, kDegree> const &coefficients() const { return _c; }

  bool is_zero() const
  {
    for (auto const &x : _c) {
      if (x != 0)
        return false;
    }
    return true;
  }

  /// True when the element lies in Q.
  bool is_rational() const
  {
    for (std::size_t k = 1; k < kDegree; ++k) {
      if (_c[k] != 0)
        return false;
    }
    return true;
  }

  CyclotomicElement &operator+=(CyclotomicElement const &rhs)
  {
    for (std::size_t k = 0; k < kDegree; ++k)
      _c[k] += rhs._c[k];
    return *this;
  }

  CyclotomicElement &operator-=(CyclotomicElement const &rhs)
  {
    for (std::size_t k = 0; k < kDegree; ++k)
      _c[k] -= rhs._c[k];
    return *this;
  }

  CyclotomicElement &operator*=(CyclotomicElement const &rhs)
  {
    std::array<Rational, 7> wide;
    wide.fill(Rational(0));
    for (std::size_t i = 0; i < kDegree; ++i) {
      if (_c[i] == 0)
        continue;
      for (std::size_t j = 0; j < kDegree; ++j) {
        if (rhs._c[j] != 0)
          wide[(i + j) % 7] += _c[i] * rhs._c[j];
      }
    }
    *this = fold(wide);
    return *this;
  }

  CyclotomicElement &operator/=(CyclotomicElement const &rhs) { return *this *= rhs.inverse(); }

  friend CyclotomicElement operator+(CyclotomicElement lhs, CyclotomicElement const &rhs) { return lhs += rhs; }
  friend CyclotomicElement operator-(CyclotomicElement lhs, CyclotomicElement const &rhs) { return lhs -= rhs; }
  friend CyclotomicElement operator*(CyclotomicElement lhs, CyclotomicElement const &rhs) { return lhs *= rhs; }
  friend CyclotomicElement operator/(CyclotomicElement lhs, CyclotomicElement const &rhs) { return lhs /= rhs; }

  friend CyclotomicElement operator-(CyclotomicElement x)
  {
    for (auto &c : x._c)
      c = -c;
    return x;
  }

  friend bool operator==(CyclotomicElement const &lhs, CyclotomicElement const &rhs) { return lhs._c == rhs._c; }

  /// Inverse by extended Euclid against 1 + z + ... + z^6.
  CyclotomicElement inverse() const
  {
    if (is_zero())
      throw DomainError("inverse of zero in Q(zeta_7)");
    std::vector<Rational> self(_c.begin(), _c.end());
    RationalPolynomial const x{self};
    RationalPolynomial const phi{std::vector<Rational>(7, Rational(1))};
    auto [g, s, t] = xgcd(x, phi);
    if (g.degree() != 0)
      throw DomainError("element shares a factor with the 7th cyclotomic polynomial");
    std::array<Rational, 7> wide;
    wide.fill(Rational(0));
    for (std::size_t k = 0; k < s.coefficients().size(); ++k)
      wide[k % 7] += s.coefficients()[k];
    return fold(wide);
  }

  /// Galois conjugate z -> z^k (k coprime to 7).
  CyclotomicElement galois(long long k) const
  {
    CyclotomicElement result;
    for (std::size_t i = 0; i < kDegree; ++i) {
      if (_c[i] != 0)
        result += CyclotomicElement(_c[i]) * zeta_power(static_cast<long long>(i) * k);
    }
    return result;
  }

  /// "c0 + c1 z + ..." with z for the root of unity.
  std::string to_string() const
  {
    std::vector<Rational> c(_c.begin(), _c.end());
    std::string text = RationalPolynomial(c).to_string("z");
    return text;
  }

  friend std::ostream &operator<<(std::ostream &out, CyclotomicElement const &x) { return out << x.to_string(); }

private:
  static CyclotomicElement fold(std::array<Rational, 7> const &wide)
  {
    std::array<Rational, kDegree> c;
    for (std::size_t k = 0; k < kDegree; ++k)
      c[k] = wide[k] - wide[6];
    return CyclotomicElement(c);
  }

  std::array<Rational, kDegree> _c;
};

using CycloMatrix = Matrix<CyclotomicElement>;

/// Product of all six Galois conjugates; a nonzero rational for nonzero x.
inline Rational galois_norm(CyclotomicElement const &x)
{
  CyclotomicElement n = x;
  for (long long k = 2; k <= 6; ++k)
    n *= x.galois(k);
  if (!n.is_rational())
    throw Error("Galois norm is not rational");
  return n.coefficients()[0];
}

/**
 * Parser for expressions over Q(z) such as "-2(2x3-7z^3)" or "z^5+z".
 * Grammar: sums of products; juxtaposition multiplies; '^' takes a
 * non-negative integer; names are looked up in `env` ("z" is built in).
 */
class CycloExpressionParser {
public:
  explicit CycloExpressionParser(std::map<std::string, CyclotomicElement> env = {}) : _env(std::move(env)) {}

  CyclotomicElement parse(std::string_view text)
  {
    _text = text;
    _pos = 0;
    CyclotomicElement value = sum();
    skip();
    if (_pos != _text.size())
      fail("unexpected character");
    return value;
  }

  void define(std::string name, CyclotomicElement value) { _env[std::move(name)] = std::move(value); }

private:
  CyclotomicElement sum()
  {
    skip();
    CyclotomicElement value;
    bool negate = false;
    if (peek('+') || peek('-'))
      negate = _text[_pos++] == '-';
    value = product();
    if (negate)
      value = -value;
    for (;;) {
      skip();
      if (peek('+')) {
        ++_pos;
        value += product();
      } else if (peek('-')) {
        ++_pos;
        value -= product();
      } else {
        return value;
      }
    }
  }

  CyclotomicElement product()
  {
    CyclotomicElement value = power();
    for (;;) {
      skip();
      if (peek('*')) {
        ++_pos;
        value *= power();
      } else if (peek('/')) {
        ++_pos;
        value /= power();
      } else if (_pos < _text.size() && (peek('(') || std::isalnum(static_cast<unsigned char>(_text[_pos])))) {
        value *= power();
      } else {
        return value;
      }
    }
  }

  CyclotomicElement power()
  {
    CyclotomicElement base = atom();
    skip();
    if (peek('^')) {
      ++_pos;
      skip();
      long long e = integer();
      CyclotomicElement result(1);
      for (long long i = 0; i < e; ++i)
        result *= base;
      return result;
    }
    return base;
  }

  CyclotomicElement atom()
  {
    skip();
    if (_pos >= _text.size())
      fail("unexpected end of expression");
    if (peek('(')) {
      ++_pos;
      CyclotomicElement value = sum();
      skip();
      if (!peek(')'))
        fail("missing ')'");
      ++_pos;
      return value;
    }
    if (peek('-')) {
      ++_pos;
      return -power();
    }
    char c = _text[_pos];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return CyclotomicElement(Rational(integer_text()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = _pos;
      ++_pos;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
        ++_pos;
      std::string name(_text.substr(start, _pos - start));
      if (name == "z")
        return CyclotomicElement::zeta_power(1);
      auto it = _env.find(name);
      if (it == _env.end())
        fail("unknown name \"" + name + "\"");
      return it->second;
    }
    fail("unexpected character");
  }

  std::string integer_text()
  {
    std::size_t start = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      fail("expected an integer");
    return std::string(_text.substr(start, _pos - start));
  }

  long long integer() { return std::stoll(integer_text()); }

  bool peek(char c) const { return _pos < _text.size() && _text[_pos] == c; }

  void skip()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError(what + " at offset " + std::to_string(_pos) + " in \"" + std::string(_text) + "\"");
  }

  std::map<std::string, CyclotomicElement> _env;
  std::string_view _text;
  std::size_t _pos = 0;
};

inline CyclotomicElement parse_cyclotomic(std::string_view text,
                                          std::map<std::string, CyclotomicElement> const &env = {})
{
  return CycloExpressionParser(env).parse(text);
}

inline CycloMatrix to_cyclo(RationalMatrix const &m)
{
  CycloMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = CyclotomicElement(m(i, j));
  }
  return out;
}

} // namespace symdg

#endif // SYMDG_CYCLOTOMIC_HPP
