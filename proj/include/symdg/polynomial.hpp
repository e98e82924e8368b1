#ifndef SYMDG_POLYNOMIAL_HPP
#define SYMDG_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/rational.hpp"

namespace symdg {

/// Univariate polynomial with ascending coefficients and no trailing zeros.
template <typename F>
class Polynomial {
public:
  Polynomial() = default;

  explicit Polynomial(std::vector<F> coefficients) : _c(std::move(coefficients)) { trim(); }

  static Polynomial constant(F value) { return Polynomial(std::vector<F>{std::move(value)}); }

  /// x^k
  static Polynomial monomial(std::size_t k)
  {
    std::vector<F> c(k + 1, F(0));
    c[k] = F(1);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return _c.empty(); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(_c.size()) - 1; }

  std::vector<F> const &coefficients() const { return _c; }

  F coefficient(std::size_t k) const { return k < _c.size() ? _c[k] : F(0); }

  F const &leading() const
  {
    if (_c.empty())
      throw DomainError("zero polynomial has no leading coefficient");
    return _c.back();
  }

  bool is_monic() const { return !_c.empty() && _c.back() == F(1); }

  Polynomial monic() const
  {
    if (is_zero())
      return *this;
    F const inv = F(1) / leading();
    Polynomial p = *this;
    for (auto &x : p._c)
      x *= inv;
    return p;
  }

  Polynomial derivative() const
  {
    std::vector<F> d;
    for (std::size_t k = 1; k < _c.size(); ++k)
      d.push_back(F(static_cast<long>(k)) * _c[k]);
    return Polynomial(std::move(d));
  }

  F evaluate(F const &x) const
  {
    F result(0);
    for (auto it = _c.rbegin(); it != _c.rend(); ++it)
      result = result * x + *it;
    return result;
  }

  /// p(A) by Horner's rule.
  Matrix<F> evaluate(Matrix<F> const &a) const
  {
    if (!a.is_square())
      throw DimensionMismatch("polynomial of a non-square matrix");
    Matrix<F> result(a.rows(), a.cols());
    Matrix<F> const id = Matrix<F>::identity(a.rows());
    for (auto it = _c.rbegin(); it != _c.rend(); ++it)
      result = result * a + (*it) * id;
    return result;
  }

  friend Polynomial operator+(Polynomial const &lhs, Polynomial const &rhs)
  {
    std::vector<F> c(std::max(lhs._c.size(), rhs._c.size()), F(0));
    for (std::size_t k = 0; k < lhs._c.size(); ++k)
      c[k] += lhs._c[k];
    for (std::size_t k = 0; k < rhs._c.size(); ++k)
      c[k] += rhs._c[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(Polynomial const &lhs, Polynomial const &rhs)
  {
    std::vector<F> c(std::max(lhs._c.size(), rhs._c.size()), F(0));
    for (std::size_t k = 0; k < lhs._c.size(); ++k)
      c[k] += lhs._c[k];
    for (std::size_t k = 0; k < rhs._c.size(); ++k)
      c[k] -= rhs._c[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(Polynomial const &lhs, Polynomial const &rhs)
  {
    if (lhs.is_zero() || rhs.is_zero())
      return {};
    std::vector<F> c(lhs._c.size() + rhs._c.size() - 1, F(0));
    for (std::size_t i = 0; i < lhs._c.size(); ++i) {
      for (std::size_t j = 0; j < rhs._c.size(); ++j)
        c[i + j] += lhs._c[i] * rhs._c[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(Polynomial const &lhs, Polynomial const &rhs) { return lhs._c == rhs._c; }

  /// Quotient and remainder; the divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(Polynomial const &num, Polynomial const &den)
  {
    if (den.is_zero())
      throw DomainError("polynomial division by zero");
    if (num.degree() < den.degree())
      return {Polynomial{}, num};
    std::vector<F> r = num._c;
    std::vector<F> q(num._c.size() - den._c.size() + 1, F(0));
    F const inv = F(1) / den.leading();
    std::size_t const dd = den._c.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      F const factor = r[k + dd] * inv;
      q[k] = factor;
      if (factor == F(0))
        continue;
      for (std::size_t j = 0; j <= dd; ++j)
        r[k + j] -= factor * den._c[j];
    }
    r.resize(dd);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  friend Polynomial operator%(Polynomial const &num, Polynomial const &den)
  {
    return divmod(num, den).second;
  }

  friend Polynomial operator/(Polynomial const &num, Polynomial const &den)
  {
    return divmod(num, den).first;
  }

  std::string to_string(std::string const &var = "x") const
  {
    if (_c.empty())
      return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = _c.size(); k-- > 0;) {
      if (_c[k] == F(0))
        continue;
      std::string coef = coefficient_string(_c[k]);
      bool negative = !coef.empty() && coef[0] == '-';
      if (negative)
        coef.erase(0, 1);
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      bool unit = coef == "1";
      if (k == 0 || !unit)
        out << (needs_parens(coef) && k > 0 ? "(" + coef + ")" : coef);
      if (k > 0)
        out << var;
      if (k > 1)
        out << '^' << k;
    }
    return out.str();
  }

private:
  static std::string coefficient_string(F const &x)
  {
    std::ostringstream out;
    out << x;
    return out.str();
  }

  static bool needs_parens(std::string const &coef)
  {
    return coef.find_first_of("+- ") != std::string::npos;
  }

  void trim()
  {
    while (!_c.empty() && _c.back() == F(0))
      _c.pop_back();
  }

  std::vector<F> _c;
};

using RationalPolynomial = Polynomial<Rational>;

/// Monic gcd (zero when both inputs are zero).
template <typename F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b)
{
  while (!b.is_zero()) {
    Polynomial<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename F>
Polynomial<F> lcm(Polynomial<F> const &a, Polynomial<F> const &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  return ((a / gcd(a, b)) * b).monic();
}

/// Returns (g, s, t) with s*a + t*b = g and g monic.
template <typename F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> xgcd(Polynomial<F> a, Polynomial<F> b)
{
  using P = Polynomial<F>;
  P s0 = P::constant(F(1)), s1;
  P t0, t1 = P::constant(F(1));
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    P s2 = s0 - q * s1;
    P t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero())
    return {a, s0, t0};
  F const inv = F(1) / a.leading();
  P const scale = P::constant(inv);
  return {a * scale, s0 * scale, t0 * scale};
}

/// gcd(p, p') constant. Throws DomainError for the zero polynomial.
template <typename F>
bool is_squarefree(Polynomial<F> const &p)
{
  if (p.is_zero())
    throw DomainError("squarefreeness of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

} // namespace symdg

#endif // SYMDG_POLYNOMIAL_HPP
