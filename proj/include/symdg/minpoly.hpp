#ifndef SYMDG_MINPOLY_HPP
#define SYMDG_MINPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/polynomial.hpp"
#include "symdg/rational.hpp"

namespace symdg {

namespace detail {

/// Incremental row echelon basis over F with the pivot column of each row.
template <typename F>
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t dim) : _dim(dim) {}

  std::size_t size() const { return _rows.size(); }
  bool full() const { return _rows.size() == _dim; }

  /// Reduces v in place; returns the combination coefficients used.
  std::vector<F> reduce(std::vector<F> &v) const
  {
    std::vector<F> used(_rows.size(), F(0));
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      F const &x = v[_pivots[r]];
      if (x == F(0))
        continue;
      F const factor = x; // pivot entries are normalized to 1
      used[r] = factor;
      for (std::size_t j = 0; j < _dim; ++j) {
        if (!(_rows[r][j] == F(0)))
          v[j] -= factor * _rows[r][j];
      }
    }
    return used;
  }

  /// Adds a reduced nonzero vector; returns its pivot scale (entry before normalization).
  F insert(std::vector<F> v)
  {
    std::size_t pivot = 0;
    while (pivot < _dim && v[pivot] == F(0))
      ++pivot;
    if (pivot == _dim)
      throw Error("echelon insert of a zero vector");
    F const scale = v[pivot];
    F const inv = F(1) / scale;
    for (auto &x : v)
      x *= inv;
    // keep earlier rows reduced against the new pivot
    for (auto &row : _rows) {
      F const factor = row[pivot];
      if (factor == F(0))
        continue;
      for (std::size_t j = 0; j < _dim; ++j)
        row[j] -= factor * v[j];
    }
    _rows.push_back(std::move(v));
    _pivots.push_back(pivot);
    return scale;
  }

  bool contains(std::vector<F> v) const
  {
    reduce(v);
    for (auto const &x : v) {
      if (!(x == F(0)))
        return false;
    }
    return true;
  }

private:
  std::size_t _dim;
  std::vector<std::vector<F>> _rows;
  std::vector<std::size_t> _pivots;
};

template <typename F>
std::vector<F> mat_vec(Matrix<F> const &a, std::vector<F> const &v)
{
  std::vector<F> result(a.rows(), F(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(v[j] == F(0)) && !(a(i, j) == F(0)))
        result[i] += a(i, j) * v[j];
    }
  }
  return result;
}

/**
 * Annihilator of v under A: the monic least-degree p with p(A)v = 0.
 * The Krylov vectors v, Av, ... are stored with their polynomial
 * expressions so the first dependency gives p directly.
 */
template <typename F>
Polynomial<F> krylov_annihilator(Matrix<F> const &a, std::vector<F> const &v,
                                 std::vector<std::vector<F>> *krylov = nullptr)
{
  std::size_t const n = a.rows();
  // basis rows, each with the polynomial it equals in A applied to v
  std::vector<std::vector<F>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<F>> exprs;
  std::vector<F> w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<F> r = w;
    std::vector<F> expr(k + 1, F(0));
    expr[k] = F(1);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      F const factor = r[pivots[b]];
      if (factor == F(0))
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(rows[b][j] == F(0)))
          r[j] -= factor * rows[b][j];
      }
      for (std::size_t j = 0; j < exprs[b].size(); ++j)
        expr[j] -= factor * exprs[b][j];
    }
    std::size_t pivot = 0;
    while (pivot < n && r[pivot] == F(0))
      ++pivot;
    if (pivot == n)
      return Polynomial<F>(std::move(expr)).monic();
    if (krylov)
      krylov->push_back(w);
    F const inv = F(1) / r[pivot];
    for (auto &x : r)
      x *= inv;
    for (auto &x : expr)
      x *= inv;
    rows.push_back(std::move(r));
    pivots.push_back(pivot);
    exprs.push_back(std::move(expr));
    w = mat_vec(a, w);
  }
  throw Error("Krylov sequence did not become dependent");
}

} // namespace detail

/**
 * Minimal polynomial over F as the lcm of Krylov annihilators of standard
 * basis vectors. A basis vector already in the span of earlier Krylov
 * spaces is skipped, and the loop stops once they span F^n. The result is
 * checked with m(A) = 0.
 */
template <typename F>
Polynomial<F> minimal_polynomial_krylov(Matrix<F> const &a)
{
  if (!a.is_square())
    throw DimensionMismatch("minimal polynomial of a non-square matrix");
  std::size_t const n = a.rows();
  if (n == 0)
    return Polynomial<F>::constant(F(1));
  detail::EchelonBasis<F> span(n);
  Polynomial<F> m = Polynomial<F>::constant(F(1));
  for (std::size_t j = 0; j < n && !span.full(); ++j) {
    std::vector<F> e(n, F(0));
    e[j] = F(1);
    if (span.contains(e))
      continue;
    std::vector<std::vector<F>> krylov;
    m = lcm(m, detail::krylov_annihilator(a, e, &krylov));
    for (auto &v : krylov) {
      span.reduce(v);
      bool zero = true;
      for (auto const &x : v)
        zero = zero && x == F(0);
      if (!zero)
        span.insert(std::move(v));
    }
  }
  if (!m.evaluate(a).is_zero())
    throw Error("minimal polynomial check m(A) = 0 failed");
  return m;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t result = 1;
  while (e) {
    if (e & 1u)
      result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1u;
  }
  return result;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

using ModVec = std::vector<std::uint64_t>;
using ModPoly = std::vector<std::uint64_t>; // ascending, monic, trimmed

inline void trim(ModPoly &p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline ModPoly mod_poly_rem(ModPoly a, ModPoly const &b, std::uint64_t p)
{
  std::uint64_t const inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t const factor = mul_mod(a.back(), inv, p);
    std::size_t const shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mul_mod(factor, b[j], p)) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

inline ModPoly mod_poly_monic(ModPoly a, std::uint64_t p)
{
  std::uint64_t const inv = inv_mod(a.back(), p);
  for (auto &x : a)
    x = mul_mod(x, inv, p);
  return a;
}

inline ModPoly mod_poly_gcd(ModPoly a, ModPoly b, std::uint64_t p)
{
  while (!b.empty()) {
    ModPoly r = mod_poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_poly_monic(std::move(a), p);
}

inline ModPoly mod_poly_mul(ModPoly const &a, ModPoly const &b, std::uint64_t p)
{
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return c;
}

inline ModPoly mod_poly_div(ModPoly a, ModPoly const &b, std::uint64_t p)
{
  ModPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t const inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t const factor = mul_mod(a.back(), inv, p);
    std::size_t const shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mul_mod(factor, b[j], p)) % p;
    a.pop_back();
  }
  return q;
}

inline ModPoly mod_poly_lcm(ModPoly const &a, ModPoly const &b, std::uint64_t p)
{
  return mod_poly_monic(mod_poly_mul(mod_poly_div(a, mod_poly_gcd(a, b, p), p), b, p), p);
}

/// Integer matrix reduced mod p, dense.
struct ModMatrix {
  std::size_t n;
  std::uint64_t p;
  std::vector<std::uint64_t> entries;

  ModVec apply(ModVec const &v) const
  {
    ModVec result(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned __int128 acc = 0;
      std::uint64_t const *row = entries.data() + i * n;
      for (std::size_t j = 0; j < n; ++j)
        acc += static_cast<unsigned __int128>(row[j]) * v[j];
      result[i] = static_cast<std::uint64_t>(acc % p);
    }
    return result;
  }
};

/// Annihilator of e_seed mod p; optionally records the Krylov vectors.
inline ModPoly mod_krylov_annihilator(ModMatrix const &a, std::size_t seed,
                                      std::vector<ModVec> *krylov)
{
  std::size_t const n = a.n;
  std::uint64_t const p = a.p;
  std::vector<ModVec> rows, exprs;
  std::vector<std::size_t> pivots;
  ModVec w(n, 0);
  w[seed] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    ModVec r = w;
    ModVec expr(k + 1, 0);
    expr[k] = 1;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      std::uint64_t const factor = r[pivots[b]];
      if (factor == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[b][j])
          r[j] = (r[j] + p - mul_mod(factor, rows[b][j], p)) % p;
      }
      for (std::size_t j = 0; j < exprs[b].size(); ++j)
        expr[j] = (expr[j] + p - mul_mod(factor, exprs[b][j], p)) % p;
    }
    std::size_t pivot = 0;
    while (pivot < n && r[pivot] == 0)
      ++pivot;
    if (pivot == n) {
      trim(expr);
      return mod_poly_monic(std::move(expr), p);
    }
    if (krylov)
      krylov->push_back(w);
    std::uint64_t const inv = inv_mod(r[pivot], p);
    for (auto &x : r)
      x = mul_mod(x, inv, p);
    for (auto &x : expr)
      x = mul_mod(x, inv, p);
    rows.push_back(std::move(r));
    pivots.push_back(pivot);
    exprs.push_back(std::move(expr));
    w = a.apply(w);
  }
  throw Error("modular Krylov sequence did not become dependent");
}

/// Row echelon span mod p used to pick spanning seeds.
class ModSpan {
public:
  ModSpan(std::size_t n, std::uint64_t p) : _n(n), _p(p) {}

  bool full() const { return _rows.size() == _n; }

  /// True when v was independent (and is now part of the span).
  bool add(ModVec v)
  {
    for (std::size_t b = 0; b < _rows.size(); ++b) {
      std::uint64_t const factor = v[_pivots[b]];
      if (factor == 0)
        continue;
      for (std::size_t j = 0; j < _n; ++j) {
        if (_rows[b][j])
          v[j] = (v[j] + _p - mul_mod(factor, _rows[b][j], _p)) % _p;
      }
    }
    std::size_t pivot = 0;
    while (pivot < _n && v[pivot] == 0)
      ++pivot;
    if (pivot == _n)
      return false;
    std::uint64_t const inv = inv_mod(v[pivot], _p);
    for (auto &x : v)
      x = mul_mod(x, inv, _p);
    _rows.push_back(std::move(v));
    _pivots.push_back(pivot);
    return true;
  }

  bool contains_unit(std::size_t j) const
  {
    ModVec v(_n, 0);
    v[j] = 1;
    for (std::size_t b = 0; b < _rows.size(); ++b) {
      std::uint64_t const factor = v[_pivots[b]];
      if (factor == 0)
        continue;
      for (std::size_t k = 0; k < _n; ++k) {
        if (_rows[b][k])
          v[k] = (v[k] + _p - mul_mod(factor, _rows[b][k], _p)) % _p;
      }
    }
    for (auto x : v) {
      if (x)
        return false;
    }
    return true;
  }

private:
  std::size_t _n;
  std::uint64_t _p;
  std::vector<ModVec> _rows;
  std::vector<std::size_t> _pivots;
};

/// Exact check m(B) e_j = 0 over Z for an integer matrix B.
inline bool annihilates_seed(std::vector<std::vector<Integer>> const &b,
                             std::vector<Integer> const &m, std::size_t seed)
{
  std::size_t const n = b.size();
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b[i][j] != 0)
        support[i].push_back(j);
    }
  }
  std::vector<Integer> w(n, 0);
  // Horner: w = c_D e; w = B w + c_k e
  for (std::size_t k = m.size(); k-- > 0;) {
    std::vector<Integer> next(n, 0);
    if (k + 1 < m.size()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : support[i])
          next[i] += b[i][j] * w[j];
      }
    }
    next[seed] += m[k];
    w = std::move(next);
  }
  for (auto const &x : w) {
    if (x != 0)
      return false;
  }
  return true;
}

} // namespace detail

/// Diagnostics of the multi-modular minimal polynomial computation.
struct MinpolyStats {
  std::size_t seeds = 0;
  std::size_t primes = 0;
  std::size_t degree = 0;
};

/**
 * Minimal polynomial of a rational matrix.
 *
 * The matrix is scaled to an integer matrix B. Krylov annihilators of unit
 * seeds are combined by lcm modulo word-size primes; the seeds are those
 * needed to span (Z/p0)^n at the first prime, which also spans Q^n. The
 * residues are lifted by CRT and the candidate m is then checked exactly,
 * m(B) e_j = 0 over Z for every seed, which forces m(B) = 0. Since no
 * prime gave a higher degree than m, m is minimal.
 */
inline RationalPolynomial minimal_polynomial(RationalMatrix const &a, MinpolyStats *stats = nullptr)
{
  if (!a.is_square())
    throw DimensionMismatch("minimal polynomial of a non-square matrix");
  std::size_t const n = a.rows();
  if (n == 0)
    return RationalPolynomial::constant(1);

  Integer scale = 1;
  for (auto const &x : a.data())
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n));
  Integer row_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
      row_sum += abs(b[i][j]);
    }
    if (row_sum > row_bound)
      row_bound = row_sum;
  }

  auto reduce_mod = [&](std::uint64_t p) {
    detail::ModMatrix m{n, p, std::vector<std::uint64_t>(n * n)};
    Integer r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_fdiv_r_ui(r.get_mpz_t(), b[i][j].get_mpz_t(), p);
        m.entries[i * n + j] = r.get_ui();
      }
    }
    return m;
  };

  std::uint64_t candidate = (1ull << 31) - 1;
  auto next_prime = [&] {
    while (!detail::is_prime(candidate))
      candidate -= 2;
    std::uint64_t p = candidate;
    candidate -= 2;
    return p;
  };

  // Stage A: pick spanning seeds at the first prime.
  std::vector<std::size_t> seeds;
  detail::ModPoly mu;
  std::uint64_t const p0 = next_prime();
  {
    auto const bm = reduce_mod(p0);
    detail::ModSpan span(n, p0);
    mu = {1};
    for (std::size_t j = 0; j < n && !span.full(); ++j) {
      if (span.contains_unit(j))
        continue;
      std::vector<detail::ModVec> krylov;
      mu = detail::mod_poly_lcm(mu, detail::mod_krylov_annihilator(bm, j, &krylov), p0);
      seeds.push_back(j);
      for (auto &v : krylov)
        span.add(std::move(v));
    }
    if (!span.full())
      throw Error("Krylov spaces of the unit vectors do not span");
  }

  std::vector<std::pair<std::uint64_t, detail::ModPoly>> residues{{p0, mu}};
  std::size_t degree = mu.size() - 1;
  Integer coefficient_bound; // 2 (1 + rho)^D bounds twice every |c_k|
  mpz_pow_ui(coefficient_bound.get_mpz_t(), Integer(row_bound + 1).get_mpz_t(), degree);
  coefficient_bound *= 2;

  std::size_t primes_used = 1;
  constexpr std::size_t max_primes = 4000;
  for (;;) {
    Integer modulus = 1;
    for (auto const &[p, _] : residues)
      modulus *= p;
    if (modulus > coefficient_bound) {
      // CRT lift to symmetric residues
      std::vector<Integer> coeffs(degree + 1, 0);
      Integer m = 1;
      for (auto const &[p, poly] : residues) {
        Integer inv;
        Integer pz(static_cast<unsigned long>(p));
        mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t k = 0; k <= degree; ++k) {
          Integer diff = Integer(static_cast<unsigned long>(poly[k])) - coeffs[k];
          Integer t = diff * inv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
          coeffs[k] += m * t;
        }
        m *= pz;
      }
      Integer const half = m / 2;
      for (auto &c : coeffs) {
        if (c > half)
          c -= m;
      }
      bool certified = true;
      for (std::size_t seed : seeds) {
        if (!detail::annihilates_seed(b, coeffs, seed)) {
          certified = false;
          break;
        }
      }
      if (certified) {
        // m_A(x) = scale^-D m_B(scale x)
        std::vector<Rational> out(degree + 1);
        for (std::size_t k = 0; k <= degree; ++k) {
          Integer denom;
          mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), degree - k);
          out[k] = Rational(coeffs[k], denom);
          out[k].canonicalize();
        }
        if (stats)
          *stats = MinpolyStats{seeds.size(), primes_used, degree};
        return RationalPolynomial(std::move(out));
      }
      coefficient_bound *= Integer(1) << 62;
    }
    if (primes_used >= max_primes)
      throw ResourceBoundExceeded("minimal polynomial: no certified result after " +
                                  std::to_string(max_primes) + " primes");
    std::uint64_t const p = next_prime();
    ++primes_used;
    auto const bm = reduce_mod(p);
    detail::ModPoly poly{1};
    for (std::size_t seed : seeds)
      poly = detail::mod_poly_lcm(poly, detail::mod_krylov_annihilator(bm, seed, nullptr), p);
    std::size_t const d = poly.size() - 1;
    if (d < degree)
      continue; // unlucky prime
    if (d > degree) {
      residues.clear();
      degree = d;
      mpz_pow_ui(coefficient_bound.get_mpz_t(), Integer(row_bound + 1).get_mpz_t(), degree);
      coefficient_bound *= 2;
    }
    residues.emplace_back(p, std::move(poly));
  }
}

/// Squarefree minimal polynomial. Over Q this is equivalent to
/// diagonalizability over C.
inline bool is_diagonalizable(RationalMatrix const &a)
{
  if (!a.is_square())
    throw DimensionMismatch("diagonalizability of a non-square matrix");
  return is_squarefree(minimal_polynomial(a));
}

template <typename F>
bool is_diagonalizable_over(Matrix<F> const &a)
{
  return is_squarefree(minimal_polynomial_krylov(a));
}

} // namespace symdg

#endif // SYMDG_MINPOLY_HPP
