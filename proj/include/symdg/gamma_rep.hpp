#ifndef SYMDG_GAMMA_REP_HPP
#define SYMDG_GAMMA_REP_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/gamma.hpp"
#include "symdg/matrix.hpp"
#include "symdg/rational.hpp"

namespace symdg {

/// x = a_1^{ε_1} ... a_s^{ε_s} b^m with a_k = a^{b^k}, m in 1..2s.
struct GammaNormalForm {
  std::vector<int> epsilon; // epsilon[k - 1] = ε_k
  long long m = 0;
};

/// Normal form of x ∈ R_s: the unique m with x b^-m ∈ N, then ε_k = 1 iff point 2k-1 moves.
inline GammaNormalForm gamma_normal_form(GammaFamilyInstance const &gi, Permutation const &x)
{
  long long const two_s = static_cast<long long>(2 * gi.s);
  for (long long m = 1; m <= two_s; ++m) {
    Permutation const y = x * gi.b.pow(-m);
    if (!gi.N.contains(y))
      continue;
    GammaNormalForm nf;
    nf.m = m;
    for (std::size_t k = 1; k <= gi.s; ++k)
      nf.epsilon.push_back(y[2 * k - 2] != 2 * k - 2 ? 1 : 0);
    return nf;
  }
  throw NotInGroup("Γ_s normal form: " + x.to_cycle_string() + " is not in R_s");
}

/// Element of R_s with the given normal form.
inline Permutation gamma_from_normal_form(GammaFamilyInstance const &gi, GammaNormalForm const &nf)
{
  Permutation x(4 * gi.s);
  for (std::size_t k = 1; k <= gi.s; ++k) {
    if (nf.epsilon[k - 1])
      x *= conjugate(gi.a, gi.b.pow(static_cast<long long>(k)));
  }
  return x * gi.b.pow(nf.m);
}

namespace detail {

inline std::size_t wrap_index(long long i, std::size_t s)
{
  long long const ls = static_cast<long long>(s);
  return static_cast<std::size_t>(((i - 1) % ls + ls) % ls); // representative in 1..s, returned 0-based
}

inline Rational sign(long long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace detail

/**
 * ρ(x) for the representation of R_s used to show Γ_s is not diagonalizable.
 * Odd s: row i is the image of e_i, (-1)^{-ε_{2-2i} + Σ ε_k} e_{i + m(s-1)/2},
 * subscripts in 1..s mod s. Even s: the 2x2 matrix with rows
 * (-1)^{δ_i} (m+i mod 2, m+i+1 mod 2), δ_i = Σ_{k<s/2} ε_{2k+i}.
 */
inline RationalMatrix gamma_rho(std::size_t s, GammaNormalForm const &nf)
{
  long long total = 0;
  for (int e : nf.epsilon)
    total += e;
  if (s % 2 == 1) {
    RationalMatrix m(s, s);
    long long const ls = static_cast<long long>(s);
    for (long long i = 1; i <= ls; ++i) {
      long long const exponent = -nf.epsilon[detail::wrap_index(2 - 2 * i, s)] + total;
      m(static_cast<std::size_t>(i - 1), detail::wrap_index(i + nf.m * (ls - 1) / 2, s)) = detail::sign(exponent);
    }
    return m;
  }
  RationalMatrix m(2, 2);
  for (std::size_t i = 1; i <= 2; ++i) {
    long long delta = 0;
    for (std::size_t k = 0; k < s / 2; ++k)
      delta += nf.epsilon[2 * k + i - 1];
    Rational const sg = detail::sign(delta);
    m(i - 1, 0) = sg * Rational(static_cast<long>((nf.m + static_cast<long long>(i)) % 2));
    m(i - 1, 1) = sg * Rational(static_cast<long>((nf.m + static_cast<long long>(i) + 1) % 2));
  }
  return m;
}

inline RationalMatrix gamma_rho(GammaFamilyInstance const &gi, Permutation const &x)
{
  return gamma_rho(gi.s, gamma_normal_form(gi, x));
}

/// 2 E_{1,(s+1)/2} for odd s, [[0,2],[0,0]] for even s.
inline RationalMatrix gamma_expected_sum(std::size_t s)
{
  if (s % 2 == 1) {
    RationalMatrix m(s, s);
    m(0, (s + 1) / 2 - 1) = 2;
    return m;
  }
  RationalMatrix m(2, 2);
  m(0, 1) = 2;
  return m;
}

struct GammaRepEvaluation {
  std::size_t s = 0;
  bool odd = false;
  GammaNormalForm ab_form, b_form;
  RationalMatrix rho_ab, rho_b, sum;
  bool sum_matches = false;
  bool sum_nilpotent = false;
  bool identity_maps_to_identity = false;
  std::size_t pairs_checked = 0;
  std::size_t multiplicative_failures = 0;
  /// First failing pair as cycle strings, empty if none.
  std::string first_failure;

  bool multiplicative() const { return multiplicative_failures == 0; }
};

/**
 * Evaluates ρ(ab), ρ(b) and checks ρ(xy) = ρ(x) ρ(y) on all pairs of R_s
 * when |R_s|² <= max_pairs, otherwise on max_pairs seeded random pairs.
 */
inline GammaRepEvaluation gamma_rep(GammaFamilyInstance const &gi, std::size_t max_pairs = 20000,
                                    std::uint64_t seed = 1)
{
  GammaRepEvaluation ev;
  ev.s = gi.s;
  ev.odd = gi.s % 2 == 1;
  ev.ab_form = gamma_normal_form(gi, gi.a * gi.b);
  ev.b_form = gamma_normal_form(gi, gi.b);
  ev.rho_ab = gamma_rho(gi.s, ev.ab_form);
  ev.rho_b = gamma_rho(gi.s, ev.b_form);
  ev.sum = ev.rho_ab + ev.rho_b;
  ev.sum_matches = ev.sum == gamma_expected_sum(gi.s);
  ev.sum_nilpotent = !ev.sum.is_zero() && (ev.sum * ev.sum).is_zero();
  std::size_t const dim = ev.rho_b.rows();
  ev.identity_maps_to_identity = gamma_rho(gi, Permutation(4 * gi.s)) == RationalMatrix::identity(dim);

  auto const &elements = gi.elements;
  std::vector<RationalMatrix> rho;
  rho.reserve(elements.size());
  for (auto const &x : elements)
    rho.push_back(gamma_rho(gi, x));
  auto check = [&](std::size_t i, std::size_t j) {
    ++ev.pairs_checked;
    if (gamma_rho(gi, elements[i] * elements[j]) != rho[i] * rho[j]) {
      if (ev.multiplicative_failures++ == 0)
        ev.first_failure = "x = " + elements[i].to_cycle_string() + ", y = " + elements[j].to_cycle_string();
    }
  };
  std::size_t const n = elements.size();
  if (n * n <= max_pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        check(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < max_pairs; ++t)
      check(pick(rng), pick(rng));
  }
  return ev;
}

} // namespace symdg

#endif // SYMDG_GAMMA_REP_HPP
