#ifndef SYMDG_JORDAN_HPP
#define SYMDG_JORDAN_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/rational.hpp"

namespace symdg {

enum class EigenTag { Zero, NonzeroProduct };

struct JordanBlock {
  EigenTag eigenvalue;
  std::size_t size;

  friend bool operator==(JordanBlock const &, JordanBlock const &) = default;
};

/// Jordan blocks of J(alpha, s) ⊗ J(beta, t); only whether alpha, beta vanish matters.
struct JordanSpec {
  bool alpha_zero = false;
  bool beta_zero = false;
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<JordanBlock> blocks; // sizes non-increasing

  std::size_t total_size() const
  {
    std::size_t total = 0;
    for (auto const &b : blocks)
      total += b.size;
    return total;
  }

  std::vector<std::size_t> sizes() const
  {
    std::vector<std::size_t> result;
    for (auto const &b : blocks)
      result.push_back(b.size);
    return result;
  }

  bool diagonalizable() const
  {
    return std::all_of(blocks.begin(), blocks.end(), [](JordanBlock const &b) { return b.size == 1; });
  }
};

inline JordanSpec jordan_tensor_spec(bool alpha_zero, bool beta_zero, std::size_t s, std::size_t t)
{
  if (s == 0 || t == 0)
    throw DomainError("Jordan block sizes must be positive");
  JordanSpec spec{alpha_zero, beta_zero, s, t, {}};
  std::size_t const lo = std::min(s, t);
  std::size_t const hi = std::max(s, t);
  auto add = [&](EigenTag tag, std::size_t size, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      spec.blocks.push_back({tag, size});
  };
  if (alpha_zero && beta_zero) {
    add(EigenTag::Zero, lo, hi - lo + 1);
    for (std::size_t k = lo; k-- > 1;)
      add(EigenTag::Zero, k, 2);
  } else if (alpha_zero) {
    add(EigenTag::Zero, s, t);
  } else if (beta_zero) {
    add(EigenTag::Zero, t, s);
  } else {
    for (std::size_t k = 1; k <= lo; ++k)
      add(EigenTag::NonzeroProduct, s + t + 1 - 2 * k, 1);
  }
  std::stable_sort(spec.blocks.begin(), spec.blocks.end(),
                   [](JordanBlock const &x, JordanBlock const &y) { return x.size > y.size; });
  return spec;
}

/// J(lambda, size): lambda on the diagonal, ones on the superdiagonal.
template <typename F>
Matrix<F> jordan_block(F const &lambda, std::size_t size)
{
  Matrix<F> j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = lambda;
    if (i + 1 < size)
      j(i, i + 1) = F(1);
  }
  return j;
}

/**
 * Block sizes at lambda, non-increasing, from the ranks r_k of (A - lambda I)^k:
 * the number of blocks of size >= k is r_{k-1} - r_k.
 */
template <typename F>
std::vector<std::size_t> jordan_block_sizes(Matrix<F> const &a, F const &lambda)
{
  if (!a.is_square())
    throw DimensionMismatch("Jordan structure of a non-square matrix");
  std::size_t const n = a.rows();
  Matrix<F> const shifted = a - lambda * Matrix<F>::identity(n);
  std::vector<std::size_t> ranks{n};
  Matrix<F> power = Matrix<F>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * shifted;
    ranks.push_back(rank(power));
    if (ranks[k] == ranks[k - 1])
      break;
  }
  ranks.push_back(ranks.back());
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = ranks[k] - ranks[k + 1];
    for (std::size_t i = 0; i < at_least_k - at_least_next; ++i)
      sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

inline std::vector<std::size_t> jordan_structure_rational(RationalMatrix const &a, Rational const &lambda)
{
  return jordan_block_sizes(a, lambda);
}

} // namespace symdg

#endif // SYMDG_JORDAN_HPP
