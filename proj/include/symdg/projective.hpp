#ifndef SYMDG_PROJECTIVE_HPP
#define SYMDG_PROJECTIVE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

/// Points of PG(1,7): 0..6 are field elements, 7 is infinity.
inline constexpr Point kInfinity = 7;
inline constexpr long long kFieldSize = 7;

inline long long mod7(long long x) { return ((x % kFieldSize) + kFieldSize) % kFieldSize; }

inline long long inv7(long long x)
{
  x = mod7(x);
  if (x == 0)
    throw DomainError("zero has no inverse in F_7");
  for (long long y = 1; y < kFieldSize; ++y) {
    if (mod7(x * y) == 1)
      return y;
  }
  throw DomainError("no inverse in F_7");
}

/// Row-major 2x2 matrix [[a, b], [c, d]] over F_7.
using Matrix2 = std::array<long long, 4>;

/**
 * x -> (a x + c) / (b x + d) on PG(1,7). Infinity goes to a/b (infinity if
 * b = 0), and -d/b goes to infinity.
 */
inline Permutation linear_fractional(Matrix2 const &m)
{
  long long const a = mod7(m[0]), b = mod7(m[1]), c = mod7(m[2]), d = mod7(m[3]);
  if (mod7(a * d - b * c) == 0)
    throw DomainError("linear fractional map of a singular matrix");
  std::vector<Point> images(kFieldSize + 1);
  for (long long x = 0; x < kFieldSize; ++x) {
    long long const den = mod7(b * x + d);
    images[x] = den == 0 ? kInfinity : static_cast<Point>(mod7((a * x + c) * inv7(den)));
  }
  images[kInfinity] = b == 0 ? kInfinity : static_cast<Point>(mod7(a * inv7(b)));
  return Permutation(std::move(images));
}

/// Point (x, y) of PG(1,7)^2 is 8 x + y.
inline Point pair_point(Point x, Point y) { return 8 * x + y; }

/// (x, y) -> (f x, g y) on 64 points.
inline Permutation product_action(Permutation const &f, Permutation const &g)
{
  std::vector<Point> images(64);
  for (Point x = 0; x < 8; ++x) {
    for (Point y = 0; y < 8; ++y)
      images[pair_point(x, y)] = pair_point(f[x], g[y]);
  }
  return Permutation(std::move(images));
}

/// (x, y) -> (y, x).
inline Permutation coordinate_swap()
{
  std::vector<Point> images(64);
  for (Point x = 0; x < 8; ++x) {
    for (Point y = 0; y < 8; ++y)
      images[pair_point(x, y)] = pair_point(y, x);
  }
  return Permutation(std::move(images));
}

} // namespace symdg

#endif // SYMDG_PROJECTIVE_HPP
