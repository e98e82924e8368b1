#ifndef SYMDG_PERMUTATION_HPP
#define SYMDG_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "symdg/errors.hpp"

namespace symdg {

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1} stored as an image array.
 *
 * Products compose left to right: (p * q)[i] == q[p[i]], i.e. the group acts
 * on the right and x^g denotes g^-1 x g. The cycle notation accepted and
 * produced at the text boundary is 1-based.
 */
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : _images(degree)
  {
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : _images(std::move(images))
  {
    std::vector<bool> seen(_images.size(), false);
    for (Point image : _images) {
      if (image >= _images.size() || seen[image])
        throw InvalidCycles("image array is not a bijection");
      seen[image] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return _images.size(); }

  Point operator[](std::size_t i) const { return _images[i]; }

  std::span<Point const> images() const { return _images; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i)
        return false;
    }
    return true;
  }

  Permutation inverse() const
  {
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      result._images[_images[i]] = static_cast<Point>(i);
    return result;
  }

  /// First this, then rhs.
  Permutation operator*(Permutation const &rhs) const
  {
    check_degree(rhs);
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      result._images[i] = rhs._images[_images[i]];
    return result;
  }

  Permutation &operator*=(Permutation const &rhs)
  {
    check_degree(rhs);
    for (auto &image : _images)
      image = rhs._images[image];
    return *this;
  }

  Permutation pow(long long exponent) const
  {
    Permutation base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    Permutation result(degree());
    while (e > 0) {
      if (e & 1u)
        result *= base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    for (auto const &cycle : cycles())
      result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
    return result;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t smallest_moved_point() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i)
        return i;
    }
    return _images.size();
  }

  /// Nontrivial cycles, 0-based, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const
  {
    std::vector<std::vector<Point>> result;
    std::vector<bool> done(_images.size(), false);
    for (std::size_t start = 0; start < _images.size(); ++start) {
      if (done[start] || _images[start] == start)
        continue;
      std::vector<Point> cycle;
      for (Point p = static_cast<Point>(start); !done[p]; p = _images[p]) {
        done[p] = true;
        cycle.push_back(p);
      }
      result.push_back(std::move(cycle));
    }
    return result;
  }

  /// 1-based disjoint cycle string, "()" for the identity.
  std::string to_cycle_string() const
  {
    auto const cs = cycles();
    if (cs.empty())
      return "()";
    std::ostringstream out;
    for (auto const &cycle : cs) {
      out << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i)
        out << (i ? "," : "") << cycle[i] + 1;
      out << ')';
    }
    return out.str();
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs, Permutation const &rhs)
  {
    return lhs._images <=> rhs._images;
  }

private:
  void check_degree(Permutation const &rhs) const
  {
    if (rhs.degree() != degree())
      throw DegreeMismatch("permutation degrees differ: " + std::to_string(degree()) +
                           " vs " + std::to_string(rhs.degree()));
  }

  std::vector<Point> _images;
};

/// x^g = g^-1 x g.
inline Permutation conjugate(Permutation const &x, Permutation const &g)
{
  return g.inverse() * x * g;
}

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/**
 * Builds the product of disjoint cycles given with 1-based points.
 * Points outside 1..degree or repeated anywhere raise InvalidCycles.
 */
inline Permutation perm_from_cycles(std::vector<std::vector<long long>> const &cycles,
                                    std::size_t degree)
{
  if (degree == 0)
    throw InvalidCycles("degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (long long point : cycle) {
      if (point < 1 || static_cast<unsigned long long>(point) > degree)
        throw InvalidCycles("cycle point " + std::to_string(point) + " outside 1.." +
                            std::to_string(degree));
      if (used[point - 1])
        throw InvalidCycles("cycle point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = cycle[i] - 1;
      auto to = cycle[(i + 1) % cycle.size()] - 1;
      images[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(images));
}

/// Parses "(1,2)(3,4,5)" (whitespace allowed, "()" or "" is the identity).
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<long long>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidCycles("expected '(' in cycle string \"" + std::string(text) + "\"");
    ++i;
    std::vector<long long> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
      if (start == i)
        throw InvalidCycles("expected a point in cycle string \"" + std::string(text) + "\"");
      cycle.push_back(std::stoll(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw InvalidCycles("unterminated cycle in \"" + std::string(text) + "\"");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return perm_from_cycles(cycles, degree);
}

} // namespace symdg

#endif // SYMDG_PERMUTATION_HPP
