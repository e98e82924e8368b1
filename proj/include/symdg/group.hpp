#ifndef SYMDG_GROUP_HPP
#define SYMDG_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symdg/errors.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

/// Operations that need every element of a group refuse beyond this size.
inline constexpr std::uint64_t kDefaultEnumerationBound = 2'000'000;

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Each new base point is the smallest point moved by the generator that
 * required it, so two chains built from the same generator list are equal.
 */
class StabilizerChain {
public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // transversal[p] maps base to p; only valid where in_orbit[p].
    std::vector<Permutation> transversal;
    std::vector<bool> in_orbit;
  };

  StabilizerChain() = default;

  StabilizerChain(std::size_t degree, std::span<Permutation const> generators)
  : _degree(degree)
  {
    build(generators);
  }

  std::size_t degree() const { return _degree; }

  std::vector<Level> const &levels() const { return _levels; }

  std::vector<Point> base() const
  {
    std::vector<Point> result;
    for (auto const &level : _levels)
      result.push_back(level.base);
    return result;
  }

  mpz_class order() const
  {
    mpz_class result = 1;
    for (auto const &level : _levels)
      result *= static_cast<unsigned long>(level.orbit.size());
    return result;
  }

  /// Strips g through levels [from, depth). Returns the residue and the
  /// level at which sifting stopped (depth when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const
  {
    for (std::size_t i = from; i < _levels.size(); ++i) {
      auto const &level = _levels[i];
      Point image = g[level.base];
      if (!level.in_orbit[image])
        return {std::move(g), i};
      g *= level.transversal[image].inverse();
    }
    return {std::move(g), _levels.size()};
  }

  bool contains(Permutation const &g) const
  {
    auto [residue, level] = sift(g);
    return level == _levels.size() && residue.is_identity();
  }

private:
  void build(std::span<Permutation const> input)
  {
    std::vector<Permutation> strong;
    for (auto const &g : input) {
      if (g.degree() != _degree)
        throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                             " differs from group degree " + std::to_string(_degree));
      if (!g.is_identity())
        strong.push_back(g);
    }

    for (auto const &g : strong) {
      bool fixes_base = std::all_of(_levels.begin(), _levels.end(),
                                    [&](Level const &l) { return g[l.base] == l.base; });
      if (fixes_base)
        push_level(static_cast<Point>(g.smallest_moved_point()));
    }
    for (std::size_t i = 0; i < _levels.size(); ++i) {
      for (auto const &g : strong) {
        if (fixes_prefix(g, i))
          _levels[i].generators.push_back(g);
      }
      rebuild_orbit(_levels[i]);
    }

    std::size_t i = _levels.size();
    while (i > 0) {
      std::size_t const current = i - 1;
      std::optional<std::size_t> restart = check_level(current);
      if (restart)
        i = *restart + 1;
      else
        --i;
    }
  }

  // Sifts every Schreier generator of level `current`; on the first failure
  // the residue is added to the levels below and the deepest touched level
  // is returned.
  std::optional<std::size_t> check_level(std::size_t current)
  {
    Level const &level = _levels[current];
    auto const orbit = level.orbit;
    auto const generators = level.generators;
    for (Point p : orbit) {
      for (auto const &s : generators) {
        Point image = s[p];
        Permutation schreier = _levels[current].transversal[p] * s *
                               _levels[current].transversal[image].inverse();
        if (schreier.is_identity())
          continue;
        auto [residue, stop] = sift(std::move(schreier), current + 1);
        if (stop == _levels.size() && residue.is_identity())
          continue;
        if (stop == _levels.size())
          push_level(static_cast<Point>(residue.smallest_moved_point()));
        for (std::size_t l = current + 1; l <= stop; ++l) {
          _levels[l].generators.push_back(residue);
          rebuild_orbit(_levels[l]);
        }
        return stop;
      }
    }
    return std::nullopt;
  }

  bool fixes_prefix(Permutation const &g, std::size_t count) const
  {
    for (std::size_t l = 0; l < count; ++l) {
      if (g[_levels[l].base] != _levels[l].base)
        return false;
    }
    return true;
  }

  void push_level(Point base)
  {
    Level level;
    level.base = base;
    _levels.push_back(std::move(level));
    rebuild_orbit(_levels.back());
  }

  void rebuild_orbit(Level &level) const
  {
    level.orbit.assign(1, level.base);
    level.in_orbit.assign(_degree, false);
    level.transversal.assign(_degree, Permutation());
    level.in_orbit[level.base] = true;
    level.transversal[level.base] = Permutation(_degree);
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      Point p = level.orbit[k];
      for (auto const &g : level.generators) {
        Point q = g[p];
        if (!level.in_orbit[q]) {
          level.in_orbit[q] = true;
          level.transversal[q] = level.transversal[p] * g;
          level.orbit.push_back(q);
        }
      }
    }
  }

  std::size_t _degree = 0;
  std::vector<Level> _levels;
};

/**
 * A permutation group given by generators, with its stabilizer chain built at
 * construction. Instances are immutable afterwards.
 */
class PermutationGroup {
public:
  PermutationGroup() = default;

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
  : _degree(degree), _generators(std::move(generators))
  {
    if (degree == 0)
      throw DegreeMismatch("group degree must be positive");
    _chain = StabilizerChain(_degree, _generators);
  }

  /// Degree taken from the first generator; at least one generator required.
  static PermutationGroup generated_by(std::vector<Permutation> generators)
  {
    if (generators.empty())
      throw DegreeMismatch("cannot infer degree from an empty generator list");
    std::size_t degree = generators.front().degree();
    return PermutationGroup(degree, std::move(generators));
  }

  std::size_t degree() const { return _degree; }

  std::vector<Permutation> const &generators() const { return _generators; }

  StabilizerChain const &chain() const { return _chain; }

  mpz_class order() const { return _chain.order(); }

  bool contains(Permutation const &p) const
  {
    if (p.degree() != _degree)
      throw DegreeMismatch("membership test: permutation degree " + std::to_string(p.degree()) +
                           " vs group degree " + std::to_string(_degree));
    return _chain.contains(p);
  }

  bool is_subgroup_of(PermutationGroup const &other) const
  {
    return std::all_of(_generators.begin(), _generators.end(),
                       [&](Permutation const &g) { return other.contains(g); });
  }

  /// All elements sorted by image array. The identity comes first.
  std::vector<Permutation> enumerate(std::uint64_t bound = kDefaultEnumerationBound) const
  {
    if (order() > mpz_class(std::to_string(bound)))
      throw EnumerationBoundExceeded("group order " + order().get_str() +
                                     " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<Permutation> result;
    result.reserve(order().get_ui());
    auto const &levels = _chain.levels();
    std::function<void(std::size_t, Permutation const &)> expand =
      [&](std::size_t depth, Permutation const &suffix) {
        if (depth == 0) {
          result.push_back(suffix);
          return;
        }
        auto const &level = levels[depth - 1];
        for (Point p : level.orbit)
          expand(depth - 1, suffix * level.transversal[p]);
      };
    expand(levels.size(), Permutation(_degree));
    std::sort(result.begin(), result.end());
    return result;
  }

  template <typename Rng>
  Permutation random_element(Rng &rng) const
  {
    Permutation result(_degree);
    for (auto it = _chain.levels().rbegin(); it != _chain.levels().rend(); ++it) {
      std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
      result *= it->transversal[it->orbit[pick(rng)]];
    }
    return result;
  }

private:
  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  StabilizerChain _chain;
};

/// Order of the group generated by gens; all must share one degree.
inline mpz_class group_order(std::vector<Permutation> const &gens)
{
  return PermutationGroup::generated_by(gens).order();
}

inline bool membership(Permutation const &p, PermutationGroup const &group)
{
  return group.contains(p);
}

/// Sorted orbit of `point` under the generators.
inline std::vector<Point> orbit(std::span<Permutation const> generators, std::size_t degree,
                                Point point)
{
  if (point >= degree)
    throw DomainError("orbit: point " + std::to_string(point) + " outside the domain");
  std::vector<bool> seen(degree, false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (auto const &g : generators) {
      Point q = g[result[k]];
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<Point> orbit(PermutationGroup const &group, Point point)
{
  return orbit(group.generators(), group.degree(), point);
}

inline bool is_transitive(std::span<Permutation const> generators, std::size_t degree)
{
  return orbit(generators, degree, 0).size() == degree;
}

inline bool is_transitive(PermutationGroup const &group)
{
  return is_transitive(group.generators(), group.degree());
}

/**
 * Smallest block of imprimitivity containing 0 and `other`, found by closing
 * the pair {0, other} under the generators with union-find.
 */
inline std::vector<Point> minimal_block(std::span<Permutation const> generators,
                                        std::size_t degree, Point other)
{
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::deque<std::pair<Point, Point>> pending;
  auto merge = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry)
      return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    pending.emplace_back(x, y);
  };
  merge(0, other);
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (auto const &g : generators)
      merge(g[x], g[y]);
  }
  std::vector<Point> block;
  Point root = find(0);
  for (Point p = 0; p < degree; ++p) {
    if (find(p) == root)
      block.push_back(p);
  }
  return block;
}

/// Primitivity of a transitive group; throws NotTransitive otherwise.
inline bool is_primitive(std::span<Permutation const> generators, std::size_t degree)
{
  if (!is_transitive(generators, degree))
    throw NotTransitive("primitivity is only defined for transitive groups");
  for (Point b = 1; b < degree; ++b) {
    if (minimal_block(generators, degree, b).size() != degree)
      return false;
  }
  return true;
}

inline bool is_primitive(PermutationGroup const &group)
{
  return is_primitive(group.generators(), group.degree());
}

} // namespace symdg

#endif // SYMDG_GROUP_HPP
