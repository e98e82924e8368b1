#ifndef SYMDG_COSET_HPP
#define SYMDG_COSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/group.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

/**
 * Action of G on the right cosets of a subgroup H by right multiplication.
 *
 * A coset Hx is labelled by its fingerprint, the lexicographically least
 * image array among the elements hx (h in H). Labels are numbered in
 * breadth-first order from H itself, so label 0 is always H.
 */
class CosetAction {
public:
  CosetAction(PermutationGroup parent, PermutationGroup subgroup,
              std::uint64_t enumeration_bound = kDefaultEnumerationBound)
  : _parent(std::move(parent)), _subgroup(std::move(subgroup))
  {
    if (_parent.degree() != _subgroup.degree())
      throw DegreeMismatch("coset action: group and subgroup degrees differ");
    for (auto const &h : _subgroup.generators()) {
      if (!_parent.contains(h))
        throw NotSubgroup("coset action: subgroup generator " + h.to_cycle_string() +
                          " is not in the group");
    }
    if (_parent.order() > mpz_class(std::to_string(enumeration_bound)))
      throw EnumerationBoundExceeded("coset action: |G| = " + _parent.order().get_str() +
                                     " exceeds the enumeration bound");
    _subgroup_elements = _subgroup.enumerate(enumeration_bound);

    std::size_t const ngens = _parent.generators().size();
    std::vector<std::vector<Point>> images(ngens);
    add_coset(fingerprint(Permutation(_parent.degree())), 0, 0);
    for (std::size_t k = 0; k < _representatives.size(); ++k) {
      for (std::size_t gi = 0; gi < ngens; ++gi) {
        Permutation next = _representatives[k] * _parent.generators()[gi];
        Permutation fp = fingerprint(next);
        auto it = _labels.find(fp);
        std::size_t label;
        if (it == _labels.end()) {
          label = _representatives.size();
          add_coset(std::move(fp), k, gi);
        } else {
          label = it->second;
        }
        images[gi].push_back(static_cast<Point>(label));
      }
    }
    mpz_class const expected = _parent.order() / _subgroup.order();
    if (mpz_class(static_cast<unsigned long>(_representatives.size())) != expected)
      throw Error("coset action: found " + std::to_string(_representatives.size()) +
                  " cosets, expected |G:H| = " + expected.get_str());
    for (auto &img : images)
      _induced.emplace_back(std::move(img));
  }

  PermutationGroup const &parent() const { return _parent; }
  PermutationGroup const &subgroup() const { return _subgroup; }
  std::size_t degree() const { return _representatives.size(); }

  /// Generators of G acting on coset labels, one per generator of G.
  std::vector<Permutation> const &induced_generators() const { return _induced; }

  std::vector<Permutation> const &subgroup_elements() const { return _subgroup_elements; }

  /// Fingerprint of the coset with this label; it is an element of that coset.
  Permutation const &representative(std::size_t label) const { return _representatives[label]; }

  /// Lexicographically least element of Hx.
  Permutation fingerprint(Permutation const &x) const
  {
    std::size_t const n = x.degree();
    std::vector<Point> best, candidate(n);
    for (auto const &h : _subgroup_elements) {
      bool smaller = best.empty();
      bool decided = smaller;
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = x[h[i]];
        if (!decided && candidate[i] != best[i]) {
          smaller = candidate[i] < best[i];
          decided = true;
          if (!smaller)
            break;
        }
      }
      if (smaller)
        best = candidate;
    }
    return Permutation(std::move(best));
  }

  /// Label of Hx; x must lie in G.
  std::size_t label_of(Permutation const &x) const
  {
    if (!_parent.contains(x))
      throw NotInGroup("coset label: " + x.to_cycle_string() + " is not in the group");
    auto it = _labels.find(fingerprint(x));
    if (it == _labels.end())
      throw Error("coset label: fingerprint missing from the coset table");
    return it->second;
  }

  /**
   * For every label k, the permutation of labels induced by right
   * multiplication with the breadth-first generator word w_k that reaches k
   * (so H w_k is coset k). Row k has entry i = label of (coset i) w_k.
   */
  std::vector<std::vector<Point>> translations() const
  {
    std::size_t const n = degree();
    std::vector<std::vector<Point>> result(n);
    result[0].resize(n);
    for (std::size_t i = 0; i < n; ++i)
      result[0][i] = static_cast<Point>(i);
    for (std::size_t k = 1; k < n; ++k) {
      auto const [parent_label, gen] = _tree[k];
      auto const &base = result[parent_label];
      auto const &g = _induced[gen];
      result[k].resize(n);
      for (std::size_t i = 0; i < n; ++i)
        result[k][i] = g[base[i]];
    }
    return result;
  }

private:
  void add_coset(Permutation fp, std::size_t parent_label, std::size_t generator)
  {
    _labels.emplace(fp, _representatives.size());
    _representatives.push_back(std::move(fp));
    _tree.push_back({parent_label, generator});
  }

  struct TreeEdge {
    std::size_t parent;
    std::size_t generator;
  };

  PermutationGroup _parent;
  PermutationGroup _subgroup;
  std::vector<Permutation> _subgroup_elements;
  std::vector<Permutation> _representatives;
  std::unordered_map<Permutation, std::size_t, PermutationHash> _labels;
  std::vector<TreeEdge> _tree;
  std::vector<Permutation> _induced;
};

/// Labels of the right cosets contained in HgH, sorted.
inline std::vector<std::size_t> double_coset_cosets(CosetAction const &action,
                                                    Permutation const &g)
{
  if (!action.parent().contains(g))
    throw NotInGroup("double coset: " + g.to_cycle_string() + " is not in the group");
  std::set<std::size_t> labels;
  for (auto const &h : action.subgroup_elements())
    labels.insert(action.label_of(g * h));
  return {labels.begin(), labels.end()};
}

/// |H ∩ H^g| by filtering the elements of H through membership in H^g.
inline std::size_t conjugate_intersection_order(PermutationGroup const &subgroup,
                                                Permutation const &g,
                                                std::uint64_t bound = kDefaultEnumerationBound)
{
  Permutation const g_inv = g.inverse();
  std::size_t count = 0;
  for (auto const &x : subgroup.enumerate(bound)) {
    // x ∈ H^g  <=>  g x g^-1 ∈ H
    if (subgroup.contains(g * x * g_inv))
      ++count;
  }
  return count;
}

/// Elements p ≠ 1 with p² = 1, sorted and deduplicated.
inline std::vector<Permutation> involutions_in(std::span<Permutation const> elements)
{
  std::vector<Permutation> result;
  for (auto const &p : elements) {
    if (!p.is_identity() && (p * p).is_identity())
      result.push_back(p);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

} // namespace symdg

#endif // SYMDG_COSET_HPP
