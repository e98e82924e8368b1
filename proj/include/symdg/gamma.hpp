#ifndef SYMDG_GAMMA_HPP
#define SYMDG_GAMMA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdg/coset.hpp"
#include "symdg/digraph.hpp"
#include "symdg/errors.hpp"
#include "symdg/group.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

/**
 * Γ_s = Cay(R_s, {ab, b}) on 4s points together with the groups
 * G = <h, g> ≥ R_s and H = <h^{g^i} : i < s> that model it as a coset digraph.
 */
struct GammaFamilyInstance {
  std::size_t s = 0;
  Permutation a, b, h, g;
  PermutationGroup R, N, G, H;
  /// Vertex elements in breadth-first order from the identity.
  std::vector<Permutation> elements;
  std::vector<Permutation> connection_set; // {ab, b}
  Digraph digraph;
  std::shared_ptr<CosetAction const> coset_action;
};

/// Closure of {1} under left multiplication by `steps`, breadth first.
inline std::vector<Permutation> breadth_first_elements(std::size_t degree,
                                                       std::vector<Permutation> const &steps,
                                                       std::uint64_t bound = kDefaultEnumerationBound)
{
  std::vector<Permutation> order{Permutation(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{order.front(), 0}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto const &st : steps) {
      Permutation next = st * order[k];
      if (seen.emplace(next, order.size()).second) {
        order.push_back(std::move(next));
        if (order.size() > bound)
          throw EnumerationBoundExceeded("breadth-first enumeration exceeds the bound " +
                                         std::to_string(bound));
      }
    }
  }
  return order;
}

namespace detail {

/// (1,3,5,...,4s-1,2,4,...,4s) style cycle from an explicit 1-based point list.
inline Permutation cycle_of(std::vector<long long> const &points, std::size_t degree)
{
  return perm_from_cycles({points}, degree);
}

} // namespace detail

inline GammaFamilyInstance build_gamma(std::size_t s, std::uint64_t enumeration_bound = kDefaultEnumerationBound)
{
  if (s < 2)
    throw DomainError("Γ_s needs s >= 2, got s = " + std::to_string(s));
  std::size_t const n = 4 * s;
  long long const ls = static_cast<long long>(s);
  // |G| = 2^{2s} * 2s must fit the enumeration bound
  mpz_class group_size = mpz_class(1) << static_cast<unsigned>(2 * s);
  group_size *= static_cast<unsigned long>(2 * s);
  if (group_size > mpz_class(std::to_string(enumeration_bound)))
    throw EnumerationBoundExceeded("Γ_" + std::to_string(s) + ": |G| = " + group_size.get_str() +
                                   " exceeds the enumeration bound");

  GammaFamilyInstance gi;
  gi.s = s;
  gi.a = perm_from_cycles({{2 * ls - 1, 2 * ls}, {4 * ls - 1, 4 * ls}}, n);
  std::vector<long long> b_cycle, odd, even;
  for (long long k = 1; k <= 4 * ls; k += 2)
    odd.push_back(k);
  for (long long k = 2; k <= 4 * ls; k += 2)
    even.push_back(k);
  b_cycle = odd;
  b_cycle.insert(b_cycle.end(), even.begin(), even.end());
  gi.b = detail::cycle_of(b_cycle, n);
  gi.h = perm_from_cycles({{1, 2}}, n);
  gi.g = perm_from_cycles({odd, even}, n);

  if (conjugate(gi.h, gi.g.pow(ls - 1)) * conjugate(gi.h, gi.g.inverse()) != gi.a)
    throw Error("Γ_s construction: a differs from h^{g^{s-1}} h^{g^{-1}}");
  if (gi.g * gi.h != gi.b)
    throw Error("Γ_s construction: b differs from g h");

  gi.R = PermutationGroup(n, {gi.a, gi.b});
  std::vector<Permutation> n_gens, h_gens;
  for (long long i = 0; i < ls; ++i) {
    n_gens.push_back(conjugate(gi.a, gi.b.pow(i)));
    h_gens.push_back(conjugate(gi.h, gi.g.pow(i)));
  }
  gi.N = PermutationGroup(n, n_gens);
  gi.G = PermutationGroup(n, {gi.h, gi.g});
  gi.H = PermutationGroup(n, h_gens);

  mpz_class const r_order = (mpz_class(1) << static_cast<unsigned>(s + 1)) * static_cast<unsigned long>(s);
  if (gi.R.order() != r_order)
    throw Error("Γ_s construction: |R_s| = " + gi.R.order().get_str() + ", expected " + r_order.get_str());
  if (gi.G.order() != group_size)
    throw Error("Γ_s construction: |G| = " + gi.G.order().get_str());
  if (gi.H.order() != (mpz_class(1) << static_cast<unsigned>(s)))
    throw Error("Γ_s construction: |H| = " + gi.H.order().get_str());

  gi.connection_set = {gi.a * gi.b, gi.b};
  gi.elements = breadth_first_elements(n, gi.connection_set, enumeration_bound);
  if (mpz_class(static_cast<unsigned long>(gi.elements.size())) != r_order)
    throw Error("Γ_s construction: {ab, b} does not generate R_s");
  gi.digraph = cayley_digraph(gi.elements, gi.connection_set);
  gi.coset_action = std::make_shared<CosetAction const>(gi.G, gi.H, enumeration_bound);
  return gi;
}

/**
 * Witness generators acting on the vertices of Γ_s: the induced coset
 * action of G moved along ψ: r -> Hr.
 */
inline std::vector<Permutation> gamma_witness(GammaFamilyInstance const &gi)
{
  std::vector<std::size_t> labels;
  labels.reserve(gi.elements.size());
  for (auto const &r : gi.elements)
    labels.push_back(gi.coset_action->label_of(r));
  return transport_action(*gi.coset_action, labels);
}

} // namespace symdg

#endif // SYMDG_GAMMA_HPP
