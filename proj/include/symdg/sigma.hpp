#ifndef SYMDG_SIGMA_HPP
#define SYMDG_SIGMA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symdg/coset.hpp"
#include "symdg/digraph.hpp"
#include "symdg/errors.hpp"
#include "symdg/group.hpp"
#include "symdg/permutation.hpp"
#include "symdg/projective.hpp"
#include "symdg/words.hpp"

namespace symdg {

/// One product block X Y^γ of the connection set.
struct ConnectionBlock {
  std::string name;
  std::vector<Permutation> elements;
};

/**
 * Σ = Cay(R, S) with R = <a,b> x <c,d> acting on PG(1,7)^2, together with
 * G = <a,b,c,d,t,v,α,β> and H = <s,t,u,v,α,β>. The automorphism γ of R
 * swapping a with c and b with d is conjugation by β.
 */
struct SigmaInstance {
  Permutation a, b, c, d, s, t, u, v, alpha, beta, g1, g2;
  PermutationGroup R, G, H;
  std::vector<Permutation> S1, S1_inv, S2, S3, S3_inv, S4;
  std::array<ConnectionBlock, 6> blocks;
  std::vector<Permutation> S;
  /// Vertex elements a^i b^j c^k d^l in lexicographic (i, j, k, l) order.
  std::vector<Permutation> elements;
  Digraph digraph;
  std::shared_ptr<CosetAction const> coset_action;

  WordEvaluator words() const
  {
    return WordEvaluator(64, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"s", s}, {"t", t},
                              {"u", u}, {"v", v}, {"alpha", alpha}, {"beta", beta}});
  }

  /// Index of a^i b^j c^k d^l among the vertex elements.
  static std::size_t normal_form_index(long long i, long long j, long long k, long long l)
  {
    auto m = [](long long x, long long q) { return static_cast<std::size_t>(((x % q) + q) % q); };
    return ((m(i, 7) * 3 + m(j, 3)) * 7 + m(k, 7)) * 3 + m(l, 3);
  }
};

/// γ applied to a subset: conjugation by β.
inline std::vector<Permutation> apply_gamma(std::vector<Permutation> const &set, Permutation const &beta)
{
  std::vector<Permutation> out;
  for (auto const &x : set)
    out.push_back(conjugate(x, beta));
  return out;
}

inline std::vector<Permutation> inverses(std::vector<Permutation> const &set)
{
  std::vector<Permutation> out;
  for (auto const &x : set)
    out.push_back(x.inverse());
  return out;
}

inline std::vector<Permutation> set_union(std::vector<Permutation> lhs, std::vector<Permutation> const &rhs)
{
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

/// {x y : x in X, y in Y} in row-major order (duplicates kept).
inline std::vector<Permutation> set_product(std::vector<Permutation> const &x, std::vector<Permutation> const &y)
{
  std::vector<Permutation> out;
  for (auto const &p : x) {
    for (auto const &q : y)
      out.push_back(p * q);
  }
  return out;
}

inline SigmaInstance build_sigma(std::uint64_t enumeration_bound = kDefaultEnumerationBound)
{
  SigmaInstance si;
  Permutation const id8(8);
  auto first = [&](Matrix2 const &m) { return product_action(linear_fractional(m), id8); };
  si.a = first({1, 0, 1, 1});
  si.b = first({2, 0, 0, 1});
  si.s = first({2, 1, 1, 1});
  si.t = first({0, 1, -1, 0});
  Permutation const alpha8 = linear_fractional({-1, 1, 0, 1});
  si.alpha = product_action(alpha8, alpha8);
  si.beta = coordinate_swap();
  si.c = conjugate(si.a, si.beta);
  si.d = conjugate(si.b, si.beta);
  si.u = conjugate(si.s, si.beta);
  si.v = conjugate(si.t, si.beta);
  si.g1 = si.a.pow(4) * si.c.pow(5);
  si.g2 = si.a.pow(2) * si.c.pow(3) * si.d.pow(2);

  si.R = PermutationGroup(64, {si.a, si.b, si.c, si.d});
  si.G = PermutationGroup(64, {si.a, si.b, si.c, si.d, si.t, si.v, si.alpha, si.beta});
  si.H = PermutationGroup(64, {si.s, si.t, si.u, si.v, si.alpha, si.beta});

  auto const w = si.words();
  auto eval_all = [&](std::vector<std::string> const &list) {
    std::vector<Permutation> out;
    for (auto const &word : list)
      out.push_back(w.evaluate(word));
    return out;
  };
  si.S1 = eval_all({"a", "a^5", "a^6b", "a^6b^2"});
  si.S2 = eval_all({"ab", "(ab)^{-1}"});
  si.S3 = eval_all({"a^3", "b", "ab^2", "a^4b^2"});
  si.S4 = eval_all({"a^2b", "(a^2b)^{-1}"});
  si.S1_inv = inverses(si.S1);
  si.S3_inv = inverses(si.S3);

  auto const S1pm = set_union(si.S1, si.S1_inv);
  auto const S3pm = set_union(si.S3, si.S3_inv);
  si.blocks = {
    ConnectionBlock{"(S1 ∪ S1^-1)(S3 ∪ S3^-1)^γ", set_product(S1pm, apply_gamma(S3pm, si.beta))},
    ConnectionBlock{"(S3 ∪ S3^-1)(S1 ∪ S1^-1)^γ", set_product(S3pm, apply_gamma(S1pm, si.beta))},
    ConnectionBlock{"S1 S2^γ", set_product(si.S1, apply_gamma(si.S2, si.beta))},
    ConnectionBlock{"S2 S1^γ", set_product(si.S2, apply_gamma(si.S1, si.beta))},
    ConnectionBlock{"S1^-1 S4^γ", set_product(si.S1_inv, apply_gamma(si.S4, si.beta))},
    ConnectionBlock{"S4 (S1^-1)^γ", set_product(si.S4, apply_gamma(si.S1_inv, si.beta))},
  };

  std::set<Permutation> seen;
  for (auto const &block : si.blocks) {
    std::set<Permutation> const inside(block.elements.begin(), block.elements.end());
    if (inside.size() != block.elements.size())
      throw Error("Σ construction: block " + block.name + " has repeated products");
    for (auto const &x : block.elements) {
      if (!seen.insert(x).second)
        throw Error("Σ construction: block " + block.name + " meets an earlier block at " +
                    x.to_cycle_string());
      si.S.push_back(x);
    }
  }

  for (long long i = 0; i < 7; ++i) {
    for (long long j = 0; j < 3; ++j) {
      for (long long k = 0; k < 7; ++k) {
        for (long long l = 0; l < 3; ++l)
          si.elements.push_back(si.a.pow(i) * si.b.pow(j) * si.c.pow(k) * si.d.pow(l));
      }
    }
  }
  si.digraph = cayley_digraph(si.elements, si.S);
  si.coset_action = std::make_shared<CosetAction const>(si.G, si.H, enumeration_bound);
  return si;
}

} // namespace symdg

#endif // SYMDG_SIGMA_HPP
