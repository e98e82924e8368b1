#ifndef SYMDG_INVOLUTIONS_HPP
#define SYMDG_INVOLUTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "symdg/coset.hpp"
#include "symdg/group.hpp"
#include "symdg/permutation.hpp"
#include "symdg/sigma.hpp"

namespace symdg {

enum class InvolutionBase { ST, UV, NAlpha, NBeta, NAlphaBeta };

inline char const *to_string(InvolutionBase base)
{
  switch (base) {
  case InvolutionBase::ST: return "<s,t>";
  case InvolutionBase::UV: return "<u,v>";
  case InvolutionBase::NAlpha: return "N alpha";
  case InvolutionBase::NBeta: return "N beta";
  case InvolutionBase::NAlphaBeta: return "N alpha beta";
  }
  return "?";
}

/// Word list for the involutions of base^{g_j}; conjugator 0 means unconjugated.
struct InvolutionSetFixture {
  InvolutionBase base;
  int conjugator; // 0, 1 or 2
  std::vector<std::string> words;
};

inline std::vector<InvolutionSetFixture> const &conjugated_involution_fixture()
{
  using B = InvolutionBase;
  static std::vector<InvolutionSetFixture> const sets = {
    {B::ST, 1, {"a^3bs^3t", "a^4b^2s^2", "b^2t", "a^3b^2s", "abs^2t"}},
    {B::UV, 1, {"cdu", "cdu^2v", "cd^2u^3v", "uv", "c^3u^3"}},
    {B::NAlpha, 1, {"a^3bc^4d^2s^3tu\\alpha", "a^3bc^6ds^3tu^2\\alpha", "a^3bcs^3tv\\alpha",
                    "a^3bc^4s^3tu^3\\alpha", "a^6bc^4d^2stu\\alpha", "c^4d^2u\\alpha",
                    "a^6c^4d^2s^3u\\alpha", "a^6bc^6dstu^2\\alpha", "c^6du^2\\alpha",
                    "a^6c^6ds^3u^2\\alpha", "a^6bcstv\\alpha", "cv\\alpha", "a^6cs^3v\\alpha",
                    "a^6bc^4stu^3\\alpha", "c^4u^3\\alpha", "a^6c^4s^3u^3\\alpha"}},
    {B::NBeta, 1, {"a^2bc^3d^2s^2tu^2\\beta", "a^2b^2c^6d^2s^3tv\\beta", "ac^2d^2stu\\beta",
                   "a^4ds^3u^2v\\beta", "ac^6\\beta", "a^4c^5dtuv\\beta", "a^2bc^2dsu^3v\\beta",
                   "a^2b^2c^5s^2u^3\\beta"}},
    {B::NAlphaBeta, 1, {"a^5b^2c^2dsu^3v\\alpha\\beta", "bc^5ds^2uv\\alpha\\beta", "a^2c^6t\\alpha\\beta",
                        "a^5c^5s^3u^3\\alpha\\beta", "a^2c^2d^2u\\alpha\\beta",
                        "a^5c^6d^2s^3tv\\alpha\\beta", "bds^2tu^2v\\alpha\\beta",
                        "a^5b^2c^3d^2stu^2\\alpha\\beta"}},
    {B::ST, 2, {"a^2bs^3", "a^4s", "s^2t", "b^2t", "a^2bst"}},
    {B::UV, 2, {"v", "u^2v", "c^3d^2uv", "u^2", "c^3d^2u"}},
    {B::NAlpha, 2, {"a^6c^6d^2stuv\\alpha", "a^6cstv\\alpha", "a^6c^6d^2st\\alpha", "a^6cstu^3\\alpha",
                    "a^4bc^6d^2uv\\alpha", "a^4b^2c^6d^2suv\\alpha", "a^3c^6d^2s^3uv\\alpha",
                    "a^4bcv\\alpha", "a^4b^2csv\\alpha", "a^3cs^3v\\alpha", "a^4bc^6d^2\\alpha",
                    "a^4b^2c^6d^2s\\alpha", "a^3c^6d^2s^3\\alpha", "a^4bcu^3\\alpha",
                    "a^4b^2csu^3\\alpha", "a^3cs^3u^3\\alpha"}},
    {B::NBeta, 2, {"ab^2c^5ds^2tu\\beta", "bc^3dstu^2v\\beta", "ab^2c^3s^2v\\beta", "bc^4d^2suv\\beta",
                   "ab^2c^3d\\beta", "bc^5ds^3u^3v\\beta", "ab^2c^4d^2tu^3\\beta", "bc^3s^3tu^2\\beta"}},
    {B::NAlphaBeta, 2, {"a^6bc^6dstuv\\alpha\\beta", "a^3b^2c^5d^2t\\alpha\\beta", "a^6bc^5u\\alpha\\beta",
                        "a^3b^2cds^3u^3\\alpha\\beta", "a^6bc^6ds^2u^2\\alpha\\beta",
                        "a^3b^2cdsu^2v\\alpha\\beta", "a^3b^2c^5d^2s^2tu^3v\\alpha\\beta",
                        "a^6bc^5s^3tv\\alpha\\beta"}},
  };
  return sets;
}

/// Unconjugated involution sets, expanded from their closed forms.
inline std::vector<InvolutionSetFixture> unconjugated_involution_fixture()
{
  using B = InvolutionBase;
  std::vector<InvolutionSetFixture> sets;
  sets.push_back({B::ST, 0, {"s^2", "t", "st", "s^2t", "s^3t"}});
  sets.push_back({B::UV, 0, {"u^2", "v", "uv", "u^2v", "u^3v"}});
  InvolutionSetFixture n_alpha{B::NAlpha, 0, {}};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k)
      n_alpha.words.push_back("s^" + std::to_string(j) + "u^" + std::to_string(k) + "\\alpha");
  }
  sets.push_back(n_alpha);
  InvolutionSetFixture n_beta{B::NBeta, 0, {}};
  for (int j = 0; j < 4; ++j) {
    n_beta.words.push_back("s^" + std::to_string(j) + "tu^" + std::to_string(j) + "v\\beta");
    n_beta.words.push_back("s^" + std::to_string(j) + "u^" + std::to_string((4 - j) % 4) + "\\beta");
  }
  sets.push_back(n_beta);
  InvolutionSetFixture n_ab{B::NAlphaBeta, 0, {}};
  for (int j = 0; j < 4; ++j)
    n_ab.words.push_back("s^" + std::to_string(j) + "u^" + std::to_string(j) + "\\alpha\\beta");
  for (std::string const x : {"stv\\alpha\\beta", "s^2tu^3v\\alpha\\beta"}) {
    n_ab.words.push_back(x);
    n_ab.words.push_back("\\beta^{-1}(" + x + ")\\beta");
  }
  sets.push_back(n_ab);
  return sets;
}

/// Elements of the base set (before conjugation).
inline std::vector<Permutation> involution_base_elements(SigmaInstance const &si, InvolutionBase base)
{
  auto elements_of = [](std::vector<Permutation> gens) {
    return PermutationGroup::generated_by(std::move(gens)).enumerate();
  };
  auto coset = [](std::vector<Permutation> const &n, Permutation const &x) {
    std::vector<Permutation> out;
    for (auto const &y : n)
      out.push_back(y * x);
    return out;
  };
  switch (base) {
  case InvolutionBase::ST: return elements_of({si.s, si.t});
  case InvolutionBase::UV: return elements_of({si.u, si.v});
  default: break;
  }
  auto const n = elements_of({si.s, si.t, si.u, si.v});
  switch (base) {
  case InvolutionBase::NAlpha: return coset(n, si.alpha);
  case InvolutionBase::NBeta: return coset(n, si.beta);
  default: return coset(n, si.alpha * si.beta);
  }
}

struct InvolutionSetResult {
  InvolutionSetFixture fixture;
  std::size_t computed_size = 0;
  std::size_t listed_size = 0;
  bool match = false;
  std::vector<std::string> unexpected_words; // listed but not an involution of the set
  std::size_t missing = 0;                   // computed but not listed
};

inline std::string describe(InvolutionSetFixture const &f)
{
  std::string name = std::string("I2(") + to_string(f.base) + ")";
  if (f.conjugator)
    name = std::string("I2((") + to_string(f.base) + ")^g" + std::to_string(f.conjugator) + ")";
  return name;
}

inline InvolutionSetResult check_involution_set(SigmaInstance const &si, InvolutionSetFixture const &f)
{
  auto base = involution_base_elements(si, f.base);
  if (f.conjugator) {
    Permutation const g = f.conjugator == 1 ? si.g1 : si.g2;
    for (auto &x : base)
      x = conjugate(x, g);
  }
  auto const computed = involutions_in(base);
  auto const w = si.words();
  std::vector<Permutation> listed;
  InvolutionSetResult result{f, computed.size(), 0, false, {}, 0};
  for (auto const &word : f.words) {
    Permutation p = w.evaluate(word);
    if (!std::binary_search(computed.begin(), computed.end(), p))
      result.unexpected_words.push_back(word);
    listed.push_back(std::move(p));
  }
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  result.listed_size = listed.size();
  for (auto const &p : computed) {
    if (!std::binary_search(listed.begin(), listed.end(), p))
      ++result.missing;
  }
  result.match = result.unexpected_words.empty() && result.missing == 0 &&
                 listed.size() == f.words.size();
  return result;
}

inline std::vector<InvolutionSetResult> check_conjugated_involution_sets(SigmaInstance const &si)
{
  std::vector<InvolutionSetResult> results;
  for (auto const &f : conjugated_involution_fixture())
    results.push_back(check_involution_set(si, f));
  return results;
}

/// H ∩ I2(H^g) as a sorted set.
inline std::vector<Permutation> subgroup_meets_conjugate_involutions(SigmaInstance const &si, Permutation const &g)
{
  std::vector<Permutation> result;
  for (auto const &x : si.H.enumerate()) {
    Permutation const y = conjugate(x, g);
    if (!y.is_identity() && (y * y).is_identity() && si.H.contains(y))
      result.push_back(y);
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<std::string> const &meet_g1_words()
{
  static std::vector<std::string> const words{"uv"};
  return words;
}

inline std::vector<std::string> const &meet_g2_words()
{
  static std::vector<std::string> const words{"s^2t", "v", "u^2v", "u^2", "s^2tv", "s^2tu^2v", "s^2tu^2"};
  return words;
}

inline bool same_set(SigmaInstance const &si, std::vector<Permutation> const &computed,
                     std::vector<std::string> const &words)
{
  auto const w = si.words();
  std::vector<Permutation> listed;
  for (auto const &word : words)
    listed.push_back(w.evaluate(word));
  std::sort(listed.begin(), listed.end());
  return listed == computed;
}

} // namespace symdg

#endif // SYMDG_INVOLUTIONS_HPP
