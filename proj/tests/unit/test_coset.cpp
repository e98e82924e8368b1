#include <gtest/gtest.h>

#include "symdg/coset.hpp"
#include "symdg/gamma.hpp"
#include "symdg/involutions.hpp"
#include "symdg/sigma.hpp"

using namespace symdg;

namespace {

SigmaInstance const &sigma()
{
  static SigmaInstance const si = build_sigma();
  return si;
}

} // namespace

TEST(Coset, GammaDegreeIsIndex)
{
  for (std::size_t s = 2; s <= 4; ++s) {
    auto const gi = build_gamma(s);
    auto const &action = *gi.coset_action;
    EXPECT_EQ(action.degree(), gi.elements.size());
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(action.degree())) * gi.H.order(), gi.G.order());
    for (auto const &g : action.induced_generators()) {
      std::vector<Point> images(g.images().begin(), g.images().end());
      std::sort(images.begin(), images.end());
      for (std::size_t i = 0; i < images.size(); ++i)
        EXPECT_EQ(images[i], i);
    }
  }
}

TEST(Coset, SigmaDegreeAndTransversal)
{
  auto const &si = sigma();
  EXPECT_EQ(si.coset_action->degree(), 441u);
  std::set<std::size_t> labels;
  for (auto const &r : si.elements)
    labels.insert(si.coset_action->label_of(r));
  EXPECT_EQ(labels.size(), 441u);
}

TEST(Coset, WholeGroupHasOneCoset)
{
  auto const gi = build_gamma(2);
  CosetAction const action(gi.G, gi.G);
  EXPECT_EQ(action.degree(), 1u);
  for (auto const &g : action.induced_generators())
    EXPECT_TRUE(g.is_identity());
}

TEST(Coset, FingerprintIsConstantOnCosets)
{
  auto const gi = build_gamma(3);
  auto const &action = *gi.coset_action;
  auto const h_elements = gi.H.enumerate();
  for (auto const &x : gi.elements) {
    auto const fp = action.fingerprint(x);
    for (auto const &h : h_elements)
      EXPECT_EQ(action.fingerprint(h * x), fp);
  }
  EXPECT_THROW(action.label_of(parse_cycles("(1,2,3)", 12)), NotInGroup);
}

TEST(Coset, DoubleCosetCounts)
{
  auto const gi = build_gamma(2);
  EXPECT_EQ(double_coset_cosets(*gi.coset_action, gi.g).size(), 2u);
  EXPECT_EQ(double_coset_cosets(*gi.coset_action, Permutation(8)).size(), 1u);
  auto const &si = sigma();
  EXPECT_EQ(double_coset_cosets(*si.coset_action, si.g1).size(), 128u);
  EXPECT_EQ(double_coset_cosets(*si.coset_action, si.g2).size(), 32u);
}

TEST(Coset, ConjugateIntersections)
{
  auto const &si = sigma();
  EXPECT_EQ(conjugate_intersection_order(si.H, si.g1), 2u);
  EXPECT_EQ(conjugate_intersection_order(si.H, si.g2), 8u);
  EXPECT_EQ(conjugate_intersection_order(si.H, Permutation(64)), 256u);
}

TEST(Coset, DoubleCosetSizeTimesIntersectionIsSubgroupOrder)
{
  auto const &si = sigma();
  for (auto const &g : {si.g1, si.g2, si.a, si.b * si.c, si.a * si.d.pow(2)}) {
    auto const cosets = double_coset_cosets(*si.coset_action, g).size();
    EXPECT_EQ(cosets * conjugate_intersection_order(si.H, g), 256u);
  }
  for (std::size_t s = 2; s <= 4; ++s) {
    auto const gi = build_gamma(s);
    auto const cosets = double_coset_cosets(*gi.coset_action, gi.g).size();
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(cosets * conjugate_intersection_order(gi.H, gi.g))),
              gi.H.order());
  }
}

TEST(Coset, Involutions)
{
  auto const &si = sigma();
  auto const st = involution_base_elements(si, InvolutionBase::ST);
  EXPECT_EQ(st.size(), 8u);
  auto const inv = involutions_in(st);
  auto const w = si.words();
  std::vector<Permutation> expected;
  for (char const *word : {"s^2", "t", "st", "s^2t", "s^3t"})
    expected.push_back(w.evaluate(word));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(inv, expected);

  std::vector<Permutation> trivial{Permutation(64)};
  EXPECT_TRUE(involutions_in(trivial).empty());

  std::vector<Permutation> conj;
  for (auto const &x : st)
    conj.push_back(conjugate(x, si.g2));
  std::vector<Permutation> listed;
  for (char const *word : {"a^2bs^3", "a^4s", "s^2t", "b^2t", "a^2bst"})
    listed.push_back(w.evaluate(word));
  std::sort(listed.begin(), listed.end());
  EXPECT_EQ(involutions_in(conj), listed);
}

TEST(Coset, RejectsForeignSubgroup)
{
  auto const gi = build_gamma(2);
  PermutationGroup const foreign(8, {parse_cycles("(1,2,3)", 8)});
  EXPECT_THROW(CosetAction(gi.G, foreign), NotSubgroup);
  EXPECT_THROW(CosetAction(gi.G, gi.H, 10), EnumerationBoundExceeded);
}
