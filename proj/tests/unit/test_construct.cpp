#include <gtest/gtest.h>

#include "symdg/gamma.hpp"
#include "symdg/involutions.hpp"
#include "symdg/projective.hpp"
#include "symdg/sigma.hpp"
#include "symdg/tables.hpp"

using namespace symdg;

namespace {

SigmaInstance const &sigma()
{
  static SigmaInstance const si = build_sigma();
  return si;
}

} // namespace

TEST(Projective, LinearFractionalMaps)
{
  EXPECT_TRUE(linear_fractional({1, 0, 0, 1}).is_identity());
  auto const t = linear_fractional({0, 1, -1, 0});
  EXPECT_EQ(t[0], kInfinity);
  EXPECT_EQ(t[kInfinity], 0u);
  auto const alpha = linear_fractional({-1, 1, 0, 1}); // x -> -x / (x + 1)
  EXPECT_EQ(alpha[0], 0u);
  EXPECT_EQ(alpha[1], 3u); // -1/2 = 3 in F_7
  EXPECT_EQ(alpha[6], kInfinity);
  EXPECT_THROW(linear_fractional({1, 2, 2, 4}), DomainError);
  EXPECT_EQ(pair_point(kInfinity, 0), 56u);
}

TEST(Construct, GammaOrders)
{
  EXPECT_EQ(build_gamma(2).digraph.order(), 16u);
  EXPECT_EQ(build_gamma(3).digraph.order(), 48u);
  EXPECT_EQ(build_gamma(4).digraph.order(), 128u);
  EXPECT_THROW(build_gamma(1), DomainError);
  EXPECT_THROW(build_gamma(12, 1000), EnumerationBoundExceeded);
}

TEST(Construct, GammaGenerators)
{
  auto const gi = build_gamma(2);
  EXPECT_EQ(gi.a, parse_cycles("(3,4)(7,8)", 8));
  EXPECT_EQ(gi.b, parse_cycles("(1,3,5,7,2,4,6,8)", 8));
  EXPECT_EQ(gi.connection_set, (std::vector<Permutation>{gi.a * gi.b, gi.b}));
  EXPECT_TRUE(gi.R.is_subgroup_of(gi.G));
  EXPECT_TRUE(gi.elements.front().is_identity());
}

TEST(Construct, SigmaConnectionSet)
{
  auto const &si = sigma();
  EXPECT_EQ(si.S.size(), 160u);
  EXPECT_EQ(si.R.order(), 441);
  std::size_t total = 0;
  std::set<Permutation> seen;
  for (auto const &b : si.blocks) {
    total += b.elements.size();
    seen.insert(b.elements.begin(), b.elements.end());
  }
  EXPECT_EQ(total, 160u);
  EXPECT_EQ(seen.size(), 160u); // pairwise disjoint
  for (auto const &x : si.S) {
    EXPECT_FALSE(x.is_identity());
    EXPECT_TRUE(si.R.contains(x));
  }
}

TEST(Construct, SigmaGammaIsBetaConjugation)
{
  auto const &si = sigma();
  EXPECT_EQ(conjugate(si.a, si.beta), si.c);
  EXPECT_EQ(conjugate(si.b, si.beta), si.d);
  EXPECT_EQ(conjugate(si.c, si.beta), si.a);
  EXPECT_EQ(conjugate(si.d, si.beta), si.b);
  EXPECT_EQ(conjugate(si.a, si.b), si.a.pow(2));
  EXPECT_EQ(si.a * si.c, si.c * si.a);
}

TEST(Construct, SigmaVertexOrder)
{
  auto const &si = sigma();
  ASSERT_EQ(si.elements.size(), 441u);
  for (long long i : {0, 3, 6}) {
    for (long long j : {0, 2}) {
      for (long long k : {1, 5}) {
        for (long long l : {0, 1}) {
          auto const x = si.a.pow(i) * si.b.pow(j) * si.c.pow(k) * si.d.pow(l);
          EXPECT_EQ(si.elements[SigmaInstance::normal_form_index(i, j, k, l)], x);
        }
      }
    }
  }
}

TEST(Construct, Words)
{
  auto const &si = sigma();
  auto const w = si.words();
  EXPECT_TRUE(w.evaluate("").is_identity());
  EXPECT_EQ(w.evaluate("a^-1"), si.a.inverse());
  EXPECT_EQ(w.evaluate("(ab)^{-1}"), (si.a * si.b).inverse());
  EXPECT_EQ(w.evaluate("s\\alpha"), si.s * si.alpha);
  EXPECT_EQ(w.evaluate("\\beta^{-1}(st)\\beta"), conjugate(si.s * si.t, si.beta));
  EXPECT_THROW(w.evaluate("q"), ParseError);
  EXPECT_THROW(w.evaluate("(ab"), ParseError);
}

TEST(Construct, TablesHold)
{
  auto const &si = sigma();
  auto const &rows = tables_fixture();
  EXPECT_EQ(rows.size(), 48u);
  EXPECT_TRUE(check_tables(si, rows).empty());
  auto const w = si.words();
  EXPECT_EQ(w.evaluate("a^2(c^2d)^{-1}"), si.g2);
  EXPECT_EQ(w.evaluate("ac^3"), w.evaluate("su\\beta") * si.g1 * w.evaluate("sv\\beta"));
}

TEST(Construct, FabricatedRowIsLocated)
{
  auto const &si = sigma();
  TableRow row = tables_fixture().front();
  row.h = "su";
  auto const failure = check_table_row(si, row, 0);
  ASSERT_TRUE(failure.has_value());
  EXPECT_NE(failure->message.find("first difference at point"), std::string::npos);
  EXPECT_NE(failure->lhs, failure->rhs);
}

TEST(Construct, InvolutionSets)
{
  auto const &si = sigma();
  auto const results = check_conjugated_involution_sets(si);
  EXPECT_EQ(results.size(), 10u);
  for (auto const &r : results) {
    EXPECT_TRUE(r.match) << describe(r.fixture);
    EXPECT_EQ(r.computed_size, r.fixture.words.size());
  }
  auto const n_alpha = std::find_if(results.begin(), results.end(), [](auto const &r) {
    return r.fixture.base == InvolutionBase::NAlpha && r.fixture.conjugator == 1;
  });
  ASSERT_NE(n_alpha, results.end());
  EXPECT_EQ(n_alpha->computed_size, 16u);
  for (auto const &f : unconjugated_involution_fixture())
    EXPECT_TRUE(check_involution_set(si, f).match) << describe(f);
}

TEST(Construct, InvolutionSetDetectsWrongWord)
{
  auto const &si = sigma();
  auto f = conjugated_involution_fixture().front();
  f.words.back() = "s";
  auto const r = check_involution_set(si, f);
  EXPECT_FALSE(r.match);
  EXPECT_EQ(r.unexpected_words, std::vector<std::string>{"s"});
  EXPECT_EQ(r.missing, 1u);
}

TEST(Construct, InvolutionMeets)
{
  auto const &si = sigma();
  auto const m1 = subgroup_meets_conjugate_involutions(si, si.g1);
  EXPECT_TRUE(same_set(si, m1, meet_g1_words()));
  EXPECT_EQ(m1.size(), 1u);
  EXPECT_TRUE(same_set(si, subgroup_meets_conjugate_involutions(si, si.g2), meet_g2_words()));
}
