#include <random>

#include <gtest/gtest.h>

#include "symdg/permutation.hpp"

using namespace symdg;

namespace {

Permutation random_permutation(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

} // namespace

TEST(Permutation, ParsesOneBasedCycles)
{
  auto const p = parse_cycles("(3,4)(7,8)", 8);
  EXPECT_EQ(p[2], 3u);
  EXPECT_EQ(p[3], 2u);
  EXPECT_EQ(p[6], 7u);
  EXPECT_EQ(p[7], 6u);
  for (Point x : {0u, 1u, 4u, 5u})
    EXPECT_EQ(p[x], x);
  EXPECT_EQ(p.to_cycle_string(), "(3,4)(7,8)");
}

TEST(Permutation, EmptyCycleListIsIdentity)
{
  EXPECT_TRUE(parse_cycles("", 5).is_identity());
  EXPECT_TRUE(parse_cycles("()", 5).is_identity());
  EXPECT_TRUE(perm_from_cycles({}, 5).is_identity());
  EXPECT_EQ(parse_cycles("", 5).degree(), 5u);
}

TEST(Permutation, EightCycleHasOrderEight)
{
  auto const b = parse_cycles("(1,3,5,7,2,4,6,8)", 8);
  EXPECT_EQ(b.order(), 8u);
  // Repeated composition, independent of pow().
  Permutation x(8);
  for (int k = 1; k <= 8; ++k) {
    x = x * b;
    EXPECT_EQ(x.is_identity(), k == 8) << k;
  }
  EXPECT_EQ(b.pow(8), Permutation(8));
  EXPECT_EQ(b.pow(3), b * b * b);
  EXPECT_EQ(b.pow(-1), b.inverse());
  EXPECT_EQ(b.pow(-3), (b * b * b).inverse());
}

TEST(Permutation, ComposesLeftToRight)
{
  auto const p = parse_cycles("(1,2)", 3);
  auto const q = parse_cycles("(2,3)", 3);
  // point 1 -> 2 under p, then 2 -> 3 under q
  EXPECT_EQ((p * q)[0], 2u);
  EXPECT_EQ(conjugate(p, q), q.inverse() * p * q);
  EXPECT_EQ(conjugate(p, q), parse_cycles("(1,3)", 3));
}

TEST(Permutation, RejectsMalformedInput)
{
  EXPECT_THROW(parse_cycles("(1,9)", 8), InvalidCycles);
  EXPECT_THROW(parse_cycles("(1,2)(2,3)", 8), InvalidCycles);
  EXPECT_THROW(parse_cycles("(0,1)", 8), InvalidCycles);
  EXPECT_THROW(parse_cycles("1,2", 8), InvalidCycles);
  EXPECT_THROW(parse_cycles("(1,2", 8), InvalidCycles);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InvalidCycles);
  EXPECT_THROW(parse_cycles("(1,2)", 2) * parse_cycles("(1,2)", 3), DegreeMismatch);
}

TEST(PermutationProperty, InverseAndAssociativity)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 1 + trial % 20;
    auto const p = random_permutation(rng, n), q = random_permutation(rng, n), r = random_permutation(rng, n);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_TRUE((p.inverse() * p).is_identity());
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p * q).inverse(), q.inverse() * p.inverse());
    EXPECT_TRUE(p.pow(static_cast<long long>(p.order())).is_identity());
    EXPECT_EQ(parse_cycles(p.to_cycle_string(), n), p);
  }
}

TEST(PermutationProperty, OrderIsLcmOfCycleLengths)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto const p = random_permutation(rng, 12);
    std::uint64_t l = 1;
    for (auto const &c : p.cycles())
      l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
    EXPECT_EQ(p.order(), l);
    for (std::uint64_t k = 1; k < l; ++k)
      EXPECT_FALSE(p.pow(static_cast<long long>(k)).is_identity());
  }
}
