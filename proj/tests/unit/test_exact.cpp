#include <random>

#include <gtest/gtest.h>

#include "symdg/matrix.hpp"
#include "symdg/matrix_io.hpp"
#include "symdg/polynomial.hpp"
#include "symdg/rational.hpp"

using namespace symdg;

namespace {

Rational random_rational(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

RationalMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c)
{
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = random_rational(rng);
  return m;
}

RationalMatrix random_invertible(std::mt19937_64 &rng, std::size_t n)
{
  for (;;) {
    auto m = random_matrix(rng, n, n);
    if (rank(m) == n)
      return m;
  }
}

RationalPolynomial poly(std::vector<long> c)
{
  std::vector<Rational> q;
  for (long x : c)
    q.emplace_back(x);
  return RationalPolynomial(q);
}

} // namespace

TEST(Rational, ParsesAndPrints)
{
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" +4/2 "), Rational(2));
  EXPECT_EQ(to_string(parse_rational("-3/9")), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Matrix, KroneckerOfIdentities)
{
  EXPECT_EQ(kronecker(RationalMatrix::identity(2), RationalMatrix::identity(3)), RationalMatrix::identity(6));
}

TEST(Matrix, KroneckerLayout)
{
  RationalMatrix const a{{1, 2}, {3, 4}};
  RationalMatrix const b{{0, 5}, {6, 7}};
  RationalMatrix const expected{{0, 5, 0, 10}, {6, 7, 12, 14}, {0, 15, 0, 20}, {18, 21, 24, 28}};
  EXPECT_EQ(kronecker(a, b), expected);
}

TEST(MatrixProperty, KroneckerIdentities)
{
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto const a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
    auto const c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 3);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
    auto const p = random_invertible(rng, 2), q = random_invertible(rng, 3);
    EXPECT_EQ(inverse(kronecker(p, q)), kronecker(inverse(p), inverse(q)));
    auto const a2 = random_matrix(rng, 2, 3);
    EXPECT_EQ(kronecker(a + a2, b), kronecker(a, b) + kronecker(a2, b));
    EXPECT_EQ(kronecker(a, b + c), kronecker(a, b) + kronecker(a, c));
  }
}

TEST(Matrix, RankInverseTrace)
{
  RationalMatrix const singular{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(singular), 2u);
  EXPECT_THROW(inverse(singular), DomainError);
  RationalMatrix const m{{2, 1}, {1, 1}};
  EXPECT_EQ(inverse(m), (RationalMatrix{{1, -1}, {-1, 2}}));
  EXPECT_EQ(trace(m), Rational(3));
  EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
  EXPECT_EQ(direct_sum(std::vector<RationalMatrix>{m, RationalMatrix::identity(1)}),
            (RationalMatrix{{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(m * RationalMatrix(3, 3), DimensionMismatch);
}

TEST(MatrixProperty, InverseRoundTrip)
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto const m = random_invertible(rng, 4);
    EXPECT_EQ(m * inverse(m), RationalMatrix::identity(4));
    EXPECT_EQ(rank(m), 4u);
  }
}

TEST(Polynomial, Arithmetic)
{
  auto const p = poly({-1, 0, 1}); // x^2 - 1
  auto const q = poly({1, 1});     // x + 1
  EXPECT_EQ(p / q, poly({-1, 1}));
  EXPECT_TRUE((p % q).is_zero());
  EXPECT_EQ(gcd(p, poly({1, 2, 1})), q);
  EXPECT_EQ(p.derivative(), poly({0, 2}));
  EXPECT_EQ(p.to_string("x"), "x^2 - 1");
  EXPECT_EQ(lcm(q, poly({-1, 1})), p);
  auto [g, s, t] = xgcd(poly({2, 0, 1}), poly({0, 1}));
  EXPECT_EQ(s * poly({2, 0, 1}) + t * poly({0, 1}), g);
  EXPECT_EQ(g.degree(), 0);
}

TEST(Polynomial, Squarefree)
{
  EXPECT_FALSE(is_squarefree(poly({0, 0, 1})));
  EXPECT_TRUE(is_squarefree(poly({-1, 0, 1})));
  EXPECT_TRUE(is_squarefree(poly({-1, 0, 0, 0, 0, 0, 1})));
  EXPECT_FALSE(is_squarefree(poly({0, 0, -16, 0, 0, 0, 1})));
  EXPECT_THROW(is_squarefree(RationalPolynomial()), DomainError);
}

TEST(MatrixIo, RoundTrip)
{
  RationalMatrix const m{{Rational(1, 2), 0}, {-3, Rational(7, 5)}};
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_THROW(parse_matrix("2 2\n1 2 3"), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n1 2 3 4 5"), ParseError);
  EXPECT_THROW(parse_matrix("x"), ParseError);
  EXPECT_THROW(parse_matrix("0 2"), ParseError);
}
