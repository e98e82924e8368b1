#include <random>

#include <gtest/gtest.h>

#include "symdg/cyclotomic.hpp"
#include "symdg/minpoly.hpp"

using namespace symdg;

namespace {

using Z = CyclotomicElement;

Z random_element(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::array<Rational, Z::kDegree> c;
  for (auto &x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Z(c);
}

} // namespace

TEST(Cyclotomic, RootOfUnityRelations)
{
  EXPECT_EQ(Z::zeta_power(1) * Z::zeta_power(6), Z(1));
  EXPECT_EQ(Z::zeta_power(7), Z(1));
  EXPECT_EQ(Z::zeta_power(-1), Z::zeta_power(6));
  Z sum(0);
  for (int k = 0; k < 7; ++k)
    sum += Z::zeta_power(k);
  EXPECT_TRUE(sum.is_zero());
}

TEST(Cyclotomic, InverseOfX1)
{
  auto const x1 = parse_cyclotomic("z^4+z^3+z+1");
  EXPECT_EQ(x1 * x1.inverse(), Z(1));
  // Oracle: the norm is the product of all Galois conjugates, so x1 * (product of the others) = N(x1).
  Z others(1);
  for (long long k = 2; k <= 6; ++k)
    others *= x1.galois(k);
  EXPECT_TRUE((x1 * others).is_rational());
  EXPECT_EQ(x1.inverse(), others * Z(1 / galois_norm(x1)));
  EXPECT_THROW(Z(0).inverse(), DomainError);
}

TEST(CyclotomicProperty, FieldAxioms)
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto const x = random_element(rng), y = random_element(rng), w = random_element(rng);
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + (-x), Z(0));
    if (!x.is_zero())
      EXPECT_EQ(x * x.inverse(), Z(1));
    EXPECT_EQ((x * y).galois(3), x.galois(3) * y.galois(3));
  }
}

TEST(Cyclotomic, ParserAndPrinter)
{
  std::map<std::string, Z> env{{"x1", parse_cyclotomic("z+1")}};
  EXPECT_EQ(parse_cyclotomic("2(x1 - 1)", env), Z::zeta_power(1) * Z(2));
  EXPECT_EQ(parse_cyclotomic("-(z^3)+z^3"), Z(0));
  EXPECT_EQ(parse_cyclotomic("z^6"), Z::zeta_power(6));
  EXPECT_EQ(parse_cyclotomic("3/4"), Z(Rational(3, 4)));
  auto const x = parse_cyclotomic("z^5+2z-1/2");
  EXPECT_EQ(parse_cyclotomic(x.to_string()), x);
  EXPECT_THROW(parse_cyclotomic("w"), ParseError);
  EXPECT_THROW(parse_cyclotomic("z^"), ParseError);
  EXPECT_THROW(parse_cyclotomic("(z"), ParseError);
}

TEST(Cyclotomic, MatricesAndMinimalPolynomials)
{
  CycloMatrix m(2, 2);
  m(0, 1) = Z::zeta_power(1);
  auto const p = minimal_polynomial_krylov(m);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(is_diagonalizable_over(m));
  CycloMatrix d(2, 2);
  d(0, 0) = Z::zeta_power(1);
  d(1, 1) = Z::zeta_power(2);
  EXPECT_TRUE(is_diagonalizable_over(d));
  RationalMatrix const r{{1, 2}, {3, 4}};
  EXPECT_EQ(to_cyclo(r)(1, 0), Z(3));
}
