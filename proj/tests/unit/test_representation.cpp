#include <random>

#include <gtest/gtest.h>

#include "symdg/gamma_rep.hpp"
#include "symdg/minpoly.hpp"
#include "symdg/sigma.hpp"
#include "symdg/sigma_rep.hpp"

using namespace symdg;

namespace {

using Z = CyclotomicElement;

SigmaInstance const &sigma()
{
  static SigmaInstance const si = build_sigma();
  return si;
}

} // namespace

TEST(SigmaRep, PhiEntries)
{
  auto const p = phi_matrices();
  EXPECT_EQ(p.S2(0, 1), Z::zeta_power(5));
  EXPECT_EQ(p.S4(2, 1), Z::zeta_power(1));
  EXPECT_EQ(phi_matrix(0, 0), CycloMatrix::identity(3));
  EXPECT_TRUE(verify_phi_matrices(p).empty());
}

TEST(SigmaRep, PhiIsMultiplicativeOnAllPairs)
{
  for (int k1 = 0; k1 < 7; ++k1) {
    for (int l1 = 0; l1 < 3; ++l1) {
      for (int k2 = 0; k2 < 7; ++k2) {
        for (int l2 = 0; l2 < 3; ++l2) {
          auto const xy = frobenius_product({k1, l1}, {k2, l2});
          EXPECT_EQ(phi_matrix(xy.first, xy.second), phi_matrix(k1, l1) * phi_matrix(k2, l2));
        }
      }
    }
  }
}

TEST(SigmaRep, FrobeniusProductMatchesPermutations)
{
  // Oracle: multiply the actual permutations a^k b^l on 64 points.
  auto const &si = sigma();
  auto elem = [&](FrobeniusWord w) { return si.a.pow(w.first) * si.b.pow(w.second); };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> k(0, 6), l(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    FrobeniusWord const x{k(rng), l(rng)}, y{k(rng), l(rng)};
    EXPECT_EQ(elem(frobenius_product(x, y)), elem(x) * elem(y));
  }
}

TEST(SigmaRep, RhoOfConnectionSet)
{
  auto const rho = rho_S(phi_matrices());
  EXPECT_EQ(rho, rho_S_elementwise(sigma()));
  EXPECT_FALSE(is_diagonalizable_over(rho));
}

TEST(SigmaRep, BlockIdentity)
{
  auto const r = verify_sigma_blocks(rho_S(phi_matrices()));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(r.B, CycloMatrix::identity(2) * Z(8));
  RationalMatrix const c = to_rational(r.C);
  EXPECT_EQ(c, (RationalMatrix{{Rational(-16), Rational(24)}, {Rational(0), Rational(-16)}}));
  EXPECT_EQ(minimal_polynomial(c), RationalPolynomial(std::vector<Rational>{256, 32, 1}));
  EXPECT_FALSE(is_diagonalizable(c));
}

TEST(SigmaRep, BlockIdentityDetectsCorruptFixture)
{
  auto f = change_of_basis_fixture();
  f.C[0][1] = 23;
  auto const r = verify_sigma_blocks(rho_S(phi_matrices()), f);
  EXPECT_FALSE(r.identity_holds);
  EXPECT_FALSE(r.mismatches.empty());
}

TEST(GammaRep, NormalFormRoundTrip)
{
  for (std::size_t s : {2u, 3u, 4u}) {
    auto const gi = build_gamma(s);
    for (auto const &x : gi.elements)
      EXPECT_EQ(gamma_from_normal_form(gi, gamma_normal_form(gi, x)), x);
  }
}

TEST(GammaRep, ClosedFormIsNilpotent)
{
  for (std::size_t s = 2; s <= 7; ++s) {
    auto const gi = build_gamma(s);
    auto const ev = gamma_rep(gi, 4000, 3);
    EXPECT_TRUE(ev.sum_matches) << "s = " << s;
    EXPECT_TRUE(ev.sum_nilpotent) << "s = " << s;
    EXPECT_FALSE(is_diagonalizable(ev.sum)) << "s = " << s;
  }
}

TEST(GammaRep, MultiplicativeAwayFromTwoModFour)
{
  for (std::size_t s : {3u, 4u, 5u, 7u, 8u}) {
    auto const gi = build_gamma(s);
    auto const ev = gamma_rep(gi, 20000, 11);
    EXPECT_TRUE(ev.multiplicative()) << "s = " << s << ": " << ev.first_failure;
    EXPECT_TRUE(ev.identity_maps_to_identity) << "s = " << s;
  }
}

// For s = 2 mod 4 the even-s closed form is only a projective representation:
// ρ(1) = -I and ρ(xy) agrees with ρ(x)ρ(y) up to sign.
TEST(GammaRep, ProjectiveWhenTwoModFour)
{
  for (std::size_t s : {2u, 6u}) {
    auto const gi = build_gamma(s);
    auto const ev = gamma_rep(gi, 20000, 11);
    EXPECT_FALSE(ev.multiplicative()) << "s = " << s;
    EXPECT_EQ(gamma_rho(gi, Permutation(4 * s)), RationalMatrix::identity(2) * Rational(-1));
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<std::size_t> pick(0, gi.elements.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      auto const &x = gi.elements[pick(rng)];
      auto const &y = gi.elements[pick(rng)];
      auto const lhs = gamma_rho(gi, x * y);
      auto const rhs = gamma_rho(gi, x) * gamma_rho(gi, y);
      EXPECT_TRUE(lhs == rhs || lhs == rhs * Rational(-1));
    }
  }
}
