#include <gtest/gtest.h>

#include "symdg/jordan.hpp"
#include "symdg/matrix.hpp"

using namespace symdg;

TEST(Jordan, TensorSpecExamples)
{
  auto const scalar = jordan_tensor_spec(false, false, 1, 1);
  EXPECT_EQ(scalar.sizes(), std::vector<std::size_t>{1});
  EXPECT_TRUE(scalar.diagonalizable());

  auto const nonzero = jordan_tensor_spec(false, false, 2, 2);
  EXPECT_EQ(nonzero.sizes(), (std::vector<std::size_t>{3, 1}));
  for (auto const &b : nonzero.blocks)
    EXPECT_EQ(b.eigenvalue, EigenTag::NonzeroProduct);

  auto const half = jordan_tensor_spec(true, false, 2, 3);
  EXPECT_EQ(half.sizes(), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_THROW(jordan_tensor_spec(true, true, 0, 2), DomainError);
}

TEST(Jordan, BlockSizesFromRanks)
{
  EXPECT_EQ(jordan_block_sizes(jordan_block(Rational(0), 3), Rational(0)), std::vector<std::size_t>{3});
  auto const x = kronecker(jordan_block(Rational(1), 2), jordan_block(Rational(1), 2));
  EXPECT_EQ(jordan_structure_rational(x, Rational(1)), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(jordan_tensor_spec(false, false, 2, 2).sizes(), jordan_structure_rational(x, Rational(1)));
  RationalMatrix d(3, 3);
  d(0, 0) = d(1, 1) = 2;
  d(2, 2) = 5;
  EXPECT_EQ(jordan_structure_rational(d, Rational(2)), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(jordan_structure_rational(d, Rational(3)).empty());
}

TEST(JordanProperty, TensorRuleExhaustive)
{
  for (long alpha = 0; alpha <= 2; ++alpha) {
    for (long beta = 0; beta <= 2; ++beta) {
      for (std::size_t s = 1; s <= 4; ++s) {
        for (std::size_t t = 1; t <= 4; ++t) {
          auto const x = kronecker(jordan_block(Rational(alpha), s), jordan_block(Rational(beta), t));
          auto const spec = jordan_tensor_spec(alpha == 0, beta == 0, s, t);
          EXPECT_EQ(spec.total_size(), s * t);
          EXPECT_EQ(jordan_structure_rational(x, Rational(alpha * beta)), spec.sizes())
            << "alpha=" << alpha << " beta=" << beta << " s=" << s << " t=" << t;
        }
      }
    }
  }
}

TEST(JordanProperty, NonDiagonalizableFactorSurvivesTensor)
{
  for (std::size_t s = 2; s <= 4; ++s) {
    for (std::size_t t = 1; t <= 4; ++t) {
      for (bool az : {false, true}) {
        for (bool bz : {false, true}) {
          if (bz && t == 1)
            continue; // the second factor is the zero matrix
          EXPECT_FALSE(jordan_tensor_spec(az, bz, s, t).diagonalizable());
        }
      }
    }
  }
}
