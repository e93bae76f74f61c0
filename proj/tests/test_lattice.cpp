#include <gtest/gtest.h>

#include "seqproof/lattice.hpp"

using namespace seqproof;

TEST(Lattice, LayerGf) {
  EXPECT_EQ(layer_gf(0, 3), IntPolynomial{1});
  EXPECT_EQ(layer_gf(2, 1), (IntPolynomial{1, 2, 2}));
  EXPECT_EQ(layer_gf(1, 3), (IntPolynomial{1, 6, 12, 8}));
}

TEST(Lattice, OracleExamples) {
  EXPECT_EQ(layer_count_oracle({0, 0, 3}), BigInt(1));
  EXPECT_EQ(layer_count_oracle({3, 2, 3}), BigInt(32));
  EXPECT_EQ(layer_count_oracle({3, 2, 3}), layer_gf(2, 3).coefficient(3));
  EXPECT_EQ(layer_count_oracle({1, 5, 4}), BigInt(8));
  EXPECT_THROW(layer_count_oracle({1, 50, 5}, 1000), ResourceCap);
}

TEST(Lattice, ClosedExamples) {
  EXPECT_EQ(ball_count_closed3(0, 0), BigInt(1));
  EXPECT_EQ(ball_count_closed3(3, 1), BigInt(27));
  EXPECT_EQ(ball_count_closed3(2, 3), BigInt(25));
  EXPECT_EQ(ball_count_from_gf({0, 5, 2}), BigInt(1));
  EXPECT_EQ(ball_count_from_gf({2, 1, 3}), BigInt(19));
  EXPECT_EQ(ball_count_from_gf({100, 1, 3}), BigInt(27));
}

TEST(Lattice, GfMatchesEnumeration) {
  for (std::uint64_t m = 1; m <= 3; ++m)
    for (std::uint64_t k = 0; k <= 8; ++k) {
      IntPolynomial g = layer_gf(k, m);
      for (std::uint64_t n = 0; n <= m * k + 1; ++n)
        EXPECT_EQ(g.coefficient(n), layer_count_oracle({n, k, m})) << n << " " << k << " " << m;
    }
  for (std::uint64_t k = 0; k <= 4; ++k)
    for (std::uint64_t n = 0; n <= 4 * k; ++n)
      EXPECT_EQ(layer_gf(k, 4).coefficient(n), layer_count_oracle({n, k, 4}));
}

TEST(Lattice, PiecewiseMatchesGf) {
  for (std::uint64_t k = 0; k <= 30; ++k) {
    const BigInt box = ipow(BigInt(static_cast<unsigned long>(2 * k + 1)), 3);
    for (std::uint64_t n = 0; n <= 3 * k + 5; ++n) {
      const BigInt closed = ball_count_closed3(n, k);
      EXPECT_EQ(closed, ball_count_from_gf({n, k, 3})) << n << " " << k;
      if (n >= 3 * k) EXPECT_EQ(closed, box);
    }
  }
}
