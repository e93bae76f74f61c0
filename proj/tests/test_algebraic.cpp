#include <gtest/gtest.h>

#include "seqproof/algebraic.hpp"

using namespace seqproof;

TEST(CyclicConv, Examples) {
  EXPECT_EQ(cyclic_conv_value(1, 1), BigInt(1));
  EXPECT_EQ(cyclic_conv_value(2, 2), BigInt(5));
  EXPECT_EQ(cyclic_conv_value(3, 1), BigInt(13));
  EXPECT_THROW(cyclic_conv_value(3, 4), KOutOfRange);
  EXPECT_THROW(cyclic_conv_value(3, 0), KOutOfRange);
  EXPECT_EQ(cyclic_conv_max_closed(1), BigInt(1));
  EXPECT_EQ(cyclic_conv_max_closed(2), BigInt(5));
  EXPECT_EQ(cyclic_conv_max_closed(3), BigInt(13));
}

TEST(CyclicConv, MaxAndQuadratic) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    ConvProfile p = cyclic_conv_profile(n);
    ASSERT_EQ(p.values.size(), n);
    EXPECT_EQ(p.max(), cyclic_conv_max_closed(n)) << n;
    for (std::uint64_t k = 1; k < n; ++k) EXPECT_EQ(cyclic_conv_quadratic(n, k), BigRational(p.values[k - 1]));
    EXPECT_EQ(cyclic_conv_quadratic(n, 0), BigRational(p.values[n - 1]));
  }
}

TEST(Complex, Examples) {
  EXPECT_EQ(complex_seq_oracle(0), (GaussianInt{0, 0}));
  EXPECT_EQ(complex_seq_oracle(2), (GaussianInt{2, 4}));
  EXPECT_EQ(complex_seq_oracle(4), (GaussianInt{-4, 14}));
  EXPECT_EQ(complex_re_closed(0), BigInt(0));
  EXPECT_EQ(complex_re_closed(3), BigInt(1));
  EXPECT_EQ(complex_re_closed(4), BigInt(-4));
}

TEST(Complex, ClosedMatchesIteration) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    GaussianInt b = complex_seq_oracle(n);
    EXPECT_EQ(complex_re_closed(n), b.re) << n;
    EXPECT_EQ(complex_im_closed(n), b.im) << n;
  }
}

TEST(DoubleSums, Examples) {
  EXPECT_EQ(sum_a_direct(1), BigInt(0));
  EXPECT_EQ(sum_a_direct(2), BigInt(0));
  EXPECT_EQ(sum_a_direct(3), BigInt(12));
  EXPECT_EQ(sum_a_direct(4), BigInt(23));
  EXPECT_EQ(sum_b_direct(2), BigInt(0));
  EXPECT_EQ(sum_b_direct(3), BigInt(1));
  EXPECT_EQ(sum_b_direct(6), BigInt(18));
  EXPECT_EQ(sum_a_closed(4), BigInt(23));
  EXPECT_EQ(sum_b_closed(3), BigInt(1));
  auto a = sum_gf_coeffs(DoubleSum::A, 3);
  EXPECT_EQ(a, (std::vector<BigInt>{0, 0, 0, 12}));
  EXPECT_EQ(sum_gf_coeffs(DoubleSum::B, 3)[3], BigInt(1));
}

TEST(DoubleSums, AllPathsAgree) {
  auto a = sum_gf_coeffs(DoubleSum::A, 300);
  auto b = sum_gf_coeffs(DoubleSum::B, 300);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(a[n], sum_a_direct(n)) << n;
    EXPECT_EQ(b[n], sum_b_direct(n)) << n;
    EXPECT_EQ(sum_a_closed(n), a[n]) << n;
    EXPECT_EQ(sum_b_closed(n), b[n]) << n;
  }
}
