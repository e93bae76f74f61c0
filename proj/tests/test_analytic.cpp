#include <gtest/gtest.h>

#include "mpfr_oracle.hpp"
#include "seqproof/analytic.hpp"

using namespace seqproof;

namespace {

BigRational q(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST(Bits, Examples) {
  EXPECT_EQ(bits_closed(1), BigInt(2));
  EXPECT_EQ(bits_closed(2), BigInt(3));
  EXPECT_EQ(bits_closed(5), BigInt(30));
  EXPECT_EQ(bits_oracle(1), BigInt(2));
  EXPECT_EQ(bits_oracle(3), BigInt(7));
  EXPECT_EQ(bits_oracle(5), BigInt(30));
  EXPECT_THROW(bits_closed(0), std::invalid_argument);
  EXPECT_THROW(bits_oracle(17), ResourceCap);
}

TEST(Bits, ClosedMatchesOracle) {
  for (unsigned n = 1; n <= 16; ++n) EXPECT_EQ(bits_closed(n), bits_oracle(n)) << n;
}

TEST(Bits, Log2Bounds) {
  RationalInterval b2 = log2_binomial_bounds(2, 32);
  EXPECT_TRUE(log2_binomial_target_bracket(2).contains(b2));
  EXPECT_GE(b2.lo(), q(4 - 1) - q(499, 1000));
  EXPECT_LE(b2.hi(), q(4 - 1) - q(1, 50));
  auto exact = [](unsigned n) {
    const unsigned long big = 1ul << n;
    return oracle::bracket(256, [big](mpfr_ptr o, mpfr_rnd_t r) {
      oracle::set_z(o, binomial(big, big / 2), r);
      mpfr_log2(o, o, r);
    });
  };
  EXPECT_TRUE(b2.contains(exact(2)));
  EXPECT_TRUE(log2_binomial_bounds(5, 32).contains(exact(5)));
  EXPECT_EQ(bits_from_log2_bounds(10), BigInt(1019));
  for (unsigned n = 2; n <= 14; ++n) {
    RationalInterval b = log2_binomial_bounds(n, 32);
    EXPECT_TRUE(log2_binomial_target_bracket(n).contains(b)) << n;
    EXPECT_TRUE(b.contains(exact(n))) << n;
    EXPECT_EQ(bits_from_log2_bounds(n), bits_closed(n)) << n;
  }
  EXPECT_THROW(log2_binomial_bounds(1, 32), std::invalid_argument);
}

TEST(CubeRootFloorSum, Examples) {
  EXPECT_EQ(cbrt_floorsum_closed(3), BigInt(7504));
  EXPECT_EQ(cbrt_floorsum_closed(6), BigInt(75000049));
  EXPECT_EQ(cbrt_floorsum_closed(9), BigInt("750000000499"));
  EXPECT_THROW(cbrt_floorsum_closed(4), NotDivisibleBy3);
  EXPECT_EQ(cbrt_floorsum_oracle(1), BigInt(1));
  EXPECT_EQ(cbrt_floorsum_oracle(8), BigInt(12));  // 12.7296...
  EXPECT_EQ(cbrt_floorsum_oracle(1000), BigInt(7504));
}

TEST(CubeRootFloorSum, OracleMatchesMpfr) {
  for (unsigned long m : {2ul, 27ul, 64ul, 100ul, 343ul, 999ul, 4096ul}) {
    RationalInterval ref = oracle::cbrt_sum(1, m);
    ASSERT_EQ(floor_of(ref.lo()), floor_of(ref.hi()));
    EXPECT_EQ(cbrt_floorsum_oracle(m), floor_of(ref.lo())) << m;
  }
}

TEST(Mad, Examples) {
  EXPECT_EQ(mad_oracle(1), q(0));
  EXPECT_EQ(mad_oracle(5), q(7));
  EXPECT_EQ(mad_oracle(5, true), q(14));
  EXPECT_EQ(mad_oracle(2), q(3, 2));
  MadResult r5 = mad_bracket_check(5);
  EXPECT_EQ(r5.mad, q(7));
  EXPECT_LT(r5.lower.hi(), q(5658, 1000));
  EXPECT_GT(r5.upper.lo(), q(7794, 1000));
  MadResult r3 = mad_bracket_check(3);
  EXPECT_EQ(r3.mad, q(3));
  EXPECT_THROW(mad_bracket_check(4), std::invalid_argument);
}

TEST(Mad, BracketsHold) {
  for (std::uint64_t n = 3; n <= 1501; n += 2) EXPECT_NO_THROW(mad_bracket_check(n)) << n;
}

TEST(Mad, RatioNearLimit) {
  RationalInterval gap = mad_limit_gap(1001);
  EXPECT_TRUE(gap.certainly_at_most(q(2, 1000)));
  EXPECT_TRUE(gap.certainly_at_least(q(-2, 1000)));
}
