#include <gtest/gtest.h>

#include "seqproof/greedy.hpp"

using namespace seqproof;

TEST(GreedyPow2, Examples) {
  EXPECT_EQ(greedy_pow2_oracle(1), (std::vector<BigInt>{1}));
  EXPECT_EQ(greedy_pow2_oracle(3), (std::vector<BigInt>{1, 3, 2}));
  EXPECT_EQ(greedy_pow2_oracle(4), (std::vector<BigInt>{1, 3, 2, 10}));
  EXPECT_EQ(greedy_pow2_closed(1), BigInt(1));
  EXPECT_EQ(greedy_pow2_closed(3), BigInt(2));
  EXPECT_EQ(greedy_pow2_closed(4), BigInt(10));
  EXPECT_EQ(greedy_partial_sum_closed(1), BigInt(1));
  EXPECT_EQ(greedy_partial_sum_closed(4), BigInt(16));
  EXPECT_EQ(greedy_partial_sum_closed(5), BigInt(20));
  EXPECT_THROW(greedy_pow2_oracle(0), std::invalid_argument);
}

TEST(GreedyPow2, ClosedFormAndAverages) {
  const std::uint64_t n_max = 2000;
  auto terms = greedy_pow2_oracle(n_max);
  BigInt sum = 0;
  std::set<BigInt> seen;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BigInt& a = terms[n - 1];
    EXPECT_TRUE(seen.insert(a).second);
    sum += a;
    EXPECT_EQ(a, greedy_pow2_closed(n));
    EXPECT_EQ(sum, greedy_partial_sum_closed(n));
    ASSERT_TRUE(mpz_divisible_ui_p(sum.get_mpz_t(), n));
    EXPECT_TRUE(is_power_of_two(BigInt(sum / static_cast<unsigned long>(n))));
  }
}

TEST(GreedyFib, Examples) {
  EXPECT_EQ(greedy_fib_oracle(1), (std::vector<BigInt>{1}));
  EXPECT_EQ(greedy_fib_oracle(2), (std::vector<BigInt>{1, 3}));
  auto terms = greedy_fib_oracle(12);
  BigInt sum = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sum += terms[i];
    BigInt avg = sum / static_cast<unsigned long>(i + 1);
    EXPECT_EQ(BigInt(avg * static_cast<unsigned long>(i + 1)), sum);
    bool is_fib = false;
    for (unsigned j = 1; j < 80 && !is_fib; ++j) is_fib = fibonacci(j) == avg;
    EXPECT_TRUE(is_fib) << i;
  }
  EXPECT_EQ(fibonacci(1), BigInt(1));
  EXPECT_EQ(fibonacci(2), BigInt(1));
  EXPECT_EQ(fibonacci(0, FibConvention::Shifted), BigInt(1));
}

TEST(GreedyFib, ConjectureCheck) {
  VerificationReport r = greedy_fib_conjecture_check(10, 10);
  EXPECT_NE(r.status, Status::Partial);
  r.validate();
  VerificationReport wide = greedy_fib_conjecture_check(10, 300);
  EXPECT_EQ(wide.status, Status::Pass);
  EXPECT_EQ(wide.params.at("convention"), to_string(FibConvention::Standard));
  EXPECT_THROW(greedy_fib_conjecture_check(10, 9), std::invalid_argument);
  EXPECT_THROW(greedy_fib_conjecture_check(5, 20), std::invalid_argument);
}
