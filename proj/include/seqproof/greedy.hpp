#pragma once

// Greedy sequences of distinct positive integers whose running average stays
// inside a target set: powers of two (closed form known) and Fibonacci
// numbers (closed form only conjectured for n >= 10).

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/core.hpp"
#include "seqproof/harness/report.hpp"

namespace seqproof {

struct GreedyState {
  std::set<BigInt> used;
  BigInt sum = 0;
  std::uint64_t n = 0;  // number of emitted terms
};

// Target averages 2^0, 2^1, ...
struct PowerOfTwoTargets {
  // Index of the first target t with n * t > sum. Every smaller target
  // yields a non-positive candidate.
  std::size_t first_useful(const BigInt& sum, std::uint64_t n) const {
    const long lead = static_cast<long>(bit_length(sum)) -
                      static_cast<long>(bit_length(BigInt(static_cast<unsigned long>(n)))) - 1;
    return static_cast<std::size_t>(std::max(0l, lead));
  }
  BigInt at(std::size_t i) const { return pow2(i); }
};

// Target averages 1, 2, 3, 5, 8, ... (Fibonacci values, duplicates removed).
class FibonacciTargets {
 public:
  std::size_t first_useful(const BigInt& sum, std::uint64_t n) {
    const BigInt threshold = sum / static_cast<unsigned long>(n);  // need target > sum / n
    while (values_.back() <= threshold) grow();
    auto it = std::upper_bound(values_.begin(), values_.end(), threshold);
    return static_cast<std::size_t>(it - values_.begin());
  }

  const BigInt& at(std::size_t i) {
    while (i >= values_.size()) grow();
    return values_[i];
  }

 private:
  void grow() { values_.push_back(BigInt(values_[values_.size() - 1] + values_[values_.size() - 2])); }

  std::vector<BigInt> values_{BigInt(1), BigInt(2)};
};

// a_1 = 1; a_n is the least positive integer not used so far such that
// (a_1 + ... + a_n) / n is a target. Candidates n * t - s_{n-1} grow with t,
// so scanning targets upward finds the minimum.
template <class Targets>
std::vector<BigInt> greedy_average_sequence(std::uint64_t n_max, Targets& targets) {
  if (n_max < 1) throw std::invalid_argument("greedy sequence: n_max must be >= 1");
  GreedyState state;
  std::vector<BigInt> terms;
  terms.reserve(n_max);
  terms.emplace_back(1);
  state.used.insert(BigInt(1));
  state.sum = 1;
  state.n = 1;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const BigInt nn(static_cast<unsigned long>(n));
    for (std::size_t i = targets.first_useful(state.sum, n);; ++i) {
      BigInt candidate = nn * targets.at(i) - state.sum;
      if (candidate >= 1 && state.used.find(candidate) == state.used.end()) {
        state.used.insert(candidate);
        state.sum += candidate;
        state.n = n;
        terms.push_back(std::move(candidate));
        break;
      }
    }
  }
  return terms;
}

inline std::vector<BigInt> greedy_pow2_oracle(std::uint64_t n_max) {
  PowerOfTwoTargets targets;
  return greedy_average_sequence(n_max, targets);
}

inline std::vector<BigInt> greedy_fib_oracle(std::uint64_t n_max) {
  FibonacciTargets targets;
  return greedy_average_sequence(n_max, targets);
}

// (n+1) 2^(n/2 - 1) for even n, 2^((n-1)/2) for odd n.
inline BigInt greedy_pow2_closed(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("greedy_pow2_closed: n must be >= 1");
  if (n % 2 == 0) return BigInt(static_cast<unsigned long>(n + 1) * pow2(n / 2 - 1));
  return pow2((n - 1) / 2);
}

// s_n = n 2^floor(n/2)
inline BigInt greedy_partial_sum_closed(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("greedy_partial_sum_closed: n must be >= 1");
  return BigInt(static_cast<unsigned long>(n) * pow2(n / 2));
}

// Fibonacci indexing used to read the conjectured closed form.
enum class FibConvention {
  Standard,  // F(0) = 0, F(1) = F(2) = 1
  Shifted,   // F(0) = F(1) = 1
};

inline std::string to_string(FibConvention c) { return c == FibConvention::Standard ? "F(1)=F(2)=1" : "F(0)=F(1)=1"; }

inline BigInt fibonacci(std::uint64_t i, FibConvention c = FibConvention::Standard) {
  BigInt out;
  mpz_fib_ui(out.get_mpz_t(), c == FibConvention::Standard ? i : i + 1);
  return out;
}

// n F(n/2 + 3) - (n-1) F(n/2 + 2) for even n, F((n+1)/2 + 2) for odd n.
inline BigInt greedy_fib_conjectured(std::uint64_t n, FibConvention c = FibConvention::Standard) {
  if (n % 2 == 0) {
    return BigInt(static_cast<unsigned long>(n) * fibonacci(n / 2 + 3, c) -
                  static_cast<unsigned long>(n - 1) * fibonacci(n / 2 + 2, c));
  }
  return fibonacci((n + 1) / 2 + 2, c);
}

// Compares the greedy Fibonacci-average terms with the conjectured closed
// form on [n_from, n_to]. A mismatch is reported, not thrown. If the standard
// indexing fails, the shifted one is tried; params["convention"] names the
// one that matched ("none" if neither did, with the standard mismatch kept).
inline VerificationReport greedy_fib_conjecture_check(std::uint64_t n_from, std::uint64_t n_to) {
  if (n_from < 10) throw std::invalid_argument("greedy_fib_conjecture_check: n_from must be >= 10");
  if (n_from > n_to) throw std::invalid_argument("greedy_fib_conjecture_check: empty range");
  const std::vector<BigInt> terms = greedy_fib_oracle(n_to);
  auto run = [&](FibConvention c) {
    SweepRecorder rec("greedy-fib", static_cast<std::int64_t>(n_from), static_cast<std::int64_t>(n_to));
    rec.param("convention", to_string(c));
    for (std::uint64_t n = n_from; n <= n_to; ++n)
      if (!rec.check(static_cast<std::int64_t>(n), greedy_fib_conjectured(n, c), terms[n - 1])) break;
    return rec.finish();
  };
  VerificationReport standard = run(FibConvention::Standard);
  if (standard.status == Status::Pass) return standard;
  VerificationReport shifted = run(FibConvention::Shifted);
  if (shifted.status == Status::Pass) return shifted;
  standard.params["convention"] = "none";
  return standard;
}

}  // namespace seqproof
