#pragma once

// Registered verification families: each runs an oracle-vs-closed-form sweep
// and returns a VerificationReport. Also maps OEIS ids to the computed
// sequence they are compared against.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqproof/algebraic.hpp"
#include "seqproof/analytic.hpp"
#include "seqproof/greedy.hpp"
#include "seqproof/harness/report.hpp"
#include "seqproof/lattice.hpp"
#include "seqproof/words.hpp"

namespace seqproof {

struct VerifyParams {
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n_max;
  std::optional<std::string> pattern;
  unsigned precision_bits = 32;
  std::uint64_t enum_cap = 10'000'000;
};

namespace detail {

inline std::int64_t as_index(std::uint64_t n) { return static_cast<std::int64_t>(n); }

// Indicator comparison for checks that are predicates rather than values.
inline bool check_holds(SweepRecorder& rec, std::uint64_t n, bool holds) {
  return rec.check(as_index(n), BigInt(1), BigInt(holds ? 1 : 0));
}

inline VerificationReport verify_bits(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(14);
  if (n_max < 1 || n_max > 30) throw InvalidParams("bits: --n-max must be in [1, 30]");
  SweepRecorder rec("bits", 1, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  for (unsigned n = 1; n <= n_max && !rec.failed(); ++n) {
    const BigInt closed = bits_closed(n);
    if (n <= 16) {
      rec.check(n, closed, bits_oracle(n));
    } else {
      rec.mark_partial();
    }
    if (n >= 2) {
      RationalInterval bounds = log2_binomial_bounds(n, p.precision_bits);
      check_holds(rec, n, log2_binomial_target_bracket(n).contains(bounds));
      rec.check(n, closed, bits_from_log2_bounds(n, p.precision_bits));
    }
  }
  return rec.finish();
}

inline VerificationReport verify_cbrt_floorsum(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(3);
  if (n_max < 3 || n_max > 18) throw InvalidParams("cbrt-floorsum: --n-max must be in [3, 18]");
  SweepRecorder rec("cbrt-floorsum", 3, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  for (unsigned n = 3; n <= n_max && !rec.failed(); n += 3) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < n; ++i) m *= 10;
    if (m > p.enum_cap) {
      rec.mark_partial();
      continue;
    }
    rec.check(n, cbrt_floorsum_closed(n), cbrt_floorsum_oracle(m, p.precision_bits));
  }
  return rec.finish();
}

inline VerificationReport verify_mad(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(1001);
  if (n_max < 3) throw InvalidParams("mad: --n-max must be >= 3");
  SweepRecorder rec("mad", 3, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  for (std::uint64_t n = 3; n <= n_max && !rec.failed(); n += 2) {
    bool inside = true;
    try {
      mad_bracket_check(n, p.precision_bits);
    } catch (const BracketViolation&) {
      inside = false;
    }
    check_holds(rec, n, inside);
    if (n >= 1001 && n % 1000 == 1) {
      RationalInterval gap = mad_limit_gap(n);
      const BigRational envelope(10, static_cast<unsigned long>(n));
      check_holds(rec, n, gap.certainly_at_most(envelope) && gap.certainly_at_least(BigRational(-envelope)));
    }
  }
  return rec.finish();
}

inline VerificationReport verify_lattice(const VerifyParams& p) {
  const std::uint64_t k_max = p.k.value_or(8);
  const std::uint64_t m = p.m.value_or(3);
  if (m < 1 || m > 12) throw InvalidParams("lattice: --m must be in [1, 12]");
  if (k_max > 200) throw InvalidParams("lattice: --k must be <= 200");
  SweepRecorder rec("lattice", 0, as_index(k_max));
  rec.param("k_max", std::to_string(k_max));
  rec.param("m", std::to_string(m));
  for (std::uint64_t k = 0; k <= k_max && !rec.failed(); ++k) {
    const IntPolynomial layers = layer_gf(k, m);
    for (std::uint64_t n = 0; n <= m * k && !rec.failed(); ++n) {
      try {
        if (!rec.check(as_index(n), layer_count_oracle({n, k, m}, p.enum_cap), layers.coefficient(n)))
          rec.param("at_k", std::to_string(k));
      } catch (const ResourceCap&) {
        rec.mark_partial();
        break;
      }
    }
    if (m == 3) {
      for (std::uint64_t n = 0; n <= 3 * k + 5 && !rec.failed(); ++n) {
        if (!rec.check(as_index(n), ball_count_from_gf({n, k, 3}), ball_count_closed3(n, k)))
          rec.param("at_k", std::to_string(k));
      }
    }
  }
  return rec.finish();
}

inline VerificationReport verify_cyclic_conv(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(400);
  if (n_max < 1 || n_max > 5000) throw InvalidParams("cyclic-conv: --n-max must be in [1, 5000]");
  SweepRecorder rec("cyclic-conv", 1, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  for (std::uint64_t n = 1; n <= n_max && !rec.failed(); ++n) {
    ConvProfile profile = cyclic_conv_profile(n);
    rec.check(as_index(n), cyclic_conv_max_closed(n), profile.max());
    for (std::uint64_t k = 1; k <= n && !rec.failed(); ++k)
      check_holds(rec, n, cyclic_conv_quadratic(n, k % n) == BigRational(profile.values[k - 1]));
  }
  return rec.finish();
}

inline VerificationReport verify_complex_re(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(200);
  SweepRecorder rec("complex-re", 0, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  GaussianInt b{0, 0};
  for (std::uint64_t n = 0; n <= n_max && !rec.failed(); ++n) {
    if (n > 0) b = (GaussianInt{BigInt(static_cast<unsigned long>(n)), 0} + b) * GaussianInt{1, 1};
    rec.check(as_index(n), complex_re_closed(n), b.re);
    rec.check(as_index(n), complex_im_closed(n), b.im);
  }
  return rec.finish();
}

inline VerificationReport verify_sum_gf(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(300);
  const std::string which = p.pattern.value_or("both");
  if (which != "a" && which != "b" && which != "both") throw InvalidParams("sum-gf: --pattern must be a, b or both");
  if (n_max < 1) throw InvalidParams("sum-gf: --n-max must be >= 1");
  SweepRecorder rec("sum-gf", 1, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  rec.param("which", which);
  if (which != "b") {
    const auto gf = sum_gf_coeffs(DoubleSum::A, n_max);
    for (std::uint64_t n = 1; n <= n_max && !rec.failed(); ++n) {
      const BigInt direct = sum_a_direct(n);
      rec.check(as_index(n), gf[n], direct);
      rec.check(as_index(n), sum_a_closed(n), direct);
    }
  }
  if (which != "a") {
    const auto gf = sum_gf_coeffs(DoubleSum::B, n_max);
    for (std::uint64_t n = 1; n <= n_max && !rec.failed(); ++n) {
      const BigInt direct = sum_b_direct(n);
      rec.check(as_index(n), gf[n], direct);
      rec.check(as_index(n), sum_b_closed(n), direct);
    }
  }
  return rec.finish();
}

inline VerificationReport verify_words(const VerifyParams& p) {
  const std::uint64_t k = p.k.value_or(2);
  const std::uint64_t n_max = p.n_max.value_or(12);
  if (k < 2 || k > 64) throw InvalidParams("words: --k must be in [2, 64]");
  if (n_max > 2000) throw InvalidParams("words: --n-max must be <= 2000");
  std::vector<PatternKind> patterns;
  if (p.pattern) {
    try {
      patterns.push_back(parse_pattern(*p.pattern));
    } catch (const std::invalid_argument& e) {
      throw InvalidParams(std::string("words: ") + e.what());
    }
  } else {
    patterns = {PatternKind::ZP1Z, PatternKind::ZZP1, PatternKind::RepeatedLetter};
  }
  SweepRecorder rec("words", 0, as_index(n_max));
  rec.param("k", std::to_string(k));
  rec.param("n_max", std::to_string(n_max));
  rec.param("pattern", p.pattern.value_or("all"));
  const auto kk = static_cast<unsigned>(k);
  for (PatternKind pattern : patterns) {
    const std::vector<BigInt> closed = words_closed_prefix(kk, n_max, pattern);
    for (std::uint64_t n = 0; n <= n_max && !rec.failed(); ++n) {
      const BigInt dp = words_dp(kk, static_cast<unsigned>(n), pattern);
      rec.check(as_index(n), closed[n], dp);
      try {
        rec.check(as_index(n), dp, words_oracle(kk, static_cast<unsigned>(n), pattern, p.enum_cap));
      } catch (const ResourceCap&) {
        rec.mark_partial();
      }
    }
    if (rec.failed()) {
      rec.param("at_pattern", to_string(pattern));
      break;
    }
  }
  return rec.finish();
}

inline VerificationReport verify_greedy_pow2(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(10'000);
  if (n_max < 1) throw InvalidParams("greedy-pow2: --n-max must be >= 1");
  SweepRecorder rec("greedy-pow2", 1, as_index(n_max));
  rec.param("n_max", std::to_string(n_max));
  const std::vector<BigInt> terms = greedy_pow2_oracle(n_max);
  BigInt sum = 0;
  for (std::uint64_t n = 1; n <= n_max && !rec.failed(); ++n) {
    sum += terms[n - 1];
    rec.check(as_index(n), greedy_pow2_closed(n), terms[n - 1]);
    rec.check(as_index(n), greedy_partial_sum_closed(n), sum);
    const bool divisible = mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n));
    check_holds(rec, n, divisible && is_power_of_two(BigInt(sum / static_cast<unsigned long>(n))));
  }
  return rec.finish();
}

inline VerificationReport verify_greedy_fib(const VerifyParams& p) {
  const std::uint64_t n_max = p.n_max.value_or(1000);
  if (n_max < 10) throw InvalidParams("greedy-fib: --n-max must be >= 10");
  VerificationReport report = greedy_fib_conjecture_check(10, n_max);
  report.params["n_max"] = std::to_string(n_max);
  return report;
}

}  // namespace detail

using FamilyRunner = std::function<VerificationReport(const VerifyParams&)>;

inline const std::map<std::string, FamilyRunner>& family_registry() {
  static const std::map<std::string, FamilyRunner> registry = {
      {"bits", detail::verify_bits},
      {"cbrt-floorsum", detail::verify_cbrt_floorsum},
      {"mad", detail::verify_mad},
      {"lattice", detail::verify_lattice},
      {"cyclic-conv", detail::verify_cyclic_conv},
      {"complex-re", detail::verify_complex_re},
      {"sum-gf", detail::verify_sum_gf},
      {"words", detail::verify_words},
      {"greedy-pow2", detail::verify_greedy_pow2},
      {"greedy-fib", detail::verify_greedy_fib},
  };
  return registry;
}

inline VerificationReport verify_family(const std::string& family, const VerifyParams& params) {
  const auto& registry = family_registry();
  auto it = registry.find(family);
  if (it == registry.end()) throw UnknownFamily("'" + family + "'");
  return it->second(params);
}

// Sequence computed by the library for comparison with an OEIS b-file.
struct OeisBinding {
  std::string id;
  std::string family;
  std::string description;
  std::int64_t offset;  // index of the first computed term
  std::function<std::vector<BigInt>()> compute;
};

inline const std::vector<OeisBinding>& oeis_bindings() {
  auto range = [](std::uint64_t lo, std::uint64_t hi, auto f) {
    std::vector<BigInt> out;
    for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(f(n));
    return out;
  };
  auto words_prefix = [](unsigned k, PatternKind pattern) {
    return [k, pattern] { return words_closed_prefix(k, 40, pattern); };
  };
  static const std::vector<OeisBinding> bindings = {
      {"A112884", "bits", "bit length of C(2^n, 2^(n-1))", 1,
       [range] { return range(1, 14, [](std::uint64_t n) { return bits_closed(static_cast<unsigned>(n)); }); }},
      {"A136269", "cbrt-floorsum", "floor of sum of cube roots up to 10^n", 0,
       [] {
         std::vector<BigInt> out;
         std::uint64_t m = 1;
         for (int n = 0; n <= 6; ++n, m *= 10) out.push_back(cbrt_floorsum_oracle(m));
         return out;
       }},
      {"A345318", "mad", "median absolute deviation of {2k^2 : k <= n}", 1,
       [range] { return range(1, 200, [](std::uint64_t n) { return mad_oracle(n, true).get_num(); }); }},
      {"A371835", "lattice", "a_{n,k}^(3) read by rows 0 <= k <= n", 0,
       [] {
         std::vector<BigInt> out;
         for (std::uint64_t n = 0; n <= 12; ++n)
           for (std::uint64_t k = 0; k <= n; ++k) out.push_back(ball_count_closed3(n, k));
         return out;
       }},
      {"A294172", "cyclic-conv", "max cyclic self-convolution of 1..n", 1,
       [range] { return range(1, 100, cyclic_conv_max_closed); }},
      {"A309878", "complex-re", "Re(b_n), b_n = (n + b_{n-1})(1 + i)", 0,
       [range] { return range(0, 100, complex_re_closed); }},
      {"A294139", "sum-gf", "a_n double sum (A(x))", 1,
       [] {
         auto c = sum_gf_coeffs(DoubleSum::A, 200);
         return std::vector<BigInt>(c.begin() + 1, c.end());
       }},
      {"A307684", "sum-gf", "b_n double sum (B(x))", 1,
       [] {
         auto c = sum_gf_coeffs(DoubleSum::B, 200);
         return std::vector<BigInt>(c.begin() + 1, c.end());
       }},
      {"A005251", "words", "words over [2] avoiding z,z+1,z", 0, words_prefix(2, PatternKind::ZP1Z)},
      {"A098182", "words", "words over [3] avoiding z,z+1,z", 0, words_prefix(3, PatternKind::ZP1Z)},
      {"A206790", "words", "words over [4] avoiding z,z+1,z", 0, words_prefix(4, PatternKind::ZP1Z)},
      {"A000071", "words", "words over [2] avoiding z,z,z+1", 0, words_prefix(2, PatternKind::ZZP1)},
      {"A206727", "words", "words over [3] avoiding z,z,z+1", 0, words_prefix(3, PatternKind::ZZP1)},
      {"A206570", "words", "words over [4] avoiding z,z,z+1", 0, words_prefix(4, PatternKind::ZZP1)},
      {"A269467", "words", "words over [3] with no repeat equal to the previous repeat", 0,
       words_prefix(3, PatternKind::RepeatedLetter)},
      {"A128135", "greedy-pow2", "even-indexed greedy power-of-2-average terms", 1,
       [range] { return range(1, 60, [](std::uint64_t j) { return greedy_pow2_closed(2 * j); }); }},
      {"A132344", "greedy-pow2", "partial sums n 2^floor(n/2)", 1,
       [range] { return range(1, 100, greedy_partial_sum_closed); }},
      {"A248982", "greedy-fib", "greedy Fibonacci-average sequence", 1, [] { return greedy_fib_oracle(200); }},
  };
  return bindings;
}

inline const OeisBinding& find_oeis_binding(const std::string& id) {
  for (const auto& b : oeis_bindings())
    if (b.id == id) return b;
  throw InvalidParams("no computed sequence is bound to " + id);
}

}  // namespace seqproof
