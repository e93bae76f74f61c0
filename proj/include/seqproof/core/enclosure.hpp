#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

#include "seqproof/core/bigint.hpp"
#include "seqproof/core/errors.hpp"
#include "seqproof/core/interval.hpp"

namespace seqproof {

// Upper limit on working precision before a comparison is declared
// undecidable. Callers that must decide a floor or an ordering double their
// precision until it succeeds or this cap is crossed.
struct PrecisionPolicy {
  unsigned cap_bits = 1u << 16;
};

// floor(x^(1/k)) for x >= 0.
inline BigInt integer_nth_root(const BigInt& x, unsigned long k) {
  if (k == 0) throw std::invalid_argument("integer_nth_root: k must be positive");
  if (x < 0) throw NegativeRadicand("integer_nth_root of " + to_string(x));
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

// Enclosure of q^(1/k) for rational q >= 0. The result is the dyadic cell
// [r, r+1] / 2^p with r = floor(q^(1/k) * 2^p), collapsed to a point when the
// root is exactly r / 2^p. Cells for increasing p are nested.
inline RationalInterval root_enclosure(const BigRational& q, unsigned long k, unsigned precision_bits) {
  if (q < 0) throw NegativeRadicand("root_enclosure of " + to_string(q));
  BigInt scaled = q.get_num() << (k * precision_bits);
  BigInt rem;
  mpz_fdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  BigInt r = integer_nth_root(scaled, k);
  BigInt scale = pow2(precision_bits);
  if (rem == 0 && ipow(r, k) == scaled) return RationalInterval(make_rational(r, scale));
  return {make_rational(r, scale), make_rational(r + 1, scale)};
}

namespace detail {

// Builds the canonical dyadic cell [a, a+1] / 2^p around an irrational value
// from a family of sound (not necessarily nested) approximations, asking for
// more working bits until both endpoints land in the same cell.
inline RationalInterval dyadic_cell(const std::function<RationalInterval(unsigned)>& approximate,
                                    unsigned precision_bits, const PrecisionPolicy& policy,
                                    const std::string& what) {
  if (precision_bits > policy.cap_bits)
    throw PrecisionExhausted(what + ": requested " + std::to_string(precision_bits) + " bits");
  const BigInt scale = pow2(precision_bits);
  for (unsigned work = precision_bits + 32;; work *= 2) {
    if (work > policy.cap_bits + 64u)
      throw PrecisionExhausted(what + ": cell undecided at " + std::to_string(work) + " bits");
    RationalInterval approx = approximate(work);
    BigInt a = floor_of(BigRational(approx.lo() * scale));
    BigInt b = floor_of(BigRational(approx.hi() * scale));
    if (a == b) return {make_rational(a, scale), make_rational(a + 1, scale)};
  }
}

// ln(y) for rational y in [1, 2] via ln y = 2 atanh(z), z = (y-1)/(y+1) <= 1/3.
// Fixed-point evaluation at 2^-work: the lower sum truncates every step
// downward, the upper sum rounds upward and adds a geometric tail bound.
inline RationalInterval ln_unit_interval(const BigRational& y, unsigned work) {
  if (y < 1 || y > 2) throw std::invalid_argument("ln_unit_interval: y outside [1, 2]");
  if (y == 1) return RationalInterval(BigRational(0));
  const BigRational z = (y - 1) / (y + 1);
  const BigInt one = pow2(work);
  const BigInt z_lo = floor_of(BigRational(z * one));
  const BigInt z_hi = ceil_of(BigRational(z * one));
  const BigInt z2_lo = (z_lo * z_lo) >> work;
  BigInt z2_hi = z_hi * z_hi;
  mpz_cdiv_q_2exp(z2_hi.get_mpz_t(), z2_hi.get_mpz_t(), work);

  BigInt pow_lo = z_lo, pow_hi = z_hi;  // z^(2j+1) scaled by 2^work
  BigInt sum_lo = 0, sum_hi = 0;
  for (unsigned long j = 0; pow_hi != 0; ++j) {
    BigInt denom = 2 * j + 1;
    BigInt t;
    mpz_fdiv_q(t.get_mpz_t(), pow_lo.get_mpz_t(), denom.get_mpz_t());
    sum_lo += t;
    mpz_cdiv_q(t.get_mpz_t(), pow_hi.get_mpz_t(), denom.get_mpz_t());
    sum_hi += t;
    pow_lo = (pow_lo * z2_lo) >> work;
    pow_hi *= z2_hi;
    mpz_cdiv_q_2exp(pow_hi.get_mpz_t(), pow_hi.get_mpz_t(), work);
    // Remaining terms are bounded by pow_hi * (1 + z^2 + z^4 + ...) <= 9/8 pow_hi.
    if (pow_hi <= 1) {
      sum_hi += 2 * pow_hi + 1;
      break;
    }
  }
  return {make_rational(2 * sum_lo, one), make_rational(2 * sum_hi, one)};
}

// Sound enclosure of log2(x) for rational x > 0 with width about 2^-work.
inline RationalInterval log2_approx(const BigRational& x, unsigned work) {
  long e = static_cast<long>(bit_length(x.get_num())) - static_cast<long>(bit_length(x.get_den()));
  auto scaled = [&](long shift) {
    return shift >= 0 ? BigRational(x / BigRational(pow2(static_cast<unsigned long>(shift))))
                      : BigRational(x * BigRational(pow2(static_cast<unsigned long>(-shift))));
  };
  BigRational y = scaled(e);
  while (y < 1) y = scaled(--e);
  while (y >= 2) y = scaled(++e);
  if (y == 1) return RationalInterval(BigRational(e));
  RationalInterval ln_y = ln_unit_interval(y, work + 4);
  RationalInterval ln_2 = ln_unit_interval(BigRational(2), work + 4);
  return ln_y / ln_2 + BigRational(e);
}

}  // namespace detail

// Enclosure of ln 2 as the dyadic cell of width 2^-precision_bits.
inline RationalInterval ln2_enclosure(unsigned precision_bits, const PrecisionPolicy& policy = {}) {
  return detail::dyadic_cell(
      [](unsigned work) { return detail::ln_unit_interval(BigRational(2), work); }, precision_bits,
      policy, "ln2");
}

// Enclosure of log2(x), exact when x is a power of two.
inline RationalInterval log2_enclosure(const BigRational& x, unsigned precision_bits,
                                       const PrecisionPolicy& policy = {}) {
  if (x <= 0) throw std::domain_error("log2_enclosure: argument must be positive");
  if (x.get_den() == 1 && is_power_of_two(x.get_num()))
    return RationalInterval(BigRational(static_cast<long>(bit_length(x.get_num())) - 1));
  if (x.get_num() == 1 && is_power_of_two(x.get_den()))
    return RationalInterval(BigRational(1 - static_cast<long>(bit_length(x.get_den()))));
  return detail::dyadic_cell([&x](unsigned work) { return detail::log2_approx(x, work); },
                             precision_bits, policy, "log2(" + to_string(x) + ")");
}

struct Sqrt2 {};
struct Sqrt3 {};
struct Ln2 {};
struct CubeRootOf {
  BigInt radicand;
};
using NamedConstant = std::variant<Sqrt2, Sqrt3, Ln2, CubeRootOf>;

// Enclosure of a named constant with width <= 2^-precision_bits. Enclosures
// at higher precision are contained in those at lower precision.
inline RationalInterval real_enclosure(const NamedConstant& name, unsigned precision_bits,
                                       const PrecisionPolicy& policy = {}) {
  if (precision_bits == 0) throw std::invalid_argument("real_enclosure: precision_bits must be >= 1");
  if (precision_bits > policy.cap_bits)
    throw PrecisionExhausted("real_enclosure: " + std::to_string(precision_bits) + " bits");
  struct Visitor {
    unsigned p;
    const PrecisionPolicy& policy;
    RationalInterval operator()(Sqrt2) const { return root_enclosure(BigRational(2), 2, p); }
    RationalInterval operator()(Sqrt3) const { return root_enclosure(BigRational(3), 2, p); }
    RationalInterval operator()(Ln2) const { return ln2_enclosure(p, policy); }
    RationalInterval operator()(const CubeRootOf& c) const {
      // Odd root: cbrt(-x) = -cbrt(x).
      if (c.radicand < 0) return -root_enclosure(BigRational(BigInt(-c.radicand)), 3, p);
      return root_enclosure(BigRational(c.radicand), 3, p);
    }
  };
  return std::visit(Visitor{precision_bits, policy}, name);
}

}  // namespace seqproof
