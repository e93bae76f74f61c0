#pragma once

#include <stdexcept>
#include <string>

#include "seqproof/core/bigint.hpp"
#include "seqproof/core/enclosure.hpp"
#include "seqproof/core/errors.hpp"
#include "seqproof/core/interval.hpp"

namespace seqproof {

// Summands with a positive, decreasing derivative on [1, inf).
enum class SummandKind { Log2, CubeRoot };

// Encloses sum_{k=first}^{last} f(k) using the first-order Euler-Maclaurin
// bracket for f' > 0 decreasing:
//
//   I + (f(l) + f(m))/2 - f'(l)/8  <=  sum  <=  I + (f(l) + f(m))/2,
//
// with I the integral of f over [l, m]. The transcendental pieces are
// enclosed at a working precision derived from precision_bits and the
// bracket is widened by their enclosure widths.
inline RationalInterval euler_maclaurin_bounds(SummandKind kind, const BigInt& first, const BigInt& last,
                                               unsigned precision_bits, const PrecisionPolicy& policy = {}) {
  if (first < 1) throw std::invalid_argument("euler_maclaurin_bounds: first index must be >= 1");
  if (first > last) throw std::invalid_argument("euler_maclaurin_bounds: first > last");
  if (precision_bits == 0) throw std::invalid_argument("euler_maclaurin_bounds: precision_bits must be >= 1");
  if (precision_bits > policy.cap_bits)
    throw PrecisionExhausted("euler_maclaurin_bounds: " + std::to_string(precision_bits) + " bits");

  const unsigned work = precision_bits + static_cast<unsigned>(bit_length(last)) + 4;
  const BigRational l(first), m(last);

  RationalInterval upper, slack;
  switch (kind) {
    case SummandKind::Log2: {
      RationalInterval log_l = log2_enclosure(l, work, policy);
      RationalInterval log_m = log2_enclosure(m, work, policy);
      RationalInterval inv_ln2 = ln2_enclosure(work, policy).reciprocal();
      // [x log2 x - x / ln 2] from l to m
      RationalInterval integral = m * log_m - l * log_l - inv_ln2 * BigRational(m - l);
      upper = integral + (log_l + log_m) * BigRational(1, 2);
      slack = inv_ln2 * BigRational(BigRational(1) / (8 * l));
      break;
    }
    case SummandKind::CubeRoot: {
      RationalInterval cbrt_l = root_enclosure(l, 3, work);
      RationalInterval cbrt_m = root_enclosure(m, 3, work);
      RationalInterval cbrt_l4 = root_enclosure(BigRational(l * l * l * l), 3, work);
      RationalInterval cbrt_m4 = root_enclosure(BigRational(m * m * m * m), 3, work);
      RationalInterval cbrt_l2 = root_enclosure(BigRational(l * l), 3, work);
      RationalInterval integral = (cbrt_m4 - cbrt_l4) * BigRational(3, 4);
      upper = integral + (cbrt_l + cbrt_m) * BigRational(1, 2);
      // f'(l) / 8 = 1 / (24 l^(2/3))
      slack = cbrt_l2.reciprocal() * BigRational(1, 24);
      break;
    }
  }
  RationalInterval lower = upper - slack;
  return {lower.lo(), upper.hi()};
}

}  // namespace seqproof
