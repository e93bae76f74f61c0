#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seqproof {

// Arbitrary-precision integer and always-reduced rational. GMP keeps zero
// canonical and mpq values reduced as long as they are built through
// make_rational or arithmetic on already canonical operands.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

inline std::string to_string(const BigRational& q) { return q.get_str(10); }

// Strict decimal parser: optional leading '-', then at least one digit.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("parse_bigint: empty");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("parse_bigint: bad digit in '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  BigInt out;
  out.set_str(digits, 10);
  return out;
}

// Number of binary digits of |x|; zero for x == 0.
inline std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline BigInt pow2(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

inline BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt floor_of(const BigRational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline BigInt ceil_of(const BigRational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

inline bool is_power_of_two(const BigInt& x) {
  return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

inline BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

// Exact element of Z[i].
struct GaussianInt {
  BigInt re;
  BigInt im;

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::string to_string(const GaussianInt& z) {
  std::string out = to_string(z.re);
  out += z.im < 0 ? "-" : "+";
  out += to_string(BigInt(abs(z.im)));
  out += "i";
  return out;
}

}  // namespace seqproof
