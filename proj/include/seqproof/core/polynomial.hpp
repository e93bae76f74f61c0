#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/core/bigint.hpp"

namespace seqproof {

// Dense univariate polynomial over Z; coefficient i multiplies x^i.
// Trailing zeros are always stripped, so equality is structural and the zero
// polynomial is the empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
  }

  IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  static IntPolynomial monomial(BigInt c, std::size_t exponent) {
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  // Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

// p^m by binary powering; p^0 == 1 (including 0^0).
inline IntPolynomial poly_pow(IntPolynomial base, unsigned long m) {
  IntPolynomial result = IntPolynomial::constant(1);
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
    else if (c[i] < 0) out += "-";
    BigInt mag = abs(c[i]);
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace seqproof
