#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "seqproof/core/bigint.hpp"

namespace seqproof {

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact
// on the endpoints, so every operation returns an enclosure of the real
// result without any directed rounding.
class RationalInterval {
 public:
  RationalInterval() = default;

  explicit RationalInterval(BigRational point) : lo_(point), hi_(std::move(point)) {}

  RationalInterval(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("RationalInterval: lo > hi");
  }

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }

  BigRational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  // True when every point of the interval is <= x (resp. >= x).
  bool certainly_at_most(const BigRational& x) const { return hi_ <= x; }
  bool certainly_at_least(const BigRational& x) const { return lo_ >= x; }

  // Floor of the enclosed value when both endpoints agree on it.
  std::optional<BigInt> decided_floor() const {
    BigInt a = floor_of(lo_);
    if (a != floor_of(hi_)) return std::nullopt;
    return a;
  }

  RationalInterval operator-() const { return {BigRational(-hi_), BigRational(-lo_)}; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {BigRational(a.lo_ + b.lo_), BigRational(a.hi_ + b.hi_)};
  }
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {BigRational(a.lo_ - b.hi_), BigRational(a.hi_ - b.lo_)};
  }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    BigRational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  friend RationalInterval operator*(const RationalInterval& a, const BigRational& s) {
    if (s >= 0) return {BigRational(a.lo_ * s), BigRational(a.hi_ * s)};
    return {BigRational(a.hi_ * s), BigRational(a.lo_ * s)};
  }
  friend RationalInterval operator*(const BigRational& s, const RationalInterval& a) { return a * s; }
  friend RationalInterval operator+(const RationalInterval& a, const BigRational& s) {
    return {BigRational(a.lo_ + s), BigRational(a.hi_ + s)};
  }
  friend RationalInterval operator-(const RationalInterval& a, const BigRational& s) {
    return {BigRational(a.lo_ - s), BigRational(a.hi_ - s)};
  }

  RationalInterval reciprocal() const {
    if (lo_ <= 0 && hi_ >= 0)
      throw std::domain_error("RationalInterval::reciprocal: interval contains zero");
    return {BigRational(1 / hi_), BigRational(1 / lo_)};
  }

  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    return a * b.reciprocal();
  }

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  // Convex hull of two intervals.
  static RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

 private:
  BigRational lo_;
  BigRational hi_;
};

inline std::string to_string(const RationalInterval& x) {
  return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

inline double approx(const BigRational& q) { return q.get_d(); }

}  // namespace seqproof
