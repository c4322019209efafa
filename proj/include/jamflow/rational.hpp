#pragma once

#include <cstdint>
#include <string>

#include "jamflow/errors.hpp"

namespace jamflow {

// Exact fraction on 64-bit words, always stored in lowest terms with a
// positive denominator. Every quantity the dynamics touches lives here:
// velocities are multiples of the acceleration, densities are particle
// counts over lattice lengths, so magnitudes stay tiny. Intermediates use
// 128-bit arithmetic and overflow throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value.
  std::int64_t floor() const;
  // Smallest integer >= value.
  std::int64_t ceil() const;
  // Integer part with truncation toward zero.
  std::int64_t trunc() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  // Accepts "p", "-p", "p/q"; q must be positive.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.is_negative() ? -a : a; }

}  // namespace jamflow
