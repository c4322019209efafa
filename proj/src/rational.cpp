#include "jamflow/rational.hpp"

#include <numeric>

namespace jamflow {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* context) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw DomainError(std::string("rational overflow in ") + context);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

std::int64_t Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

std::int64_t Rational::ceil() const { return -(-*this).floor(); }

std::int64_t Rational::trunc() const { return num_ / den_; }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in rational: " + text);
      return Rational(v);
    }
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw ParseError("bad numerator in rational: " + text);
    const std::string den_text = text.substr(slash + 1);
    const std::int64_t den = std::stoll(den_text, &used);
    if (used != den_text.size()) throw ParseError("bad denominator in rational: " + text);
    if (den <= 0) throw ParseError("denominator must be positive: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: " + text);
  } catch (const std::out_of_range&) {
    throw ParseError("rational literal out of range: " + text);
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  const Wide num = Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_;
  const Wide den = Wide(a.den_) * b.den_;
  return Rational(narrow(num, "add"), narrow(den, "add"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so the products stay small.
  const std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  const Wide num = Wide(a.num_ / (g1 ? g1 : 1)) * (b.num_ / (g2 ? g2 : 1));
  const Wide den = Wide(a.den_ / (g2 ? g2 : 1)) * (b.den_ / (g1 ? g1 : 1));
  return Rational(narrow(num, "mul"), narrow(den, "mul"));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

}  // namespace jamflow
