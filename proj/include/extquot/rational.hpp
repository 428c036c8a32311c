#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "extquot/checked.hpp"

namespace extquot {

/// Exact rational with normalized sign (den > 0) and reduced terms.
class Rational {
public:
  Rational() = default;
  Rational(checked::Int n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(checked::Int n, checked::Int d) : num_(n), den_(d) {
    if (d == 0) throw InvalidArgument("rational with zero denominator");
    normalize();
  }

  checked::Int num() const { return num_; }
  checked::Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    checked::Int g = checked::gcd(a.den_, b.den_);
    checked::Int l = checked::mul(a.den_ / g, b.den_);
    return {checked::add(checked::mul(a.num_, l / a.den_), checked::mul(b.num_, l / b.den_)), l};
  }
  friend Rational operator-(const Rational& a) { return {checked::neg(a.num_), a.den_}; }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    checked::Int g1 = checked::gcd(a.num_, b.den_);
    checked::Int g2 = checked::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {checked::mul(a.num_ / g1, b.num_ / g2), checked::mul(a.den_ / g2, b.den_ / g1)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // den > 0 on both sides
    return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
  }

  /// "num/den", or "num" for integers.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return {std::stoll(s)};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    checked::Int g = checked::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  checked::Int num_ = 0;
  checked::Int den_ = 1;
};

} // namespace extquot
