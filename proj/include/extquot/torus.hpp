#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "extquot/error.hpp"

namespace extquot {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kMachineZero = 1e-300;

/// Default comparison slack; EXTQUOT_TOLERANCE overrides it when set to a positive number.
inline double default_tolerance() {
  if (const char* env = std::getenv("EXTQUOT_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && std::isfinite(v)) return v;
  }
  return kDefaultTolerance;
}

/// |a - b| <= tol * max(1, |a|, |b|)
inline bool approx_equal(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// z^e for integer e, by repeated squaring (exact for roots of unity up to rounding).
inline Complex ipow(Complex z, long long e) {
  if (e < 0) return ipow(Complex(1.0) / z, -e);
  Complex r(1.0);
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

/// exp(2 pi i k / n), snapped so that quarter turns are exact.
inline Complex root_of_unity(long long k, long long n) {
  k %= n;
  if (k < 0) k += n;
  if (4 * k % n == 0) {
    switch (4 * k / n) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

/// A point of (C^x)^r together with its comparison slack.
class TorusPoint {
public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<Complex> coords, double tolerance = default_tolerance())
      : coords_(std::move(coords)), tol_(tolerance) {
    if (!(tol_ > 0)) throw InvalidArgument("tolerance must be positive");
    for (auto c : coords_)
      if (!(std::abs(c) > kMachineZero) || !std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw InvalidArgument("torus coordinates must be finite and nonzero");
  }

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](std::size_t i) const { return coords_[i]; }
  double tolerance() const { return tol_; }

  TorusPoint with_coords(std::vector<Complex> c) const { return TorusPoint(std::move(c), tol_); }

  bool approx_equals(const TorusPoint& o) const {
    if (o.rank() != rank()) return false;
    double tol = std::max(tol_, o.tol_);
    for (std::size_t i = 0; i < rank(); ++i)
      if (!approx_equal(coords_[i], o.coords_[i], tol)) return false;
    return true;
  }

  /// Coordinatewise product (group law of the torus).
  TorusPoint operator*(const TorusPoint& o) const {
    detail::require_rank(rank(), o.rank(), "torus product");
    std::vector<Complex> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] * o.coords_[i];
    return with_coords(std::move(c));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ", ";
      s += std::to_string(coords_[i].real());
      if (coords_[i].imag() != 0) s += (coords_[i].imag() < 0 ? "-" : "+") + std::to_string(std::abs(coords_[i].imag())) + "i";
    }
    return s + ")";
  }

private:
  std::vector<Complex> coords_;
  double tol_ = kDefaultTolerance;
};

/// Tolerance-aware lexicographic order: real part, then imaginary part, coordinate by coordinate.
/// Values within tolerance of each other compare equal.
inline int lex_compare(const TorusPoint& a, const TorusPoint& b) {
  const double tol = std::max(a.tolerance(), b.tolerance());
  for (std::size_t i = 0; i < std::min(a.rank(), b.rank()); ++i) {
    const double scale = tol * std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    const double dr = a[i].real() - b[i].real();
    if (std::abs(dr) > scale) return dr < 0 ? -1 : 1;
    const double di = a[i].imag() - b[i].imag();
    if (std::abs(di) > scale) return di < 0 ? -1 : 1;
  }
  return a.rank() < b.rank() ? -1 : (a.rank() > b.rank() ? 1 : 0);
}

/// Monomial one-parameter subgroup t -> (t^{e_1}, ..., t^{e_r}).
struct Cocharacter {
  std::vector<long long> exponents;

  std::size_t rank() const { return exponents.size(); }

  bool trivial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long long e) { return e == 0; });
  }

  TorusPoint evaluate(Complex t, double tolerance = default_tolerance()) const {
    if (std::abs(t) <= kMachineZero) throw ZeroParameter("cocharacter evaluated at t = 0");
    std::vector<Complex> c;
    c.reserve(exponents.size());
    for (auto e : exponents) c.push_back(ipow(t, e));
    return TorusPoint(std::move(c), tolerance);
  }

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

} // namespace extquot
