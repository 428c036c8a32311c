#pragma once

#include <string>
#include <vector>

#include "extquot/int_matrix.hpp"
#include "extquot/rational.hpp"

namespace extquot {

/// Univariate polynomial in t with exact rational coefficients, degree 0 upward.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<checked::Int> coeffs) {
    for (auto x : coeffs) c_.emplace_back(x);
    trim();
  }

  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }

  Rational even_sum() const {
    Rational s;
    for (std::size_t k = 0; k < c_.size(); k += 2) s += c_[k];
    return s;
  }
  Rational odd_sum() const {
    Rational s;
    for (std::size_t k = 1; k < c_.size(); k += 2) s += c_[k];
    return s;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human form: "1 + t", "3", "1 + 2t + t^2", "1/2t^3".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      Rational a = c_[k];
      if (a == Rational(0)) continue;
      bool negative = a < Rational(0);
      if (!s.empty()) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      Rational mag = negative ? -a : a;
      if (k == 0 || mag != Rational(1)) s += mag.str();
      if (k >= 1) s += "t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == Rational(0)) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// det(I + t B) for a square integer matrix, via Faddeev-LeVerrier on -B:
/// det(I + tB) = sum_k c_k(-B) t^k where det(lambda I - A) = sum_k c_k(A) lambda^{d-k}.
inline Polynomial det_one_plus_t(const IntMatrix& B) {
  const std::size_t d = B.rows();
  if (!B.square()) throw InvalidArgument("det(I + tB) needs a square matrix");
  IntMatrix A = B.negated();
  std::vector<Rational> c(d + 1);
  c[0] = Rational(1);
  IntMatrix M(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    IntMatrix Mk = A * M;
    for (std::size_t i = 0; i < d; ++i) Mk(i, i) = checked::add(Mk(i, i), c[k - 1].num());
    IntMatrix AM = A * Mk;
    checked::Int tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = checked::add(tr, AM(i, i));
    c[k] = Rational(checked::neg(tr), static_cast<checked::Int>(k));
    if (!c[k].is_integer()) throw Error("characteristic polynomial coefficient is not integral");
    M = std::move(Mk);
  }
  return Polynomial(std::move(c));
}

} // namespace extquot
