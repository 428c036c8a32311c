#pragma once

#include <compare>
#include <functional>
#include <ostream>

#include "extquot/int_matrix.hpp"
#include "extquot/torus.hpp"

namespace extquot {

/// Unimodular integer matrix M acting on (C^x)^r by (x^M)_i = prod_j x_j^{M_ij}.
/// apply(g * h, x) == apply(g, apply(h, x)).
class LatticeAutomorphism {
public:
  LatticeAutomorphism() = default;
  explicit LatticeAutomorphism(IntMatrix m) : m_(std::move(m)) {
    if (!m_.square() || m_.rows() == 0) throw InvalidArgument("automorphism matrix must be square and non-empty");
    auto d = m_.determinant();
    if (d != 1 && d != -1)
      throw NonUnimodular("matrix has determinant " + std::to_string(d) + ", expected +-1");
  }
  LatticeAutomorphism(std::initializer_list<std::initializer_list<checked::Int>> rows)
      : LatticeAutomorphism(IntMatrix(rows)) {}

  static LatticeAutomorphism identity(std::size_t r) { return LatticeAutomorphism(IntMatrix::identity(r)); }

  const IntMatrix& matrix() const { return m_; }
  std::size_t rank() const { return m_.rows(); }
  bool is_identity() const { return m_ == IntMatrix::identity(rank()); }

  LatticeAutomorphism inverse() const { return LatticeAutomorphism(m_.unimodular_inverse(), Trusted{}); }

  friend LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    detail::require_rank(a.rank(), b.rank(), "automorphism product");
    return {a.m_ * b.m_, Trusted{}};
  }

  TorusPoint apply(const TorusPoint& x) const {
    detail::require_rank(rank(), x.rank(), "apply");
    std::vector<Complex> out(rank(), Complex(1.0));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (m_(i, j) != 0) out[i] *= ipow(x[j], m_(i, j));
    return x.with_coords(std::move(out));
  }

  /// Action on exponent vectors modulo n: x = exp(2 pi i k / n) maps to exp(2 pi i M k / n).
  std::vector<checked::Int> apply_mod(const std::vector<checked::Int>& k, checked::Int n) const {
    auto v = m_ * k;
    for (auto& e : v) e = checked::mod(e, n);
    return v;
  }

  bool fixes(const TorusPoint& x) const { return apply(x).approx_equals(x); }

  friend std::strong_ordering operator<=>(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    return a.m_ <=> b.m_;
  }
  friend bool operator==(const LatticeAutomorphism&, const LatticeAutomorphism&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LatticeAutomorphism& g) { return os << g.m_; }

private:
  struct Trusted {};
  LatticeAutomorphism(IntMatrix m, Trusted) : m_(std::move(m)) {}

  IntMatrix m_;
};

inline TorusPoint apply(const LatticeAutomorphism& g, const TorusPoint& x) { return g.apply(x); }

} // namespace extquot

template <>
struct std::hash<extquot::LatticeAutomorphism> {
  std::size_t operator()(const extquot::LatticeAutomorphism& g) const noexcept {
    return std::hash<extquot::IntMatrix>{}(g.matrix());
  }
};
