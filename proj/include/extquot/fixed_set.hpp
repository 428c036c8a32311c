#pragma once

#include <numeric>
#include <vector>

#include "extquot/automorphism.hpp"
#include "extquot/smith.hpp"

namespace extquot {

/// Label of a connected component of a fixed set: one residue k_i in [0, d_i) per torsion order.
using TorsionLabel = std::vector<checked::Int>;

/// Affine-monomial action of a lattice automorphism commuting with the fixed element,
/// expressed in the fixed set's adapted coordinates.
struct InducedAction {
  IntMatrix on_labels; ///< torsion rows x torsion cols of V^{-1} H V
  IntMatrix on_torus;  ///< free x free block: action on the component torus character lattice
};

/// X^g = {x : x^M = x}, from the Smith form U (M - I) V = D.
///
/// Adapted coordinates: x = y^V. A coordinate with d_i = 0 is free, one with d_i >= 2
/// is a d_i-th root of unity (a torsion coordinate), and d_i = 1 pins y_i = 1.
/// Connected components are indexed by TorsionLabel in mixed radix over torsion_orders.
class FixedSet {
public:
  FixedSet() = default;

  explicit FixedSet(const LatticeAutomorphism& g) : element_(g) {
    const std::size_t r = g.rank();
    snf_ = smith_normal_form(g.matrix() - IntMatrix::identity(r));
    to_torus_ = LatticeAutomorphism(snf_.V);
    to_adapted_ = to_torus_.inverse();
    for (std::size_t i = 0; i < r; ++i) {
      auto d = snf_.D(i, i);
      if (d == 0) free_.push_back(i);
      else if (d >= 2) {
        torsion_pos_.push_back(i);
        torsion_orders_.push_back(d);
      }
    }
  }

  const LatticeAutomorphism& element() const { return element_; }
  std::size_t rank() const { return element_.rank(); }
  std::size_t dimension() const { return free_.size(); }
  const std::vector<checked::Int>& torsion_orders() const { return torsion_orders_; }
  const SmithDecomposition& smith() const { return snf_; }

  std::size_t component_count() const {
    std::size_t n = 1;
    for (auto d : torsion_orders_) n = static_cast<std::size_t>(checked::mul(static_cast<checked::Int>(n), d));
    return n;
  }

  /// All labels in mixed-radix order (first torsion coordinate slowest).
  std::vector<TorsionLabel> labels() const {
    std::vector<TorsionLabel> out;
    TorsionLabel k(torsion_orders_.size(), 0);
    for (std::size_t c = 0; c < component_count(); ++c) {
      out.push_back(k);
      for (std::size_t i = k.size(); i-- > 0;) {
        if (++k[i] < torsion_orders_[i]) break;
        k[i] = 0;
      }
    }
    return out;
  }

  /// Point of the component `label` with free torus parameters `params` (size = dimension).
  TorusPoint parametrize(const TorsionLabel& label, const std::vector<Complex>& params,
                         double tolerance = default_tolerance()) const {
    if (label.size() != torsion_orders_.size()) throw SizeMismatch("torsion label has wrong length");
    if (params.size() != dimension()) throw SizeMismatch("expected " + std::to_string(dimension()) + " free parameters");
    std::vector<Complex> y(rank(), Complex(1.0));
    for (std::size_t i = 0; i < torsion_pos_.size(); ++i) y[torsion_pos_[i]] = root_of_unity(label[i], torsion_orders_[i]);
    for (std::size_t i = 0; i < free_.size(); ++i) y[free_[i]] = params[i];
    return to_torus_.apply(TorusPoint(std::move(y), tolerance));
  }

  /// Base point of a component: all free parameters equal to 1.
  TorusPoint base_point(const TorsionLabel& label, double tolerance = default_tolerance()) const {
    return parametrize(label, std::vector<Complex>(dimension(), Complex(1.0)), tolerance);
  }

  bool contains(const TorusPoint& x) const { return element_.fixes(x); }

  /// Label of the component containing x. Throws NotFixed when x is not in X^g.
  TorsionLabel locate(const TorusPoint& x) const {
    if (!contains(x)) throw NotFixed("point " + x.str() + " is not fixed by the element");
    auto y = to_adapted_.apply(x);
    TorsionLabel k(torsion_orders_.size());
    for (std::size_t i = 0; i < torsion_pos_.size(); ++i) {
      double d = static_cast<double>(torsion_orders_[i]);
      double turns = std::arg(y[torsion_pos_[i]]) / (2.0 * M_PI) * d;
      k[i] = checked::mod(static_cast<checked::Int>(std::llround(turns)), torsion_orders_[i]);
    }
    return k;
  }

  /// Free parameters of x (the adapted coordinates y_free). x must lie in X^g.
  std::vector<Complex> free_parameters(const TorusPoint& x) const {
    auto y = to_adapted_.apply(x);
    std::vector<Complex> p;
    for (auto i : free_) p.push_back(y[i]);
    return p;
  }

  /// Action of h (which must commute with the element) in adapted coordinates:
  /// B = V^{-1} H V is block triangular with no free columns in the pinned rows.
  InducedAction induced_action(const LatticeAutomorphism& h) const {
    if (h * element_ != element_ * h) throw InvalidArgument("induced action needs a commuting element");
    IntMatrix B = to_adapted_.matrix() * h.matrix() * snf_.V;
    std::vector<std::size_t> pinned;
    for (std::size_t i = 0; i < rank(); ++i)
      if (snf_.D(i, i) != 0) pinned.push_back(i);
    for (auto i : pinned)
      for (auto j : free_)
        if (B(i, j) != 0) throw Error("commuting element does not preserve the fixed set");
    return {B.block(torsion_pos_, torsion_pos_), B.block(free_, free_)};
  }

  /// Image label of `label` under h, computed exactly modulo 1 with a common denominator.
  TorsionLabel map_label(const InducedAction& act, const TorsionLabel& label) const {
    const std::size_t n = torsion_orders_.size();
    checked::Int L = 1;
    for (auto d : torsion_orders_) L = checked::lcm(L, d);
    TorsionLabel out(n);
    for (std::size_t i = 0; i < n; ++i) {
      checked::Int s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s = checked::add(s, checked::mul(act.on_labels(i, j), checked::mul(label[j], L / torsion_orders_[j])));
      s = checked::mod(s, L);
      checked::Int step = L / torsion_orders_[i];
      if (s % step != 0) throw Error("induced label is not a torsion point of the right order");
      out[i] = s / step;
    }
    return out;
  }

  TorsionLabel map_label(const LatticeAutomorphism& h, const TorsionLabel& label) const {
    return map_label(induced_action(h), label);
  }

private:
  LatticeAutomorphism element_;
  SmithDecomposition snf_;
  LatticeAutomorphism to_torus_;
  LatticeAutomorphism to_adapted_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> torsion_pos_;
  std::vector<checked::Int> torsion_orders_;
};

inline FixedSet fixed_set(const LatticeAutomorphism& g) { return FixedSet(g); }

} // namespace extquot
