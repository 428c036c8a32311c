#pragma once

#include <algorithm>
#include <vector>

#include "extquot/setup.hpp"

namespace extquot {

/// A point of X/Gamma, held as the lexicographically least member of its orbit.
struct OrbitPoint {
  TorusPoint representative;

  bool approx_equals(const OrbitPoint& o) const { return representative.approx_equals(o.representative); }
};

/// Distinct members of the orbit of x, in lexicographic order.
inline std::vector<TorusPoint> orbit(const QuotientSetup& setup, const TorusPoint& x) {
  detail::require_rank(setup.rank, x.rank(), "orbit");
  std::vector<TorusPoint> pts;
  pts.reserve(setup.group.order());
  for (const auto& g : setup.group.elements()) pts.push_back(g.apply(x));
  std::sort(pts.begin(), pts.end(), [](const TorusPoint& a, const TorusPoint& b) { return lex_compare(a, b) < 0; });
  std::vector<TorusPoint> out;
  for (auto& p : pts) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const TorusPoint& q) { return q.approx_equals(p); });
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

inline OrbitPoint orbit_canonical(const QuotientSetup& setup, const TorusPoint& x) {
  detail::require_rank(setup.rank, x.rank(), "orbit_canonical");
  TorusPoint best = x;
  for (const auto& g : setup.group.elements()) {
    auto y = g.apply(x);
    if (lex_compare(y, best) < 0) best = std::move(y);
  }
  return {std::move(best)};
}

/// True iff the stabilizer of x is nontrivial, i.e. the orbit of x lies in the reduced quotient.
inline bool reduced_membership(const QuotientSetup& setup, const TorusPoint& x) {
  detail::require_rank(setup.rank, x.rank(), "reduced_membership");
  for (const auto& g : setup.group.elements())
    if (!g.is_identity() && g.fixes(x)) return true;
  return false;
}

} // namespace extquot
