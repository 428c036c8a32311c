#pragma once

#include <vector>

#include "extquot/catalog.hpp"
#include "extquot/polynomial.hpp"

namespace extquot {

/// Poincare polynomial of H*(X//Gamma) with H*((C^x)^d) the exterior algebra on d degree-1 classes.
struct PoincarePolynomial {
  Polynomial total;
  std::vector<Polynomial> per_component; ///< aligned with the catalog's components
};

/// For each component (class gamma, Z(gamma)-orbit O of connected components of X^gamma):
///   (1/|Z(gamma)|) sum_{g in Z(gamma)} sum_{C in O, gC = C} det(I + t g|_C)
/// where g|_C is the induced action on the character lattice of C's torus.
inline PoincarePolynomial poincare_polynomial(const ComponentCatalog& cat) {
  PoincarePolynomial out;
  out.per_component.assign(cat.components.size(), Polynomial{});
  for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
    const auto& cd = cat.classes[ci];
    std::vector<std::size_t> comps;
    for (std::size_t i = 0; i < cat.components.size(); ++i)
      if (cat.components[i].class_index == ci) comps.push_back(i);
    std::vector<Polynomial> sums(comps.size());
    for (const auto& g : cd.centralizer.elements()) {
      auto act = cd.fixed.induced_action(g);
      auto trace = det_one_plus_t(act.on_torus);
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (const auto& k : cat.components[comps[c]].component_orbit)
          if (cd.fixed.map_label(act, k) == k) sums[c] += trace;
    }
    Rational inv(1, static_cast<checked::Int>(cd.centralizer.order()));
    for (std::size_t c = 0; c < comps.size(); ++c) out.per_component[comps[c]] = inv * sums[c];
  }
  for (const auto& p : out.per_component) out.total += p;
  return out;
}

inline PoincarePolynomial poincare_polynomial(const QuotientSetup& setup) { return poincare_polynomial(decompose(setup)); }

} // namespace extquot
