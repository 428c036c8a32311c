#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extquot/fixed_set.hpp"
#include "extquot/orbit.hpp"

namespace extquot {

/// Per conjugacy class data: the class, Z(gamma), and X^gamma.
struct ClassData {
  ConjugacyClass cls;
  FiniteMatrixGroup centralizer;
  FixedSet fixed;

  const LatticeAutomorphism& representative() const { return cls.representative; }
};

/// One irreducible component X^gamma_C / Z(gamma): a class together with a
/// Z(gamma)-orbit of connected components of X^gamma.
struct ExtComponent {
  std::size_t class_index = 0;
  LatticeAutomorphism class_rep;
  std::vector<TorsionLabel> component_orbit; ///< sorted; front() is the base label
  std::size_t dimension = 0;
  std::optional<Cocharacter> cocharacter;
  std::string name;

  bool contains_label(const TorsionLabel& k) const {
    return std::binary_search(component_orbit.begin(), component_orbit.end(), k);
  }
};

struct ComponentCatalog {
  QuotientSetup setup;
  std::vector<ClassData> classes; ///< ordered by representative
  std::vector<ExtComponent> components;
  std::size_t ordinary_component_index = 0;

  const ExtComponent& ordinary() const { return components[ordinary_component_index]; }
  const FixedSet& fixed_set_of(const ExtComponent& c) const { return classes[c.class_index].fixed; }
  const ClassData& class_of(const ExtComponent& c) const { return classes[c.class_index]; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].name == name) return i;
    throw InvalidArgument("no component named " + name);
  }

  /// Point on component `idx` (on its base connected component) with the given free parameters.
  TorusPoint point_on(std::size_t idx, const std::vector<Complex>& params, double tol = default_tolerance()) const {
    const auto& c = components.at(idx);
    return fixed_set_of(c).parametrize(c.component_orbit.front(), params, tol);
  }

  /// Which component of class `class_index` contains the fixed point x.
  std::size_t component_containing(std::size_t class_index, const TorusPoint& x) const {
    auto k = classes.at(class_index).fixed.locate(x);
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].class_index == class_index && components[i].contains_label(k)) return i;
    throw Error("fixed point does not belong to any catalogued component");
  }
};

/// Z(gamma)-orbits on the connected components of X^gamma, computed exactly on torsion labels.
inline std::vector<std::vector<TorsionLabel>> label_orbits(const FixedSet& fs, const FiniteMatrixGroup& Z) {
  auto labels = fs.labels();
  std::vector<std::vector<TorsionLabel>> out;
  if (labels.size() == 1) return {labels};
  std::vector<InducedAction> acts;
  acts.reserve(Z.order());
  for (const auto& z : Z.elements()) acts.push_back(fs.induced_action(z));
  std::map<TorsionLabel, bool> seen;
  for (const auto& k : labels) {
    if (seen[k]) continue;
    std::vector<TorsionLabel> orb;
    for (const auto& a : acts) {
      auto img = fs.map_label(a, k);
      if (!seen[img]) {
        seen[img] = true;
        orb.push_back(std::move(img));
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

/// X//Gamma = disjoint union over class representatives gamma of X^gamma / Z(gamma),
/// one component per Z(gamma)-orbit of connected components of X^gamma.
/// Order: the ordinary component first, then by decreasing dimension, class representative, base label.
inline ComponentCatalog decompose(const QuotientSetup& setup) {
  ComponentCatalog cat{setup, {}, {}, 0};
  const auto& G = setup.group;
  auto classes = conjugacy_classes(G, setup.generators);
  std::vector<FiniteMatrixGroup> Zs;
  for (const auto& cls : classes) {
    Zs.push_back(centralizer(G, cls.representative));
    if (cls.members.size() * Zs.back().order() != G.order()) {
      // the supplied generators do not generate the group
      classes = conjugacy_classes(G);
      Zs.clear();
      for (const auto& c : classes) Zs.push_back(centralizer(G, c.representative));
      break;
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    FixedSet fs(classes[i].representative);
    cat.classes.push_back({std::move(classes[i]), std::move(Zs[i]), std::move(fs)});
  }
  for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
    const auto& cd = cat.classes[ci];
    for (auto& orb : label_orbits(cd.fixed, cd.centralizer))
      cat.components.push_back({ci, cd.representative(), std::move(orb), cd.fixed.dimension(), std::nullopt, {}});
  }
  std::stable_sort(cat.components.begin(), cat.components.end(), [](const ExtComponent& a, const ExtComponent& b) {
    bool ea = a.class_rep.is_identity(), eb = b.class_rep.is_identity();
    if (ea != eb) return ea;
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    if (a.class_rep != b.class_rep) return a.class_rep < b.class_rep;
    return a.component_orbit.front() < b.component_orbit.front();
  });
  for (std::size_t i = 0; i < cat.components.size(); ++i) cat.components[i].name = "c" + std::to_string(i);
  cat.ordinary_component_index = 0;
  return cat;
}

/// Attach a cocharacter known for `element` (any member of its class, fixed-set component
/// containing `point`) to the catalogued component, transporting it to the class representative.
/// If a * element * a^{-1} = rep then X^rep = a . X^element and exponents map by e -> A e.
/// Returns the component index.
inline std::size_t attach_cocharacter(ComponentCatalog& cat, const LatticeAutomorphism& element, const TorusPoint& point,
                               const Cocharacter& h) {
  detail::require_rank(cat.setup.rank, h.rank(), "cocharacter");
  for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
    const auto& cd = cat.classes[ci];
    if (!std::binary_search(cd.cls.members.begin(), cd.cls.members.end(), element)) continue;
    // identity first, so a representative keeps its cocharacter verbatim
    std::vector<const LatticeAutomorphism*> order;
    auto e = LatticeAutomorphism::identity(cat.setup.rank);
    order.push_back(&e);
    for (const auto& a : cat.setup.group.elements()) order.push_back(&a);
    for (const auto* ap : order) {
      const auto& a = *ap;
      if (a * element != cd.representative() * a) continue;
      auto moved = a.apply(point);
      auto idx = cat.component_containing(ci, moved);
      std::vector<long long> e(h.rank());
      auto v = a.matrix() * std::vector<checked::Int>(h.exponents.begin(), h.exponents.end());
      std::copy(v.begin(), v.end(), e.begin());
      cat.components[idx].cocharacter = Cocharacter{std::move(e)};
      return idx;
    }
  }
  throw NotAMember("element is not in the group");
}

/// Preimage of the orbit of x under pi: X//Gamma -> X/Gamma. One entry per
/// Gamma-orbit of pairs (gamma, y) with y in the orbit of x and gamma y = y.
struct FiberEntry {
  std::size_t component;
  TorusPoint point; ///< a point of X^{class rep} in the orbit of x
};

inline std::vector<FiberEntry> fiber(const ComponentCatalog& cat, const TorusPoint& x) {
  auto pts = orbit(cat.setup, x);
  std::vector<FiberEntry> out;
  for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
    const auto& cd = cat.classes[ci];
    std::vector<TorusPoint> fixed;
    for (const auto& p : pts)
      if (cd.representative().fixes(p)) fixed.push_back(p);
    std::vector<bool> used(fixed.size(), false);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      if (used[i]) continue;
      for (const auto& z : cd.centralizer.elements()) {
        auto zp = z.apply(fixed[i]);
        for (std::size_t j = 0; j < fixed.size(); ++j)
          if (!used[j] && fixed[j].approx_equals(zp)) used[j] = true;
      }
      out.push_back({cat.component_containing(ci, fixed[i]), fixed[i]});
    }
  }
  return out;
}

/// pi(gamma, x) = orbit of x. Throws NotFixed when gamma does not fix x.
inline OrbitPoint project(const QuotientSetup& setup, const LatticeAutomorphism& class_rep, const TorusPoint& x) {
  detail::require_rank(setup.rank, x.rank(), "project");
  if (!class_rep.fixes(x)) throw NotFixed("project: point " + x.str() + " is not fixed by the class representative");
  return orbit_canonical(setup, x);
}

} // namespace extquot
