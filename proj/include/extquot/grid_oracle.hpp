#pragma once

#include <map>
#include <unordered_set>
#include <vector>

#include "extquot/catalog.hpp"

namespace extquot {

/// Census of X//Gamma restricted to the grid of N-th roots of unity mu_N^r.
/// Grid points are exponent vectors k in (Z/N)^r, x = exp(2 pi i k / N).
struct GridCensus {
  checked::Int N = 0;
  std::size_t total = 0;
  std::vector<std::size_t> per_class; ///< aligned with conjugacy_classes(group)
  std::map<std::size_t, std::size_t> stabilizer_histogram; ///< |Gamma_x| -> number of grid orbits in X/Gamma
  std::size_t grid_points = 0;
};

namespace detail {

inline void require_grid_stable(const QuotientSetup& setup, checked::Int N) {
  if (N < 1) throw InvalidArgument("grid size must be positive");
  for (const auto& g : setup.group.elements())
    for (auto e : g.matrix().data())
      if (e < -1 || e > 1) throw GridNotStable("group matrix entry " + std::to_string(e) + " is outside {-1,0,1}");
}

inline std::uint64_t encode(const std::vector<checked::Int>& k, checked::Int N) {
  std::uint64_t c = 0;
  for (auto x : k) c = c * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(x);
  return c;
}

inline std::vector<checked::Int> decode(std::uint64_t c, std::size_t r, checked::Int N) {
  std::vector<checked::Int> k(r);
  for (std::size_t i = r; i-- > 0;) {
    k[i] = static_cast<checked::Int>(c % static_cast<std::uint64_t>(N));
    c /= static_cast<std::uint64_t>(N);
  }
  return k;
}

} // namespace detail

/// Brute force: enumerate {(gamma, k) : gamma k = k} and count orbits of
/// alpha . (gamma, k) = (alpha gamma alpha^{-1}, alpha k).
inline GridCensus grid_oracle(const QuotientSetup& setup, checked::Int N) {
  detail::require_grid_stable(setup, N);
  const std::size_t r = setup.rank;
  const auto& G = setup.group;
  std::uint64_t npts = 1;
  for (std::size_t i = 0; i < r; ++i) npts *= static_cast<std::uint64_t>(N);

  auto classes = conjugacy_classes(G);
  std::vector<std::size_t> class_of(G.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c].members) class_of[G.index_of(m)] = c;
  std::vector<LatticeAutomorphism> inv;
  for (const auto& a : G.elements()) inv.push_back(a.inverse());

  GridCensus census;
  census.N = N;
  census.grid_points = static_cast<std::size_t>(npts);
  census.per_class.assign(classes.size(), 0);

  std::unordered_set<std::uint64_t> seen_pairs;
  std::unordered_set<std::uint64_t> seen_points;
  for (std::uint64_t code = 0; code < npts; ++code) {
    auto k = detail::decode(code, r, N);
    std::size_t stab = 0;
    for (std::size_t gi = 0; gi < G.order(); ++gi) {
      if (G[gi].apply_mod(k, N) != k) continue;
      ++stab;
      std::uint64_t pair = gi * npts + code;
      if (seen_pairs.count(pair)) continue;
      ++census.total;
      ++census.per_class[class_of[gi]];
      for (std::size_t a = 0; a < G.order(); ++a) {
        auto conj = G.index_of(G[a] * G[gi] * inv[a]);
        seen_pairs.insert(conj * npts + detail::encode(G[a].apply_mod(k, N), N));
      }
    }
    if (!seen_points.count(code)) {
      ++census.stabilizer_histogram[stab];
      for (const auto& a : G.elements()) seen_points.insert(detail::encode(a.apply_mod(k, N), N));
    }
  }
  return census;
}

/// Per-component census of the catalog's parametrizations over the grid:
/// adapted exponents e with d_i e_i = 0 mod N, mapped by V, counted up to Z(gamma).
struct ComponentGridCount {
  std::vector<std::size_t> per_component; ///< aligned with catalog components
  std::vector<std::size_t> per_class;     ///< aligned with catalog classes
  std::size_t total = 0;
};

inline ComponentGridCount catalog_grid_census(const ComponentCatalog& cat, checked::Int N) {
  detail::require_grid_stable(cat.setup, N);
  const std::size_t r = cat.setup.rank;
  std::uint64_t npts = 1;
  for (std::size_t i = 0; i < r; ++i) npts *= static_cast<std::uint64_t>(N);

  ComponentGridCount out;
  out.per_component.assign(cat.components.size(), 0);
  out.per_class.assign(cat.classes.size(), 0);
  for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
    const auto& cd = cat.classes[ci];
    const auto& snf = cd.fixed.smith();
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code = 0; code < npts; ++code) {
      auto e = detail::decode(code, r, N);
      bool ok = true;
      TorsionLabel label;
      for (std::size_t i = 0; i < r && ok; ++i) {
        auto d = snf.D(i, i);
        if (d == 0) continue;
        if (checked::mul(d, e[i]) % N != 0) ok = false;
        else if (d >= 2) label.push_back(checked::mul(d, e[i]) / N);
      }
      if (!ok) continue;
      auto k = snf.V * e;
      for (auto& x : k) x = checked::mod(x, N);
      auto kc = detail::encode(k, N);
      if (seen.count(kc)) continue;
      for (const auto& z : cd.centralizer.elements()) seen.insert(detail::encode(z.apply_mod(k, N), N));
      std::size_t comp = cat.components.size();
      for (std::size_t i = 0; i < cat.components.size(); ++i)
        if (cat.components[i].class_index == ci && cat.components[i].contains_label(label)) comp = i;
      if (comp == cat.components.size()) throw Error("grid point outside every catalogued component");
      ++out.per_component[comp];
      ++out.per_class[ci];
      ++out.total;
    }
  }
  return out;
}

} // namespace extquot
