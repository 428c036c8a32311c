#pragma once

#include <string>
#include <vector>

#include "extquot/group.hpp"

namespace extquot {

/// A finite group acting on X = (C^x)^rank by lattice automorphisms.
struct QuotientSetup {
  FiniteMatrixGroup group;
  std::size_t rank = 0;
  std::string label;
  std::vector<LatticeAutomorphism> generators; ///< as supplied; kept for provenance

  static QuotientSetup from_generators(std::vector<LatticeAutomorphism> gens, std::size_t rank, std::string label,
                                       std::size_t bound = kDefaultClosureBound) {
    auto G = group_closure(gens, rank, bound);
    return {std::move(G), rank, std::move(label), std::move(gens)};
  }

  static QuotientSetup trivial(std::size_t rank, std::string label = "trivial") {
    return {FiniteMatrixGroup::trivial(rank), rank, std::move(label), {}};
  }
};

/// Gamma_1 x Gamma_2 acting block-diagonally on rank r1 + r2.
inline QuotientSetup product_setup(const QuotientSetup& a, const QuotientSetup& b) {
  std::vector<LatticeAutomorphism> gens;
  auto ea = IntMatrix::identity(a.rank), eb = IntMatrix::identity(b.rank);
  for (const auto& g : a.generators) gens.emplace_back(direct_sum(g.matrix(), eb));
  for (const auto& g : b.generators) gens.emplace_back(direct_sum(ea, g.matrix()));
  return {direct_product(a.group, b.group), a.rank + b.rank, a.label + "x" + b.label, std::move(gens)};
}

} // namespace extquot
