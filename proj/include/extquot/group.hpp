#pragma once

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "extquot/automorphism.hpp"

namespace extquot {

inline constexpr std::size_t kDefaultClosureBound = 100000;

/// A finite group of lattice automorphisms, elements kept in lexicographic order.
class FiniteMatrixGroup {
public:
  FiniteMatrixGroup() = default;

  /// Takes a set already known to be a group. Sorts it.
  FiniteMatrixGroup(std::size_t rank, std::vector<LatticeAutomorphism> elements) : rank_(rank), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    index_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    for (const auto& e : elems_) detail::require_rank(rank_, e.rank(), "group element");
  }

  static FiniteMatrixGroup trivial(std::size_t rank) { return {rank, {LatticeAutomorphism::identity(rank)}}; }

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<LatticeAutomorphism>& elements() const { return elems_; }
  const LatticeAutomorphism& operator[](std::size_t i) const { return elems_[i]; }

  bool contains(const LatticeAutomorphism& g) const { return index_.count(g) != 0; }
  std::size_t index_of(const LatticeAutomorphism& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw NotAMember("element is not in the group");
    return it->second;
  }

  bool is_abelian() const {
    for (const auto& a : elems_)
      for (const auto& b : elems_)
        if (a * b != b * a) return false;
    return true;
  }

private:
  std::size_t rank_ = 0;
  std::vector<LatticeAutomorphism> elems_;
  std::unordered_map<LatticeAutomorphism, std::size_t> index_;
};

/// Smallest product-closed set containing the generators and the identity.
/// Throws ClosureExceedsBound when more than `bound` elements appear.
inline FiniteMatrixGroup group_closure(const std::vector<LatticeAutomorphism>& generators, std::size_t rank,
                                       std::size_t bound = kDefaultClosureBound) {
  if (bound == 0) throw InvalidArgument("closure bound must be positive");
  for (const auto& g : generators) detail::require_rank(rank, g.rank(), "generator");
  std::unordered_set<LatticeAutomorphism> seen;
  std::deque<LatticeAutomorphism> frontier;
  auto e = LatticeAutomorphism::identity(rank);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    auto x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      auto y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          throw ClosureExceedsBound("group closure exceeds " + std::to_string(bound) + " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  return {rank, {seen.begin(), seen.end()}};
}

struct ConjugacyClass {
  LatticeAutomorphism representative; ///< lexicographically least member
  std::vector<LatticeAutomorphism> members; ///< sorted

  std::size_t size() const { return members.size(); }
};

/// Conjugacy classes ordered by representative. Classes are grown by conjugating
/// with every group element, so the cost is |G| per class.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& G) {
  std::vector<bool> done(G.order(), false);
  std::vector<ConjugacyClass> out;
  std::vector<LatticeAutomorphism> inverses;
  inverses.reserve(G.order());
  for (const auto& a : G.elements()) inverses.push_back(a.inverse());
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (done[i]) continue;
    std::vector<LatticeAutomorphism> members;
    const auto& g = G[i];
    for (std::size_t a = 0; a < G.order(); ++a) {
      auto c = G[a] * g * inverses[a];
      auto idx = G.index_of(c);
      if (!done[idx]) {
        done[idx] = true;
        members.push_back(std::move(c));
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back({members.front(), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

/// Same result, with each class found as an orbit under conjugation by `generators`.
/// Only valid when the generators generate G; otherwise the orbits are finer than classes.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& G,
                                                     const std::vector<LatticeAutomorphism>& generators) {
  std::vector<std::pair<LatticeAutomorphism, LatticeAutomorphism>> conj;
  for (const auto& s : generators) conj.emplace_back(s, s.inverse());
  std::vector<bool> done(G.order(), false);
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<LatticeAutomorphism> members{G[i]};
    for (std::size_t k = 0; k < members.size(); ++k)
      for (const auto& [s, si] : conj) {
        auto c = s * members[k] * si;
        auto idx = G.index_of(c);
        if (!done[idx]) {
          done[idx] = true;
          members.push_back(std::move(c));
        }
      }
    std::sort(members.begin(), members.end());
    out.push_back({members.front(), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

namespace detail {

/// ab == ba, entry by entry with early exit.
inline bool commutes(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      checked::Int ab = 0, ba = 0;
      for (std::size_t k = 0; k < n; ++k) {
        ab = checked::add(ab, checked::mul(a(i, k), b(k, j)));
        ba = checked::add(ba, checked::mul(b(i, k), a(k, j)));
      }
      if (ab != ba) return false;
    }
  return true;
}

} // namespace detail

/// {h in G : hg = gh}
inline FiniteMatrixGroup centralizer(const FiniteMatrixGroup& G, const LatticeAutomorphism& g) {
  if (!G.contains(g)) throw NotAMember("centralizer: element is not in the group");
  std::vector<LatticeAutomorphism> z;
  for (const auto& h : G.elements())
    if (detail::commutes(h.matrix(), g.matrix())) z.push_back(h);
  return {G.rank(), std::move(z)};
}

/// Elements fixing x within the point's tolerance.
inline FiniteMatrixGroup stabilizer(const FiniteMatrixGroup& G, const TorusPoint& x) {
  detail::require_rank(G.rank(), x.rank(), "stabilizer");
  std::vector<LatticeAutomorphism> s;
  for (const auto& h : G.elements())
    if (h.fixes(x)) s.push_back(h);
  return {G.rank(), std::move(s)};
}

/// Direct product acting block-diagonally on rank r1 + r2.
inline FiniteMatrixGroup direct_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  std::vector<LatticeAutomorphism> elems;
  elems.reserve(a.order() * b.order());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) elems.emplace_back(direct_sum(x.matrix(), y.matrix()));
  return {a.rank() + b.rank(), std::move(elems)};
}

} // namespace extquot
