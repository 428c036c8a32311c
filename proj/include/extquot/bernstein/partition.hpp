#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "extquot/setup.hpp"

namespace extquot::bernstein {

/// Weakly decreasing positive parts a_1 >= ... >= a_k.
struct Partition {
  std::vector<int> parts;

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  std::size_t length() const { return parts.size(); }
  bool has_part_at_least_two() const { return !parts.empty() && parts.front() >= 2; }

  bool valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] < 1 || (i && parts[i] > parts[i - 1])) return false;
    return !parts.empty();
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({cur});
    return;
  }
  for (int a = std::min(remaining, max_part); a >= 1; --a) {
    cur.push_back(a);
    partitions_rec(remaining - a, a, cur, out);
    cur.pop_back();
  }
}
} // namespace detail

/// All partitions of r in reverse lexicographic order: [r], [r-1,1], ..., [1,...,1].
inline std::vector<Partition> partitions(int r) {
  if (r < 1) throw InvalidArgument("partitions: r must be at least 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(r, r, cur, out);
  return out;
}

/// Permutation matrix of the product of cycles of lengths a_1, ..., a_k on consecutive index
/// blocks; column j carries e_{sigma(j)} with sigma(s + i) = s + (i + 1) mod a on block [s, s + a).
inline LatticeAutomorphism partition_to_class(const Partition& p) {
  if (!p.valid()) throw InvalidArgument("invalid partition " + p.str());
  const auto r = static_cast<std::size_t>(p.size());
  IntMatrix m(r, r);
  std::size_t s = 0;
  for (int a : p.parts) {
    for (int i = 0; i < a; ++i) m(s + static_cast<std::size_t>((i + 1) % a), s + static_cast<std::size_t>(i)) = 1;
    s += static_cast<std::size_t>(a);
  }
  return LatticeAutomorphism(std::move(m));
}

/// Per part a, exponents (a-1, a-3, ..., 1-a).
inline Cocharacter cocharacter_gl(const Partition& p) {
  if (!p.valid()) throw InvalidArgument("invalid partition " + p.str());
  Cocharacter h;
  for (int a : p.parts)
    for (int i = 0; i < a; ++i) h.exponents.push_back(a - 1 - 2 * i);
  return h;
}

/// S_r as r x r permutation matrices, generated by (0 1) and the r-cycle.
inline QuotientSetup symmetric_group_setup(int r, std::size_t bound = kDefaultClosureBound) {
  if (r < 1) throw InvalidArgument("symmetric group rank must be at least 1");
  const auto n = static_cast<std::size_t>(r);
  std::vector<LatticeAutomorphism> gens;
  if (r >= 2) {
    IntMatrix swap = IntMatrix::identity(n);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    gens.emplace_back(swap);
    if (r >= 3) gens.push_back(partition_to_class({{r}}));
  }
  return QuotientSetup::from_generators(std::move(gens), n, "S" + std::to_string(r), bound);
}

} // namespace extquot::bernstein
