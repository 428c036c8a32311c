#pragma once

#include <utility>
#include <vector>

#include "extquot/int_matrix.hpp"

namespace extquot {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d_0..d_{min(m,n)-1}.
  std::vector<checked::Int> diagonal() const {
    std::vector<checked::Int> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, checked::Int f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked::add(m(dst, j), checked::mul(f, m(src, j)));
}
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, checked::Int f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked::add(m(i, dst), checked::mul(f, m(i, src)));
}

} // namespace detail

/// Smith normal form by smallest-pivot elimination. Works for any shape,
/// including the zero matrix (D = 0, U = V = I).
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  using checked::Int;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix D = a;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (best == 0 || checked::abs(D(i, j)) < best)) {
            best = checked::abs(D(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      if (pi != t) {
        detail::swap_rows(D, pi, t);
        detail::swap_rows(U, pi, t);
      }
      if (pj != t) {
        detail::swap_cols(D, pj, t);
        detail::swap_cols(V, pj, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = D(i, t) / D(t, t);
        if (q != 0) {
          detail::add_row(D, i, t, checked::neg(q));
          detail::add_row(U, i, t, checked::neg(q));
        }
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = D(t, j) / D(t, t);
        if (q != 0) {
          detail::add_col(D, j, t, checked::neg(q));
          detail::add_col(V, j, t, checked::neg(q));
        }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      detail::add_row(D, t, bad, 1);
      detail::add_row(U, t, bad, 1);
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = checked::neg(D(t, j));
      for (std::size_t j = 0; j < m; ++j) U(t, j) = checked::neg(U(t, j));
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

} // namespace extquot
