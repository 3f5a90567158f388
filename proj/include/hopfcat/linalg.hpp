// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hopfcat/linmap.hpp"

namespace hopfcat {

struct Echelon {
  LinMap reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; the first nonzero entry in a column is the pivot.
inline Echelon rref(LinMap m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m.at(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const LinMap& m) { return rref(m).rank(); }

/// Canonical basis of the span of `vectors` in k^dim: the nonzero rows of the
/// reduced row echelon form of the matrix whose rows are the vectors.
inline std::vector<Vec> echelon_basis(Field f, std::size_t dim, std::span<const Vec> vectors) {
  LinMap m(f, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw MalformedData("vector has wrong length");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  }
  const Echelon e = rref(std::move(m));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row_vec(i));
  return basis;
}

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;  // in reduced row echelon form
};

inline RankKernel rank_kernel(const LinMap& f) {
  const Echelon e = rref(f);
  const std::size_t n = f.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> raw;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f.field(), n);
    v[free] = Scalar::one(f.field());
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    raw.push_back(std::move(v));
  }
  return {e.rank(), echelon_basis(f.field(), n, raw)};
}

struct NotInvertible {
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

inline std::variant<LinMap, NotInvertible> invert(const LinMap& f) {
  if (!f.is_square()) return NotInvertible{rank(f), f.rows(), f.cols()};
  const std::size_t n = f.rows();
  LinMap aug(f.field(), n, 2 * n);
  place(aug, f, 0, 0);
  place(aug, LinMap::identity(f.field(), n), 0, n);
  const Echelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    return NotInvertible{rank(f), n, n};
  }
  return submatrix(e.reduced, 0, n, n, n);
}

/// The rows of `basis` are linearly independent vectors of k^dim; returns the
/// coordinates of v with respect to them, or nothing if v is outside their span.
inline std::optional<Vec> coordinates_in(Field f, std::size_t dim, std::span<const Vec> basis,
                                         const Vec& v) {
  std::vector<Vec> cols(basis.begin(), basis.end());
  cols.push_back(v);
  const LinMap m = LinMap::from_columns(f, dim, cols);
  const Echelon e = rref(m);
  if (!e.pivots.empty() && e.pivots.back() == basis.size()) return std::nullopt;
  if (e.rank() != basis.size()) throw MalformedData("basis vectors are dependent");
  Vec coords(basis.size(), Scalar::zero(f));
  for (std::size_t r = 0; r < e.rank(); ++r) coords[e.pivots[r]] = e.reduced(r, basis.size());
  return coords;
}

}  // namespace hopfcat
