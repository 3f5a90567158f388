// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hopfcat/errors.hpp"
#include "hopfcat/scalar.hpp"
#include "hopfcat/tensor_index.hpp"

namespace hopfcat {

/// Coordinate vector over one field.
using Vec = std::vector<Scalar>;

inline Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

/// A k-linear map between coordinate spaces, stored densely as a
/// codomain_dim x domain_dim matrix. Column j is the image of basis vector j.
class LinMap {
 public:
  LinMap() = default;

  LinMap(Field f, std::size_t codomain_dim, std::size_t domain_dim)
      : field_(f), rows_(codomain_dim), cols_(domain_dim),
        entries_(codomain_dim * domain_dim, Scalar::zero(f)) {}

  static LinMap zero(Field f, std::size_t codomain_dim, std::size_t domain_dim) {
    return LinMap(f, codomain_dim, domain_dim);
  }

  static LinMap identity(Field f, std::size_t n) {
    LinMap m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  /// Row-major integer literal, e.g. from_ints(f, {{1, 2}, {3, 4}}).
  static LinMap from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    LinMap m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw MalformedData("ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m.at(i, j++) = Scalar::from_int(f, v);
      ++i;
    }
    return m;
  }

  /// Builds the map whose columns are the given vectors.
  static LinMap from_columns(Field f, std::size_t codomain_dim, std::span<const Vec> columns) {
    LinMap m(f, codomain_dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != codomain_dim) throw MalformedData("column has wrong length");
      for (std::size_t i = 0; i < codomain_dim; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
  }

  /// A 1 x n covector.
  static LinMap row(Field f, const Vec& v) {
    LinMap m(f, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
  }

  /// An n x 1 map k -> k^n picking out v.
  static LinMap column(Field f, const Vec& v) { return from_columns(f, v.size(), std::span(&v, 1)); }

  Field field() const noexcept { return field_; }
  std::size_t codomain_dim() const noexcept { return rows_; }
  std::size_t domain_dim() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("LinMap index out of range");
    return entries_[r * cols_ + c];
  }
  const Scalar& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("LinMap index out of range");
    return entries_[r * cols_ + c];
  }

  Vec col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Vec row_vec(std::size_t r) const {
    return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw MalformedData("vector length does not match domain");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero()) out[r].add_product(a, v[c]);
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  LinMap transpose() const {
    LinMap t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return t;
  }

  LinMap scaled(const Scalar& s) const {
    LinMap m = *this;
    for (auto& e : m.entries_) e *= s;
    return m;
  }

  /// Composition: (f * g)(v) = f(g(v)).
  friend LinMap operator*(const LinMap& f, const LinMap& g) {
    check_field(f, g);
    if (f.cols_ != g.rows_) {
      throw MalformedData("composition of " + f.shape() + " after " + g.shape());
    }
    LinMap out(f.field_, f.rows_, g.cols_);
    for (std::size_t i = 0; i < f.rows_; ++i) {
      for (std::size_t k = 0; k < f.cols_; ++k) {
        const Scalar& a = f(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < g.cols_; ++j) {
          const Scalar& b = g(k, j);
          if (!b.is_zero()) out.entries_[i * g.cols_ + j].add_product(a, b);
        }
      }
    }
    return out;
  }

  friend LinMap operator+(LinMap f, const LinMap& g) {
    f.check_same_shape(g);
    for (std::size_t i = 0; i < f.entries_.size(); ++i) f.entries_[i] += g.entries_[i];
    return f;
  }

  friend LinMap operator-(LinMap f, const LinMap& g) {
    f.check_same_shape(g);
    for (std::size_t i = 0; i < f.entries_.size(); ++i) f.entries_[i] -= g.entries_[i];
    return f;
  }

  friend bool operator==(const LinMap& f, const LinMap& g) {
    if (!(f.field_ == g.field_) || f.rows_ != g.rows_ || f.cols_ != g.cols_) return false;
    return f.entries_ == g.entries_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static void check_field(const LinMap& f, const LinMap& g) {
    if (!(f.field_ == g.field_)) {
      throw FieldMismatch("maps over " + f.field_.to_string() + " and " + g.field_.to_string());
    }
  }

  void check_same_shape(const LinMap& g) const {
    check_field(*this, g);
    if (rows_ != g.rows_ || cols_ != g.cols_) {
      throw MalformedData("shape mismatch " + shape() + " vs " + g.shape());
    }
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// f (x) g under the row-major flattening:
/// (f (x) g)[(i,k),(j,l)] = f[i,j] * g[k,l].
inline LinMap kron(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("kron of maps over different fields");
  LinMap out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& b = g(k, l);
          if (!b.is_zero()) out.at(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
      }
    }
  }
  return out;
}

inline LinMap kron(const LinMap& f, const LinMap& g, const LinMap& h) { return kron(kron(f, g), h); }

inline LinMap kron(const LinMap& f, const LinMap& g, const LinMap& h, const LinMap& k) {
  return kron(kron(kron(f, g), h), k);
}

/// The permutation of tensor factors sending factor perm[t] of the input to
/// position t of the output. Input factors have dimensions `dims`.
inline LinMap permute_factors(Field f, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw MalformedData("permutation arity mismatch");
  const TensorIndex in(dims);
  std::vector<std::size_t> out_dims(dims.size());
  for (std::size_t t = 0; t < perm.size(); ++t) out_dims[t] = dims.at(perm[t]);
  const TensorIndex out(out_dims);
  LinMap p(f, out.size(), in.size());
  std::vector<std::size_t> target(dims.size());
  for (std::size_t flat = 0; flat < in.size(); ++flat) {
    const auto src = in.unflatten(flat);
    for (std::size_t t = 0; t < perm.size(); ++t) target[t] = src[perm[t]];
    p.at(out.flatten(target), flat) = Scalar::one(f);
  }
  return p;
}

/// The symmetric braiding a (x) b -> b (x) a.
inline LinMap flip(Field f, std::size_t a, std::size_t b) { return permute_factors(f, {a, b}, {1, 0}); }

/// Places the columns of the given maps side by side (a map out of a direct sum).
inline LinMap hstack(Field f, std::size_t codomain_dim, std::span<const LinMap> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != codomain_dim) throw MalformedData("hstack block has wrong codomain");
    cols += b.cols();
  }
  LinMap out(f, codomain_dim, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, offset + c) = b(r, c);
    }
    offset += b.cols();
  }
  return out;
}

/// Copies `block` into `target` with its top-left corner at (row, col).
inline void place(LinMap& target, const LinMap& block, std::size_t row, std::size_t col) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) target.at(row + r, col + c) = block(r, c);
  }
}

/// Extracts the rows x cols submatrix starting at (row, col).
inline LinMap submatrix(const LinMap& m, std::size_t row, std::size_t col, std::size_t rows,
                        std::size_t cols) {
  LinMap out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = m.at(row + r, col + c);
  }
  return out;
}

}  // namespace hopfcat
