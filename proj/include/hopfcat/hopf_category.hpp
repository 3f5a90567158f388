// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/errors.hpp"
#include "hopfcat/linmap.hpp"

namespace hopfcat {

/// Finite object set with labels; objects are addressed by position.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw MalformedData("empty object label");
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) throw MalformedData("duplicate object label " + labels_[i]);
      }
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw std::invalid_argument("unknown object '" + label + "'");
  }

  std::vector<std::string> tuple(std::initializer_list<std::size_t> xs) const {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(label(x));
    return out;
  }

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A finite k-linear (semi-)Hopf category in structure-constant form.
///
/// A_{x,y} has dimension dim(x,y). Structure maps are stored as matrices:
///   mult(x,y,z):  A_{x,y} (x) A_{y,z} -> A_{x,z}
///   unit(x):      k -> A_{x,x}
///   comult(x,y):  A_{x,y} -> A_{x,y} (x) A_{x,y}
///   counit(x,y):  A_{x,y} -> k
///   antipode(x,y): A_{x,y} -> A_{y,x}   (optional)
class HopfCategory {
 public:
  HopfCategory() = default;

  /// All structure maps zero, with shapes matching `dims` (row-major over pairs).
  HopfCategory(Field f, ObjectSet objects, std::vector<std::size_t> dims)
      : field_(f), objects_(std::move(objects)), dims_(std::move(dims)) {
    const std::size_t n = objects_.size();
    if (dims_.size() != n * n) throw MalformedData("dimension table must have |X|^2 entries");
    mult_.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          mult_.emplace_back(f, dim(x, z), dim(x, y) * dim(y, z));
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) unit_.emplace_back(f, dim(x, x), 1);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        comult_.emplace_back(f, dim(x, y) * dim(x, y), dim(x, y));
        counit_.emplace_back(f, 1, dim(x, y));
      }
    }
  }

  Field field() const noexcept { return field_; }
  const ObjectSet& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return dims_.at(x * size() + y); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  LinMap& mult(std::size_t x, std::size_t y, std::size_t z) { return mult_.at(triple(x, y, z)); }
  const LinMap& mult(std::size_t x, std::size_t y, std::size_t z) const {
    return mult_.at(triple(x, y, z));
  }
  LinMap& unit(std::size_t x) { return unit_.at(x); }
  const LinMap& unit(std::size_t x) const { return unit_.at(x); }
  LinMap& comult(std::size_t x, std::size_t y) { return comult_.at(pair(x, y)); }
  const LinMap& comult(std::size_t x, std::size_t y) const { return comult_.at(pair(x, y)); }
  LinMap& counit(std::size_t x, std::size_t y) { return counit_.at(pair(x, y)); }
  const LinMap& counit(std::size_t x, std::size_t y) const { return counit_.at(pair(x, y)); }

  bool has_antipode() const noexcept { return antipode_.has_value(); }

  const LinMap& antipode(std::size_t x, std::size_t y) const {
    if (!antipode_) throw MissingAntipode("structure carries no antipode");
    return antipode_->at(pair(x, y));
  }
  LinMap& antipode(std::size_t x, std::size_t y) {
    if (!antipode_) throw MissingAntipode("structure carries no antipode");
    return antipode_->at(pair(x, y));
  }

  /// Installs zero antipode maps of the right shapes.
  void add_antipode() {
    std::vector<LinMap> s;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) s.emplace_back(field_, dim(y, x), dim(x, y));
    }
    antipode_ = std::move(s);
  }

  void remove_antipode() { antipode_.reset(); }

  /// Throws MalformedData if any stored map has the wrong shape or field.
  void check_shapes() const {
    const std::size_t n = size();
    if (dims_.size() != n * n) throw MalformedData("dimension table must have |X|^2 entries");
    auto expect = [&](const LinMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
      if (!(m.field() == field_) && rows * cols > 0) {
        throw FieldMismatch(what + " is over " + m.field().to_string());
      }
      if (m.rows() != rows || m.cols() != cols) {
        throw MalformedData(what + " has shape " + m.shape() + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
      }
    };
    for (std::size_t x = 0; x < n; ++x) {
      expect(unit(x), dim(x, x), 1, "unit " + objects_.label(x));
      for (std::size_t y = 0; y < n; ++y) {
        const std::string xy = objects_.label(x) + "," + objects_.label(y);
        expect(comult(x, y), dim(x, y) * dim(x, y), dim(x, y), "comult " + xy);
        expect(counit(x, y), 1, dim(x, y), "counit " + xy);
        if (antipode_) expect(antipode(x, y), dim(y, x), dim(x, y), "antipode " + xy);
        for (std::size_t z = 0; z < n; ++z) {
          expect(mult(x, y, z), dim(x, z), dim(x, y) * dim(y, z),
                 "mult " + xy + "," + objects_.label(z));
        }
      }
    }
  }

  friend bool operator==(const HopfCategory& a, const HopfCategory& b) {
    return a.field_ == b.field_ && a.objects_ == b.objects_ && a.dims_ == b.dims_ &&
           a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.comult_ == b.comult_ &&
           a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
  }

 private:
  std::size_t pair(std::size_t x, std::size_t y) const {
    if (x >= size() || y >= size()) throw std::out_of_range("object index out of range");
    return x * size() + y;
  }
  std::size_t triple(std::size_t x, std::size_t y, std::size_t z) const {
    if (z >= size()) throw std::out_of_range("object index out of range");
    return pair(x, y) * size() + z;
  }

  Field field_;
  ObjectSet objects_;
  std::vector<std::size_t> dims_;
  std::vector<LinMap> mult_;
  std::vector<LinMap> unit_;
  std::vector<LinMap> comult_;
  std::vector<LinMap> counit_;
  std::optional<std::vector<LinMap>> antipode_;
};

/// Sets mult(x,y,z)[k, (i,j)] from a coefficient c[i][j][k].
inline void set_mult(HopfCategory& a, std::size_t x, std::size_t y, std::size_t z, std::size_t i,
                     std::size_t j, std::size_t k, const Scalar& c) {
  a.mult(x, y, z).at(k, i * a.dim(y, z) + j) = c;
}

/// Sets comult(x,y)[(j,k), i] from a coefficient D[i][j][k].
inline void set_comult(HopfCategory& a, std::size_t x, std::size_t y, std::size_t i,
                       std::size_t j, std::size_t k, const Scalar& c) {
  a.comult(x, y).at(j * a.dim(x, y) + k, i) = c;
}

}  // namespace hopfcat
