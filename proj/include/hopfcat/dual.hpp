// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"
#include "hopfcat/verify.hpp"

namespace hopfcat {

/// A finite dual (Hopf) category: every C_{x,y} is an algebra, with
/// cocomposition and counits
///   mult(x,y):       C_{x,y} (x) C_{x,y} -> C_{x,y}
///   unit(x,y):       k -> C_{x,y}
///   cocomp(x,y,z):   C_{x,z} -> C_{x,y} (x) C_{y,z}
///   counit(x):       C_{x,x} -> k
///   antipode(x,y):   C_{y,x} -> C_{x,y}   (optional)
class DualHopfCategory {
 public:
  DualHopfCategory() = default;

  DualHopfCategory(Field f, ObjectSet objects, std::vector<std::size_t> dims)
      : field_(f), objects_(std::move(objects)), dims_(std::move(dims)) {
    const std::size_t n = objects_.size();
    if (dims_.size() != n * n) throw MalformedData("dimension table must have |X|^2 entries");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        mult_.emplace_back(f, dim(x, y), dim(x, y) * dim(x, y));
        unit_.emplace_back(f, dim(x, y), 1);
        for (std::size_t z = 0; z < n; ++z) cocomp_.emplace_back(f, dim(x, y) * dim(y, z), dim(x, z));
      }
      counit_.emplace_back(f, 1, dim(x, x));
    }
  }

  Field field() const noexcept { return field_; }
  const ObjectSet& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return dims_.at(x * size() + y); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  LinMap& mult(std::size_t x, std::size_t y) { return mult_.at(pair(x, y)); }
  const LinMap& mult(std::size_t x, std::size_t y) const { return mult_.at(pair(x, y)); }
  LinMap& unit(std::size_t x, std::size_t y) { return unit_.at(pair(x, y)); }
  const LinMap& unit(std::size_t x, std::size_t y) const { return unit_.at(pair(x, y)); }
  LinMap& cocomp(std::size_t x, std::size_t y, std::size_t z) { return cocomp_.at(triple(x, y, z)); }
  const LinMap& cocomp(std::size_t x, std::size_t y, std::size_t z) const {
    return cocomp_.at(triple(x, y, z));
  }
  LinMap& counit(std::size_t x) { return counit_.at(x); }
  const LinMap& counit(std::size_t x) const { return counit_.at(x); }

  bool has_antipode() const noexcept { return antipode_.has_value(); }
  const LinMap& antipode(std::size_t x, std::size_t y) const {
    if (!antipode_) throw MissingAntipode("dual structure carries no antipode");
    return antipode_->at(pair(x, y));
  }
  LinMap& antipode(std::size_t x, std::size_t y) {
    if (!antipode_) throw MissingAntipode("dual structure carries no antipode");
    return antipode_->at(pair(x, y));
  }
  void add_antipode() {
    std::vector<LinMap> s;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) s.emplace_back(field_, dim(x, y), dim(y, x));
    }
    antipode_ = std::move(s);
  }
  void remove_antipode() { antipode_.reset(); }

  void check_shapes() const {
    const std::size_t n = size();
    auto expect = [&](const LinMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
      if (m.rows() != rows || m.cols() != cols) {
        throw MalformedData(what + " has shape " + m.shape() + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
      }
      if (!(m.field() == field_) && rows * cols > 0) throw FieldMismatch(what + " has wrong field");
    };
    for (std::size_t x = 0; x < n; ++x) {
      expect(counit(x), 1, dim(x, x), "counit " + objects_.label(x));
      for (std::size_t y = 0; y < n; ++y) {
        const std::string xy = objects_.label(x) + "," + objects_.label(y);
        expect(mult(x, y), dim(x, y), dim(x, y) * dim(x, y), "mult " + xy);
        expect(unit(x, y), dim(x, y), 1, "unit " + xy);
        if (antipode_) expect(antipode(x, y), dim(x, y), dim(y, x), "antipode " + xy);
        for (std::size_t z = 0; z < n; ++z) {
          expect(cocomp(x, y, z), dim(x, y) * dim(y, z), dim(x, z),
                 "cocomp " + xy + "," + objects_.label(z));
        }
      }
    }
  }

  friend bool operator==(const DualHopfCategory& a, const DualHopfCategory& b) {
    return a.field_ == b.field_ && a.objects_ == b.objects_ && a.dims_ == b.dims_ &&
           a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.cocomp_ == b.cocomp_ &&
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
  std::vector<LinMap> cocomp_;
  std::vector<LinMap> counit_;
  std::optional<std::vector<LinMap>> antipode_;
};

/// Per-pair algebra axioms, coassociativity and counit of the cocomposition,
/// cocomposition and counits as algebra maps, and the antipode laws if present.
inline Report verify_dual(const DualHopfCategory& c) {
  c.check_shapes();
  const Field f = c.field();
  const auto& ob = c.objects();
  const std::size_t n = c.size();
  auto id = [&](std::size_t d) { return LinMap::identity(f, d); };
  Report r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = c.dim(x, y);
      const LinMap& m = c.mult(x, y);
      r.check_equal("assoc", ob.tuple({x, y}), m * kron(m, id(d)), m * kron(id(d), m), {d, d, d});
      r.check_equal("unit-left", ob.tuple({x, y}), m * kron(c.unit(x, y), id(d)), id(d), {d});
      r.check_equal("unit-right", ob.tuple({x, y}), m * kron(id(d), c.unit(x, y)), id(d), {d});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t u = 0; u < n; ++u) {
          r.check_equal("coassoc", ob.tuple({x, y, z, u}),
                        kron(c.cocomp(x, y, z), id(c.dim(z, u))) * c.cocomp(x, z, u),
                        kron(id(c.dim(x, y)), c.cocomp(y, z, u)) * c.cocomp(x, y, u),
                        {c.dim(x, u)});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = c.dim(x, y);
      r.check_equal("counit-left", ob.tuple({x, y}), kron(c.counit(x), id(d)) * c.cocomp(x, x, y),
                    id(d), {d});
      r.check_equal("counit-right", ob.tuple({x, y}), kron(id(d), c.counit(y)) * c.cocomp(x, y, y),
                    id(d), {d});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t dxz = c.dim(x, z);
        const std::size_t dxy = c.dim(x, y);
        const std::size_t dyz = c.dim(y, z);
        const LinMap& delta = c.cocomp(x, y, z);
        r.check_equal("cocomp-mult", ob.tuple({x, y, z}), delta * c.mult(x, z),
                      kron(c.mult(x, y), c.mult(y, z)) *
                          detail::middle_swap(f, dxy, dyz, dxy, dyz) * kron(delta, delta),
                      {dxz, dxz});
        r.check_equal("cocomp-unit", ob.tuple({x, y, z}), delta * c.unit(x, z),
                      kron(c.unit(x, y), c.unit(y, z)), {1});
      }
    }
    const std::size_t d = c.dim(x, x);
    r.check_equal("counit-mult", ob.tuple({x}), c.counit(x) * c.mult(x, x),
                  kron(c.counit(x), c.counit(x)), {d, d});
    r.check_equal("counit-unit", ob.tuple({x}), c.counit(x) * c.unit(x, x), id(1), {1});
  }
  if (c.has_antipode()) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const LinMap& delta = c.cocomp(x, y, x);
        const std::size_t dxy = c.dim(x, y);
        const std::size_t dyx = c.dim(y, x);
        r.check_equal("antipode-right", ob.tuple({x, y}),
                      c.mult(x, y) * kron(id(dxy), c.antipode(x, y)) * delta,
                      c.unit(x, y) * c.counit(x), {c.dim(x, x)});
        r.check_equal("antipode-left", ob.tuple({x, y}),
                      c.mult(y, x) * kron(c.antipode(y, x), id(dyx)) * delta,
                      c.unit(y, x) * c.counit(x), {c.dim(x, x)});
      }
    }
  }
  return r;
}

/// C_{x,y} = A*_{y,x} on the dual basis. Multiplication is the opposite
/// convolution, 1_{x,y} = eps_{y,x}, cocomposition is the transpose of m with
/// the factors swapped, eps_x = evaluation at 1_x, antipode S*_{y,x}.
inline DualHopfCategory dualize(const HopfCategory& a) {
  a.check_shapes();
  const Field f = a.field();
  const std::size_t n = a.size();
  std::vector<std::size_t> dims(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = a.dim(y, x);
  }
  DualHopfCategory c(f, a.objects(), dims);
  if (a.has_antipode()) c.add_antipode();
  for (std::size_t x = 0; x < n; ++x) {
    c.counit(x) = a.unit(x).transpose();
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.dim(y, x);
      c.mult(x, y) = a.comult(y, x).transpose() * flip(f, d, d);
      c.unit(x, y) = a.counit(y, x).transpose();
      if (a.has_antipode()) c.antipode(x, y) = a.antipode(y, x).transpose();
      for (std::size_t z = 0; z < n; ++z) {
        c.cocomp(x, y, z) = flip(f, a.dim(z, y), a.dim(y, x)) * a.mult(z, y, x).transpose();
      }
    }
  }
  return c;
}

/// Inverse of dualize: A_{x,y} = C*_{y,x}.
inline HopfCategory undualize(const DualHopfCategory& c) {
  c.check_shapes();
  const Field f = c.field();
  const std::size_t n = c.size();
  std::vector<std::size_t> dims(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = c.dim(y, x);
  }
  HopfCategory a(f, c.objects(), dims);
  if (c.has_antipode()) a.add_antipode();
  for (std::size_t x = 0; x < n; ++x) {
    a.unit(x) = c.counit(x).transpose();
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = c.dim(y, x);
      a.comult(x, y) = flip(f, d, d) * c.mult(y, x).transpose();
      a.counit(x, y) = c.unit(y, x).transpose();
      if (c.has_antipode()) a.antipode(x, y) = c.antipode(y, x).transpose();
      for (std::size_t z = 0; z < n; ++z) {
        a.mult(x, y, z) = c.cocomp(z, y, x).transpose() * flip(f, a.dim(x, y), a.dim(y, z));
      }
    }
  }
  return a;
}

}  // namespace hopfcat
