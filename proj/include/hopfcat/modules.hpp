// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcat/dual.hpp"
#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// A module over a Hopf category given by its action maps
///   right: action(x,y,z): M_{x,y} (x) A_{y,z} -> M_{x,z}
///   left:  action(x,y,z): A_{x,y} (x) M_{y,z} -> M_{x,z}
class ModuleData {
 public:
  ModuleData() = default;

  /// Zero actions with shapes matching `dims` over `base`.
  ModuleData(const HopfCategory& base, Side side, std::vector<std::size_t> dims)
      : side_(side), field_(base.field()), objects_(base.objects()), dims_(std::move(dims)) {
    const std::size_t n = objects_.size();
    if (dims_.size() != n * n) throw MalformedData("module dimension table must have |X|^2 entries");
    actions_.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t domain =
              side == Side::right ? dim(x, y) * base.dim(y, z) : base.dim(x, y) * dim(y, z);
          actions_.emplace_back(field_, dim(x, z), domain);
        }
      }
    }
  }

  Side side() const noexcept { return side_; }
  Field field() const noexcept { return field_; }
  const ObjectSet& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return dims_.at(x * size() + y); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  LinMap& action(std::size_t x, std::size_t y, std::size_t z) { return actions_.at(triple(x, y, z)); }
  const LinMap& action(std::size_t x, std::size_t y, std::size_t z) const {
    return actions_.at(triple(x, y, z));
  }

  friend bool operator==(const ModuleData& a, const ModuleData& b) {
    return a.side_ == b.side_ && a.field_ == b.field_ && a.objects_ == b.objects_ &&
           a.dims_ == b.dims_ && a.actions_ == b.actions_;
  }

 private:
  std::size_t triple(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t n = size();
    if (x >= n || y >= n || z >= n) throw std::out_of_range("object index");
    return (x * n + y) * n + z;
  }

  Side side_ = Side::right;
  Field field_;
  ObjectSet objects_;
  std::vector<std::size_t> dims_;
  std::vector<LinMap> actions_;
};

/// A right comodule over a dual Hopf category:
///   coaction(x,y,z): M_{x,z} -> M_{x,y} (x) C_{y,z}
class ComoduleData {
 public:
  ComoduleData() = default;

  ComoduleData(const DualHopfCategory& base, std::vector<std::size_t> dims)
      : field_(base.field()), objects_(base.objects()), dims_(std::move(dims)) {
    const std::size_t n = objects_.size();
    if (dims_.size() != n * n) throw MalformedData("comodule dimension table must have |X|^2 entries");
    coactions_.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          coactions_.emplace_back(field_, dim(x, y) * base.dim(y, z), dim(x, z));
        }
      }
    }
  }

  Field field() const noexcept { return field_; }
  const ObjectSet& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return dims_.at(x * size() + y); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  LinMap& coaction(std::size_t x, std::size_t y, std::size_t z) {
    return coactions_.at(triple(x, y, z));
  }
  const LinMap& coaction(std::size_t x, std::size_t y, std::size_t z) const {
    return coactions_.at(triple(x, y, z));
  }

  friend bool operator==(const ComoduleData& a, const ComoduleData& b) {
    return a.field_ == b.field_ && a.objects_ == b.objects_ && a.dims_ == b.dims_ &&
           a.coactions_ == b.coactions_;
  }

 private:
  std::size_t triple(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t n = size();
    if (x >= n || y >= n || z >= n) throw std::out_of_range("object index");
    return (x * n + y) * n + z;
  }

  Field field_;
  ObjectSet objects_;
  std::vector<std::size_t> dims_;
  std::vector<LinMap> coactions_;
};

namespace detail {

template <class Base, class M>
void require_same_base(const Base& base, const M& m) {
  if (!(base.objects() == m.objects()) || !(base.field() == m.field())) {
    throw PreconditionError("module and base have different objects or fields");
  }
}

inline void require_shape(const LinMap& f, std::size_t rows, std::size_t cols, const std::string& what) {
  if (f.rows() != rows || f.cols() != cols) {
    throw MalformedData(what + " has shape " + f.shape() + ", expected " + std::to_string(rows) +
                        "x" + std::to_string(cols));
  }
}

inline void check_module_shapes(const HopfCategory& a, const ModuleData& m) {
  require_same_base(a, m);
  const std::size_t n = m.size();
  if (m.dims().size() != n * n) throw MalformedData("module dimension table has the wrong size");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t domain =
            m.side() == Side::right ? m.dim(x, y) * a.dim(y, z) : a.dim(x, y) * m.dim(y, z);
        require_shape(m.action(x, y, z), m.dim(x, z), domain, "action");
      }
    }
  }
}

inline void check_comodule_shapes(const DualHopfCategory& c, const ComoduleData& m) {
  require_same_base(c, m);
  const std::size_t n = m.size();
  if (m.dims().size() != n * n) throw MalformedData("comodule dimension table has the wrong size");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        require_shape(m.coaction(x, y, z), m.dim(x, y) * c.dim(y, z), m.dim(x, z), "coaction");
      }
    }
  }
}

}  // namespace detail

/// Associativity and unit laws of a left or right module.
inline Report verify_module(const HopfCategory& a, const ModuleData& m) {
  a.check_shapes();
  detail::check_module_shapes(a, m);
  const Field f = a.field();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  auto id = [&](std::size_t d) { return LinMap::identity(f, d); };
  Report r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t u = 0; u < n; ++u) {
          if (m.side() == Side::right) {
            const LinMap lhs = m.action(x, z, u) * kron(m.action(x, y, z), id(a.dim(z, u)));
            const LinMap rhs = m.action(x, y, u) * kron(id(m.dim(x, y)), a.mult(y, z, u));
            r.check_equal("module-assoc", ob.tuple({x, y, z, u}), lhs, rhs,
                          {m.dim(x, y), a.dim(y, z), a.dim(z, u)});
          } else {
            const LinMap lhs = m.action(x, y, u) * kron(id(a.dim(x, y)), m.action(y, z, u));
            const LinMap rhs = m.action(x, z, u) * kron(a.mult(x, y, z), id(m.dim(z, u)));
            r.check_equal("module-assoc", ob.tuple({x, y, z, u}), lhs, rhs,
                          {a.dim(x, y), a.dim(y, z), m.dim(z, u)});
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = m.dim(x, y);
      const LinMap lhs = m.side() == Side::right ? m.action(x, y, y) * kron(id(d), a.unit(y))
                                                 : m.action(x, x, y) * kron(a.unit(x), id(d));
      r.check_equal("module-unit", ob.tuple({x, y}), lhs, id(d), {d});
    }
  }
  return r;
}

/// Coassociativity and counit laws of a right comodule.
inline Report verify_comodule(const DualHopfCategory& c, const ComoduleData& m) {
  c.check_shapes();
  detail::check_comodule_shapes(c, m);
  const Field f = c.field();
  const auto& ob = c.objects();
  const std::size_t n = c.size();
  auto id = [&](std::size_t d) { return LinMap::identity(f, d); };
  Report r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const LinMap lhs = kron(m.coaction(x, u, y), id(c.dim(y, z))) * m.coaction(x, y, z);
          const LinMap rhs = kron(id(m.dim(x, u)), c.cocomp(u, y, z)) * m.coaction(x, u, z);
          r.check_equal("comodule-coassoc", ob.tuple({x, u, y, z}), lhs, rhs, {m.dim(x, z)});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t d = m.dim(x, z);
      r.check_equal("comodule-counit", ob.tuple({x, z}),
                    kron(id(d), c.counit(z)) * m.coaction(x, z, z), id(d), {d});
    }
  }
  return r;
}

/// A acting on itself by composition.
inline ModuleData regular_module(const HopfCategory& a, Side side = Side::right) {
  ModuleData m(a, side, a.dims());
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) m.action(x, y, z) = a.mult(x, y, z);
  return m;
}

/// C coacting on itself by cocomposition.
inline ComoduleData regular_comodule(const DualHopfCategory& c) {
  ComoduleData m(c, c.dims());
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) m.coaction(x, y, z) = c.cocomp(x, y, z);
  return m;
}

/// The unit object J: every J_{x,y} = k, acted on through the counits.
inline ModuleData unit_module(const HopfCategory& a, Side side = Side::left) {
  const std::size_t n = a.size();
  ModuleData m(a, side, std::vector<std::size_t>(n * n, 1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        m.action(x, y, z) = side == Side::left ? a.counit(x, y) : a.counit(y, z);
  return m;
}

/// Diagonal action on (M (x) N)_{x,y} = M_{x,y} (x) N_{x,y}:
/// left a.(m (x) n) = a_(1)m (x) a_(2)n, right (m (x) n).a = m a_(1) (x) n a_(2).
inline ModuleData tensor_modules(const HopfCategory& a, const ModuleData& m, const ModuleData& nn) {
  detail::check_module_shapes(a, m);
  detail::check_module_shapes(a, nn);
  if (m.side() != nn.side()) throw PreconditionError("tensor_modules: modules act on different sides");
  const Field f = a.field();
  const std::size_t n = a.size();
  auto id = [&](std::size_t d) { return LinMap::identity(f, d); };
  std::vector<std::size_t> dims(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = m.dim(x, y) * nn.dim(x, y);
  ModuleData out(a, m.side(), dims);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const LinMap both = kron(m.action(x, y, z), nn.action(x, y, z));
        if (m.side() == Side::left) {
          const std::size_t da = a.dim(x, y);
          out.action(x, y, z) =
              both * detail::middle_swap(f, da, da, m.dim(y, z), nn.dim(y, z)) *
              kron(a.comult(x, y), id(m.dim(y, z)), id(nn.dim(y, z)));
        } else {
          const std::size_t da = a.dim(y, z);
          out.action(x, y, z) =
              both * detail::middle_swap(f, m.dim(x, y), nn.dim(x, y), da, da) *
              kron(id(m.dim(x, y)), id(nn.dim(x, y)), a.comult(y, z));
        }
      }
    }
  }
  return out;
}

/// m.a = <a, m_[1,y]> m_[0,y], a right module over undualize(C). Since A_{z,y}
/// carries the dual basis of C_{y,z}, this is a reshaping of the coaction.
inline ModuleData comodule_to_module(const DualHopfCategory& c, const ComoduleData& m) {
  if (const Report r = verify_comodule(c, m); !r.passed()) {
    throw PreconditionError("comodule_to_module: input fails " + r.first_failure()->axiom);
  }
  const HopfCategory a = undualize(c);
  ModuleData out(a, Side::right, m.dims());
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        const LinMap& rho = m.coaction(x, y, z);
        LinMap& psi = out.action(x, z, y);
        const std::size_t dc = c.dim(y, z);
        for (std::size_t i = 0; i < m.dim(x, z); ++i)
          for (std::size_t j = 0; j < dc; ++j)
            for (std::size_t k = 0; k < m.dim(x, y); ++k) psi.at(k, i * dc + j) = rho(k * dc + j, i);
      }
    }
  }
  return out;
}

/// rho(m) = sum_i m a_i (x) c_i over the dual basis pair of C_{y,z}.
inline ComoduleData module_to_comodule(const DualHopfCategory& c, const ModuleData& m) {
  const HopfCategory a = undualize(c);
  if (m.side() != Side::right) throw PreconditionError("module_to_comodule needs a right module");
  if (const Report r = verify_module(a, m); !r.passed()) {
    throw PreconditionError("module_to_comodule: input fails " + r.first_failure()->axiom);
  }
  ComoduleData out(c, m.dims());
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        const LinMap& psi = m.action(x, z, y);
        LinMap& rho = out.coaction(x, y, z);
        const std::size_t dc = c.dim(y, z);
        for (std::size_t i = 0; i < m.dim(x, z); ++i)
          for (std::size_t j = 0; j < dc; ++j)
            for (std::size_t k = 0; k < m.dim(x, y); ++k) rho.at(k * dc + j, i) = psi(k, i * dc + j);
      }
    }
  }
  return out;
}

}  // namespace hopfcat
