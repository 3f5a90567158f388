// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"
#include "hopfcat/verify.hpp"

namespace hopfcat {

/// A family of finite-dimensional spaces M_{x,y}, given by dimensions.
struct MkXObject {
  ObjectSet objects;
  std::vector<std::size_t> dims;  // row-major over pairs

  MkXObject() = default;
  MkXObject(ObjectSet ob, std::vector<std::size_t> d) : objects(std::move(ob)), dims(std::move(d)) {
    if (dims.size() != objects.size() * objects.size()) {
      throw MalformedData("object family needs |X|^2 dimensions");
    }
  }

  std::size_t size() const noexcept { return objects.size(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return dims.at(x * size() + y); }
  friend bool operator==(const MkXObject&, const MkXObject&) = default;
};

/// A morphism in M_k(X): one linear map per pair, indexed x*|X| + y.
using Family = std::vector<LinMap>;

namespace duoidal {

inline void same_objects(const MkXObject& m, const MkXObject& n) {
  if (!(m.objects == n.objects)) throw PreconditionError("object families live over different object sets");
}

}  // namespace duoidal

/// (M (.) N)_{x,z} = sum_y M_{x,y} (x) N_{y,z}, summands in object order.
inline MkXObject white_tensor(const MkXObject& m, const MkXObject& n) {
  duoidal::same_objects(m, n);
  const std::size_t k = m.size();
  std::vector<std::size_t> dims(k * k, 0);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t z = 0; z < k; ++z)
      for (std::size_t y = 0; y < k; ++y) dims[x * k + z] += m.dim(x, y) * n.dim(y, z);
  return {m.objects, dims};
}

/// (M * N)_{x,y} = M_{x,y} (x) N_{x,y}.
inline MkXObject black_tensor(const MkXObject& m, const MkXObject& n) {
  duoidal::same_objects(m, n);
  const std::size_t k = m.size();
  std::vector<std::size_t> dims(k * k);
  for (std::size_t i = 0; i < k * k; ++i) dims[i] = m.dims[i] * n.dims[i];
  return {m.objects, dims};
}

/// Offset of the summand M_{x,y} (x) N_{y,z} inside (M (.) N)_{x,z}.
inline std::size_t white_offset(const MkXObject& m, const MkXObject& n, std::size_t x, std::size_t z,
                                std::size_t y) {
  std::size_t off = 0;
  for (std::size_t u = 0; u < y; ++u) off += m.dim(x, u) * n.dim(u, z);
  return off;
}

/// Unit of the white tensor: I_{x,y} = k if x = y, else 0.
inline MkXObject unit_i(const ObjectSet& ob) {
  const std::size_t k = ob.size();
  std::vector<std::size_t> dims(k * k, 0);
  for (std::size_t x = 0; x < k; ++x) dims[x * k + x] = 1;
  return {ob, dims};
}

/// Unit of the black tensor: J_{x,y} = k.
inline MkXObject unit_j(const ObjectSet& ob) {
  return {ob, std::vector<std::size_t>(ob.size() * ob.size(), 1)};
}

inline Family identity_family(Field f, const MkXObject& m) {
  Family out;
  for (auto d : m.dims) out.push_back(LinMap::identity(f, d));
  return out;
}

inline Family compose(const Family& g, const Family& h) {
  if (g.size() != h.size()) throw MalformedData("families of different sizes");
  Family out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g[i] * h[i]);
  return out;
}

/// f (.) g, block diagonal over the summands; the families' shapes give the
/// dimensions of domain and codomain.
inline Family white_map(Field f, std::size_t k, const Family& a, const Family& b) {
  Family out;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t z = 0; z < k; ++z) {
      std::size_t rows = 0, cols = 0;
      for (std::size_t y = 0; y < k; ++y) {
        rows += a[x * k + y].rows() * b[y * k + z].rows();
        cols += a[x * k + y].cols() * b[y * k + z].cols();
      }
      LinMap block(f, rows, cols);
      std::size_t r = 0, c = 0;
      for (std::size_t y = 0; y < k; ++y) {
        const LinMap piece = kron(a[x * k + y], b[y * k + z]);
        place(block, piece, r, c);
        r += piece.rows();
        c += piece.cols();
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

inline Family black_map(const Family& a, const Family& b) {
  if (a.size() != b.size()) throw MalformedData("families of different sizes");
  Family out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(kron(a[i], b[i]));
  return out;
}

/// ((M (.) N) (.) P) -> (M (.) (N (.) P)), a permutation of summands.
inline Family white_associator(Field f, const MkXObject& m, const MkXObject& n, const MkXObject& p) {
  const MkXObject mn = white_tensor(m, n);
  const MkXObject np = white_tensor(n, p);
  const MkXObject src = white_tensor(mn, p);
  const std::size_t k = m.size();
  Family out;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t w = 0; w < k; ++w) {
      LinMap block(f, src.dim(x, w), src.dim(x, w));
      for (std::size_t z = 0; z < k; ++z) {
        for (std::size_t y = 0; y < k; ++y) {
          const std::size_t dm = m.dim(x, y), dn = n.dim(y, z), dp = p.dim(z, w);
          const std::size_t s0 = white_offset(mn, p, x, w, z) + white_offset(m, n, x, z, y) * dp;
          const std::size_t t0 = white_offset(m, np, x, w, y);
          for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j)
              for (std::size_t l = 0; l < dp; ++l) {
                const std::size_t s = s0 + (i * dn + j) * dp + l;
                const std::size_t t = t0 + i * np.dim(y, w) + white_offset(n, p, y, w, z) + j * dp + l;
                block.at(t, s) = Scalar::one(f);
              }
        }
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

/// zeta: (M * N) (.) (P * Q) -> (M (.) P) * (N (.) Q): swap the middle factors
/// of the z-th summand and include it as the (u, v) = (z, z) summand.
inline Family zeta(Field f, const MkXObject& m, const MkXObject& n, const MkXObject& p, const MkXObject& q) {
  const MkXObject mn = black_tensor(m, n);
  const MkXObject pq = black_tensor(p, q);
  const MkXObject src = white_tensor(mn, pq);
  const MkXObject mp = white_tensor(m, p);
  const MkXObject nq = white_tensor(n, q);
  const std::size_t k = m.size();
  Family out;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      LinMap block(f, mp.dim(x, y) * nq.dim(x, y), src.dim(x, y));
      for (std::size_t z = 0; z < k; ++z) {
        const std::size_t dm = m.dim(x, z), dn = n.dim(x, z), dp = p.dim(z, y), dq = q.dim(z, y);
        const std::size_t s0 = white_offset(mn, pq, x, y, z);
        const std::size_t u0 = white_offset(m, p, x, y, z);
        const std::size_t v0 = white_offset(n, q, x, y, z);
        for (std::size_t a = 0; a < dm; ++a)
          for (std::size_t b = 0; b < dn; ++b)
            for (std::size_t c = 0; c < dp; ++c)
              for (std::size_t d = 0; d < dq; ++d) {
                const std::size_t s = s0 + ((a * dn + b) * dp + c) * dq + d;
                const std::size_t t = (u0 + a * dp + c) * nq.dim(x, y) + v0 + b * dq + d;
                block.at(t, s) = Scalar::one(f);
              }
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

/// varpi: J (.) J -> J, summing the |X| summands.
inline Family varpi(Field f, const ObjectSet& ob) {
  const std::size_t k = ob.size();
  Family out;
  for (std::size_t i = 0; i < k * k; ++i) {
    LinMap row(f, 1, k);
    for (std::size_t z = 0; z < k; ++z) row.at(0, z) = Scalar::one(f);
    out.push_back(std::move(row));
  }
  return out;
}

/// tau: I -> J, the inclusion.
inline Family tau(Field f, const ObjectSet& ob) {
  const std::size_t k = ob.size();
  Family out;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) out.push_back(x == y ? LinMap::identity(f, 1) : LinMap(f, 1, 0));
  return out;
}

/// delta: I -> I * I = I, the identity.
inline Family delta_i(Field f, const ObjectSet& ob) { return identity_family(f, unit_i(ob)); }

namespace duoidal {

inline void compare_families(Report& r, const std::string& axiom, const ObjectSet& ob, const Family& lhs,
                             const Family& rhs) {
  const std::size_t k = ob.size();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const LinMap& l = lhs[x * k + y];
      r.check_equal(axiom, ob.tuple({x, y}), l, rhs[x * k + y], {l.cols()});
    }
  }
}

}  // namespace duoidal

/// The structure maps varpi, tau, delta: J is a white monoid, I a black comonoid,
/// and (varpi * varpi) zeta_{J,J,J,J} = varpi.
inline Report check_duoidal_structure(Field f, const ObjectSet& ob) {
  const MkXObject i = unit_i(ob), j = unit_j(ob);
  const std::size_t k = ob.size();
  const Family w = varpi(f, ob), t = tau(f, ob), d = delta_i(f, ob);
  const Family id_j = identity_family(f, j), id_i = identity_family(f, i);
  Report r;
  duoidal::compare_families(r, "varpi-assoc", ob, compose(w, white_map(f, k, w, id_j)),
                            compose(compose(w, white_map(f, k, id_j, w)), white_associator(f, j, j, j)));
  duoidal::compare_families(r, "varpi-unit-left", ob, compose(w, white_map(f, k, t, id_j)), id_j);
  duoidal::compare_families(r, "varpi-unit-right", ob, compose(w, white_map(f, k, id_j, t)), id_j);
  duoidal::compare_families(r, "delta-coassoc", ob, compose(black_map(d, id_i), d),
                            compose(black_map(id_i, d), d));
  duoidal::compare_families(r, "delta-counit-left", ob, compose(black_map(t, id_i), d), id_i);
  duoidal::compare_families(r, "delta-counit-right", ob, compose(black_map(id_i, t), d), id_i);
  duoidal::compare_families(r, "zeta-varpi", ob, compose(black_map(w, w), zeta(f, j, j, j, j)), w);
  return r;
}

/// A monoid in (M_k(X), (.), I) and comonoid in (M_k(X), *, J) on one carrier:
///   mu(x,y):    (A (.) A)_{x,y} -> A_{x,y}
///   eta(x,y):   I_{x,y} -> A_{x,y}
///   delta(x,y): A_{x,y} -> A_{x,y} (x) A_{x,y}
///   eps(x,y):   A_{x,y} -> k
struct BimonoidData {
  Field field;
  MkXObject carrier;
  Family mu, eta, delta, eps;

  void check_shapes() const {
    const std::size_t k = carrier.size();
    const MkXObject aa = white_tensor(carrier, carrier);
    const MkXObject i = unit_i(carrier.objects);
    if (mu.size() != k * k || eta.size() != k * k || delta.size() != k * k || eps.size() != k * k) {
      throw MalformedData("bimonoid needs one map per pair for mu, eta, delta and eps");
    }
    for (std::size_t p = 0; p < k * k; ++p) {
      const std::size_t d = carrier.dims[p];
      auto want = [](const LinMap& m, std::size_t r, std::size_t c, const char* what) {
        if (m.rows() != r || m.cols() != c) {
          throw MalformedData(std::string("bimonoid ") + what + " has shape " + m.shape());
        }
      };
      want(mu[p], d, aa.dims[p], "mu");
      want(eta[p], d, i.dims[p], "eta");
      want(delta[p], d * d, d, "delta");
      want(eps[p], 1, d, "eps");
    }
  }

  friend bool operator==(const BimonoidData&, const BimonoidData&) = default;
};

/// Monoid and comonoid laws and the four compatibility identities.
inline Report verify_bimonoid(const BimonoidData& b) {
  b.check_shapes();
  const Field f = b.field;
  const MkXObject& a = b.carrier;
  const ObjectSet& ob = a.objects;
  const std::size_t k = a.size();
  const MkXObject i = unit_i(ob), j = unit_j(ob);
  const Family id_a = identity_family(f, a);
  Report r;
  duoidal::compare_families(r, "monoid-assoc", ob, compose(b.mu, white_map(f, k, b.mu, id_a)),
                            compose(compose(b.mu, white_map(f, k, id_a, b.mu)), white_associator(f, a, a, a)));
  // I (.) A and A (.) I have the same flattening as A.
  duoidal::compare_families(r, "monoid-unit-left", ob, compose(b.mu, white_map(f, k, b.eta, id_a)), id_a);
  duoidal::compare_families(r, "monoid-unit-right", ob, compose(b.mu, white_map(f, k, id_a, b.eta)), id_a);
  duoidal::compare_families(r, "comonoid-coassoc", ob, compose(black_map(b.delta, id_a), b.delta),
                            compose(black_map(id_a, b.delta), b.delta));
  duoidal::compare_families(r, "comonoid-counit-left", ob, compose(black_map(b.eps, id_a), b.delta), id_a);
  duoidal::compare_families(r, "comonoid-counit-right", ob, compose(black_map(id_a, b.eps), b.delta), id_a);
  duoidal::compare_families(
      r, "bimonoid-comult", ob, compose(b.delta, b.mu),
      compose(compose(black_map(b.mu, b.mu), zeta(f, a, a, a, a)), white_map(f, k, b.delta, b.delta)));
  duoidal::compare_families(r, "bimonoid-counit", ob, compose(varpi(f, ob), white_map(f, k, b.eps, b.eps)),
                            compose(b.eps, b.mu));
  duoidal::compare_families(r, "bimonoid-unit", ob, compose(black_map(b.eta, b.eta), delta_i(f, ob)),
                            compose(b.delta, b.eta));
  duoidal::compare_families(r, "bimonoid-unit-counit", ob, compose(b.eps, b.eta), tau(f, ob));
  return r;
}

/// mu_{x,y} = sum_u m_{x,u,y}, eta_{x,x} = eta_x and eta_{x,y} = 0 otherwise;
/// Delta and eps unchanged. The antipode, if any, is dropped.
inline BimonoidData bimonoid_from_category(const HopfCategory& a) {
  a.check_shapes();
  const Field f = a.field();
  const std::size_t k = a.size();
  BimonoidData b{f, MkXObject(a.objects(), a.dims()), {}, {}, {}, {}};
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<LinMap> blocks;
      for (std::size_t u = 0; u < k; ++u) blocks.push_back(a.mult(x, u, y));
      b.mu.push_back(hstack(f, a.dim(x, y), blocks));
      b.eta.push_back(x == y ? a.unit(x) : LinMap(f, a.dim(x, y), 0));
      b.delta.push_back(a.comult(x, y));
      b.eps.push_back(a.counit(x, y));
    }
  }
  return b;
}

/// m_{x,z,y} = mu_{x,y} i_z and eta_x = eta_{x,x}. With `checked`, the input must
/// pass verify_bimonoid.
inline HopfCategory category_from_bimonoid(const BimonoidData& b, bool checked = true) {
  b.check_shapes();
  if (checked) {
    if (const Report r = verify_bimonoid(b); !r.passed()) {
      throw PreconditionError("category_from_bimonoid: input fails " + r.first_failure()->axiom);
    }
  }
  const MkXObject& c = b.carrier;
  const std::size_t k = c.size();
  HopfCategory a(b.field, c.objects, c.dims);
  for (std::size_t x = 0; x < k; ++x) {
    a.unit(x) = b.eta[x * k + x];
    for (std::size_t y = 0; y < k; ++y) {
      a.comult(x, y) = b.delta[x * k + y];
      a.counit(x, y) = b.eps[x * k + y];
      for (std::size_t z = 0; z < k; ++z) {
        a.mult(x, z, y) = submatrix(b.mu[x * k + y], 0, white_offset(c, c, x, y, z), c.dim(x, y),
                                    c.dim(x, z) * c.dim(z, y));
      }
    }
  }
  return a;
}

/// Category axiom id -> the bimonoid axiom it becomes under the correspondence.
inline const std::map<std::string, std::string>& bimonoid_axiom_map() {
  static const std::map<std::string, std::string> m = {
      {"assoc", "monoid-assoc"},
      {"unit-left", "monoid-unit-left"},
      {"unit-right", "monoid-unit-right"},
      {"coassoc", "comonoid-coassoc"},
      {"counit-left", "comonoid-counit-left"},
      {"counit-right", "comonoid-counit-right"},
      {"comult-mult", "bimonoid-comult"},
      {"counit-mult", "bimonoid-counit"},
      {"comult-unit", "bimonoid-unit"},
      {"counit-unit", "bimonoid-unit-counit"},
  };
  return m;
}

}  // namespace hopfcat
