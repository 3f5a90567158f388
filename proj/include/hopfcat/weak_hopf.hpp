// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/dual.hpp"
#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// The basis range of the summand indexed by (x,y).
struct Block {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// A finite-dimensional weak Hopf algebra with a block decomposition of its basis.
struct WeakHopf {
  Field field;
  ObjectSet objects;
  std::vector<Block> blocks;
  std::size_t total = 0;
  LinMap mult;      // total x total^2
  LinMap unit;      // total x 1
  LinMap comult;    // total^2 x total
  LinMap counit;    // 1 x total
  LinMap antipode;  // total x total

  WeakHopf() = default;
  WeakHopf(Field f, ObjectSet obs, std::vector<Block> bs) : field(f), objects(std::move(obs)), blocks(std::move(bs)) {
    for (const auto& b : blocks) total += b.length;
    mult = LinMap(f, total, total * total);
    unit = LinMap(f, total, 1);
    comult = LinMap(f, total * total, total);
    counit = LinMap(f, 1, total);
    antipode = LinMap(f, total, total);
  }

  const Block& block(std::size_t x, std::size_t y) const {
    for (const auto& b : blocks) {
      if (b.x == x && b.y == y) return b;
    }
    throw std::out_of_range("no block for the given pair");
  }

  /// Index of the block containing basis element i.
  std::size_t block_of(std::size_t i) const {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (i >= blocks[k].offset && i < blocks[k].offset + blocks[k].length) return k;
    }
    throw std::out_of_range("basis index outside every block");
  }

  std::string block_label(std::size_t k) const {
    return "(" + objects.label(blocks[k].x) + "," + objects.label(blocks[k].y) + ")";
  }

  void check_shapes() const {
    std::size_t expected = 0;
    for (const auto& b : blocks) {
      if (b.offset != expected) throw MalformedData("blocks do not tile the basis");
      if (b.x >= objects.size() || b.y >= objects.size()) throw MalformedData("block object out of range");
      expected += b.length;
    }
    if (expected != total) throw MalformedData("blocks do not cover the basis");
    auto expect = [&](const LinMap& m, std::size_t r, std::size_t c, const char* what) {
      if (m.rows() != r || m.cols() != c) throw MalformedData(std::string(what) + " has wrong shape");
    };
    expect(mult, total, total * total, "mult");
    expect(unit, total, 1, "unit");
    expect(comult, total * total, total, "comult");
    expect(counit, 1, total, "counit");
    expect(antipode, total, total, "antipode");
  }

  friend bool operator==(const WeakHopf&, const WeakHopf&) = default;
};

namespace detail {

using Sparse = std::map<std::size_t, Scalar>;

inline void accumulate(Sparse& v, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// Sparse views of the structure maps of a weak Hopf algebra.
class WeakOps {
 public:
  explicit WeakOps(const WeakHopf& w) : w_(w), n_(w.total) {
    prod_.resize(n_ * n_);
    for (std::size_t c = 0; c < n_ * n_; ++c) prod_[c] = column(w.mult, c);
    coprod_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      for (const auto& [row, v] : column(w.comult, c)) coprod_[c].push_back({row / n_, row % n_, v});
    }
    anti_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) anti_[c] = column(w.antipode, c);
    unit_ = column(w.unit, 0);
    pair_counit_.assign(n_ * n_, Scalar::zero(w.field));
    for (std::size_t c = 0; c < n_ * n_; ++c) pair_counit_[c] = counit(prod_[c]);
  }

  struct Term {
    std::size_t left;
    std::size_t right;
    Scalar coeff;
  };

  std::size_t dim() const noexcept { return n_; }
  const Sparse& product(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }
  const std::vector<Term>& coproduct(std::size_t i) const { return coprod_[i]; }
  const Sparse& antipode(std::size_t i) const { return anti_[i]; }
  const Sparse& one() const noexcept { return unit_; }
  /// eps(e_i e_j)
  const Scalar& counit_of_product(std::size_t i, std::size_t j) const {
    return pair_counit_[i * n_ + j];
  }

  Scalar counit(const Sparse& v) const {
    Scalar s = Scalar::zero(w_.field);
    for (const auto& [i, c] : v) {
      if (!w_.counit(0, i).is_zero()) s.add_product(w_.counit(0, i), c);
    }
    return s;
  }

  Sparse mul(const Sparse& a, const Sparse& b) const {
    Sparse out;
    for (const auto& [i, ca] : a) {
      for (const auto& [j, cb] : b) {
        const Scalar c = ca * cb;
        for (const auto& [k, ck] : product(i, j)) accumulate(out, k, c * ck);
      }
    }
    return out;
  }

  Sparse apply_antipode(const Sparse& a) const {
    Sparse out;
    for (const auto& [i, c] : a) {
      for (const auto& [k, ck] : antipode(i)) accumulate(out, k, c * ck);
    }
    return out;
  }

  /// Delta(v) as a sparse vector over pairs (flat index i * n + j).
  Sparse comul(const Sparse& v) const {
    Sparse out;
    for (const auto& [i, c] : v) {
      for (const auto& t : coproduct(i)) accumulate(out, t.left * n_ + t.right, c * t.coeff);
    }
    return out;
  }

  static Sparse basis(const Field& f, std::size_t i) { return Sparse{{i, Scalar::one(f)}}; }

 private:
  static Sparse column(const LinMap& m, std::size_t c) {
    Sparse v;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) v.emplace(r, m(r, c));
    }
    return v;
  }

  const WeakHopf& w_;
  std::size_t n_;
  std::vector<Sparse> prod_;
  std::vector<std::vector<Term>> coprod_;
  std::vector<Sparse> anti_;
  Sparse unit_;
  std::vector<Scalar> pair_counit_;
};

inline void compare_sparse(Check& check, std::size_t flat, const Sparse& lhs, const Sparse& rhs) {
  Sparse diff = lhs;
  for (const auto& [i, c] : rhs) accumulate(diff, i, -c);
  if (diff.empty()) return;
  std::string residual;
  for (const auto& [i, c] : diff) {
    if (!residual.empty()) residual += ", ";
    residual += "[" + std::to_string(i) + "]=" + c.to_string();
  }
  check.mismatch(flat, "residual " + residual);
}

/// Product in A^{(x)3} of sparse tensors indexed by flat (i*n + j)*n + k.
inline Sparse mul3(const WeakOps& ops, const Sparse& a, const Sparse& b) {
  const std::size_t n = ops.dim();
  Sparse out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [ib, cb] : b) {
      const Scalar c = ca * cb;
      const Sparse& p0 = ops.product(ia / (n * n), ib / (n * n));
      const Sparse& p1 = ops.product(ia / n % n, ib / n % n);
      const Sparse& p2 = ops.product(ia % n, ib % n);
      for (const auto& [k0, c0] : p0) {
        for (const auto& [k1, c1] : p1) {
          for (const auto& [k2, c2] : p2) accumulate(out, (k0 * n + k1) * n + k2, c * c0 * c1 * c2);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// eps_t(h) = eps(1_(1) h) 1_(2)
inline LinMap counital_target(const WeakHopf& w) {
  const detail::WeakOps ops(w);
  const std::size_t n = w.total;
  LinMap out(w.field, n, n);
  const auto delta1 = ops.comul(ops.one());
  for (std::size_t h = 0; h < n; ++h) {
    for (const auto& [flat, c] : delta1) {
      const Scalar& e = ops.counit_of_product(flat / n, h);
      if (!e.is_zero()) out.at(flat % n, h) += c * e;
    }
  }
  return out;
}

/// eps_s(h) = 1_(1) eps(h 1_(2))
inline LinMap counital_source(const WeakHopf& w) {
  const detail::WeakOps ops(w);
  const std::size_t n = w.total;
  LinMap out(w.field, n, n);
  const auto delta1 = ops.comul(ops.one());
  for (std::size_t h = 0; h < n; ++h) {
    for (const auto& [flat, c] : delta1) {
      const Scalar& e = ops.counit_of_product(h, flat % n);
      if (!e.is_zero()) out.at(flat / n, h) += c * e;
    }
  }
  return out;
}

inline Report verify_weak_hopf(const WeakHopf& w, unsigned audit_seed = 42) {
  using detail::Sparse;
  w.check_shapes();
  const Field f = w.field;
  const std::size_t n = w.total;
  const detail::WeakOps ops(w);
  auto e = [&](std::size_t i) { return detail::WeakOps::basis(f, i); };
  Report r;

  {
    Check assoc("assoc", {}, {n, n, n});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          detail::compare_sparse(assoc, (i * n + j) * n + k, ops.mul(ops.product(i, j), e(k)),
                                 ops.mul(e(i), ops.product(j, k)));
        }
      }
    }
    assoc.finish(r);
    Check left("unit-left", {}, {n});
    Check right("unit-right", {}, {n});
    for (std::size_t i = 0; i < n; ++i) {
      detail::compare_sparse(left, i, ops.mul(ops.one(), e(i)), e(i));
      detail::compare_sparse(right, i, ops.mul(e(i), ops.one()), e(i));
    }
    left.finish(r);
    right.finish(r);
  }

  {
    Check coassoc("coassoc", {}, {n});
    Check cl("counit-left", {}, {n});
    Check cr("counit-right", {}, {n});
    for (std::size_t h = 0; h < n; ++h) {
      Sparse lhs, rhs, left, right;
      for (const auto& t : ops.coproduct(h)) {
        for (const auto& u : ops.coproduct(t.left)) {
          detail::accumulate(lhs, (u.left * n + u.right) * n + t.right, t.coeff * u.coeff);
        }
        for (const auto& u : ops.coproduct(t.right)) {
          detail::accumulate(rhs, (t.left * n + u.left) * n + u.right, t.coeff * u.coeff);
        }
        detail::accumulate(left, t.right, t.coeff * w.counit(0, t.left));
        detail::accumulate(right, t.left, t.coeff * w.counit(0, t.right));
      }
      detail::compare_sparse(coassoc, h, lhs, rhs);
      detail::compare_sparse(cl, h, left, e(h));
      detail::compare_sparse(cr, h, right, e(h));
    }
    coassoc.finish(r);
    cl.finish(r);
    cr.finish(r);
  }

  {
    Check mult("comult-mult", {}, {n, n});
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < n; ++k) {
        Sparse rhs;
        for (const auto& a : ops.coproduct(h)) {
          for (const auto& b : ops.coproduct(k)) {
            const Scalar c = a.coeff * b.coeff;
            for (const auto& [p, cp] : ops.product(a.left, b.left)) {
              for (const auto& [q, cq] : ops.product(a.right, b.right)) {
                detail::accumulate(rhs, p * n + q, c * cp * cq);
              }
            }
          }
        }
        detail::compare_sparse(mult, h * n + k, ops.comul(ops.product(h, k)), rhs);
      }
    }
    mult.finish(r);
  }

  {
    // Compatible block pairs are those with a nonzero product somewhere.
    const std::size_t nb = w.blocks.size();
    std::vector<bool> compatible(nb * nb, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!ops.product(i, j).empty()) compatible[w.block_of(i) * nb + w.block_of(j)] = true;
      }
    }
    auto eps_hkl = [&](std::size_t h, std::size_t k, std::size_t l) {
      Scalar s = Scalar::zero(f);
      for (const auto& [a, c] : ops.product(h, k)) s.add_product(c, ops.counit_of_product(a, l));
      return s;
    };
    auto split = [&](std::size_t h, std::size_t k, std::size_t l, bool swapped) {
      Scalar s = Scalar::zero(f);
      for (const auto& t : ops.coproduct(k)) {
        const std::size_t first = swapped ? t.right : t.left;
        const std::size_t second = swapped ? t.left : t.right;
        const Scalar& a = ops.counit_of_product(h, first);
        if (a.is_zero()) continue;
        s.add_product(t.coeff * a, ops.counit_of_product(second, l));
      }
      return s;
    };
    auto test = [&](Check& c1, Check& c2, std::size_t h, std::size_t k, std::size_t l) {
      const Scalar lhs = eps_hkl(h, k, l);
      const std::size_t flat = (h * n + k) * n + l;
      const Scalar r1 = split(h, k, l, false);
      const Scalar r2 = split(h, k, l, true);
      if (!(lhs == r1)) c1.mismatch(flat, "residual " + (lhs - r1).to_string());
      if (!(lhs == r2)) c2.mismatch(flat, "residual " + (lhs - r2).to_string());
    };
    Check c1("weak-counit-first", {}, {n, n, n});
    Check c2("weak-counit-second", {}, {n, n, n});
    std::vector<std::array<std::size_t, 3>> cross;
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t bh = w.block_of(h), bk = w.block_of(k), bl = w.block_of(l);
          if (compatible[bh * nb + bk] && compatible[bk * nb + bl]) {
            test(c1, c2, h, k, l);
          } else {
            cross.push_back({h, k, l});
          }
        }
      }
    }
    c1.finish(r);
    c2.finish(r);
    Check audit("weak-counit-audit", {}, {n, n, n});
    std::mt19937 rng(audit_seed);
    std::size_t audited = 0;
    for (; audited < 100 && !cross.empty(); ++audited) {
      const auto t = cross[std::uniform_int_distribution<std::size_t>(0, cross.size() - 1)(rng)];
      test(audit, audit, t[0], t[1], t[2]);
    }
    audit.describe(std::to_string(audited) + " sampled cross-block triples");
    audit.finish(r);
  }

  {
    const Sparse delta1 = ops.comul(ops.one());
    Sparse lhs;
    for (const auto& [flat, c] : delta1) {
      for (const auto& t : ops.coproduct(flat / n)) {
        detail::accumulate(lhs, (t.left * n + t.right) * n + flat % n, c * t.coeff);
      }
    }
    Sparse d1_one, one_d1;
    for (const auto& [flat, c] : delta1) {
      for (const auto& [u, cu] : ops.one()) {
        detail::accumulate(d1_one, flat * n + u, c * cu);
        detail::accumulate(one_d1, u * n * n + flat, c * cu);
      }
    }
    Check u1("weak-unit-first", {}, {1});
    Check u2("weak-unit-second", {}, {1});
    detail::compare_sparse(u1, 0, lhs, detail::mul3(ops, d1_one, one_d1));
    detail::compare_sparse(u2, 0, lhs, detail::mul3(ops, one_d1, d1_one));
    u1.finish(r);
    u2.finish(r);
  }

  {
    const LinMap et = counital_target(w);
    const LinMap es = counital_source(w);
    Check t("antipode-target", {}, {n});
    Check s("antipode-source", {}, {n});
    Check sandwich("antipode-sandwich", {}, {n});
    for (std::size_t h = 0; h < n; ++h) {
      Sparse lhs_t, lhs_s, lhs_3;
      for (const auto& a : ops.coproduct(h)) {
        const Sparse sr = ops.apply_antipode(e(a.right));
        const Sparse sl = ops.apply_antipode(e(a.left));
        for (const auto& [k, c] : ops.mul(e(a.left), sr)) detail::accumulate(lhs_t, k, a.coeff * c);
        for (const auto& [k, c] : ops.mul(sl, e(a.right))) detail::accumulate(lhs_s, k, a.coeff * c);
        for (const auto& b : ops.coproduct(a.right)) {
          const Sparse mid = ops.mul(sl, e(b.left));
          const Sparse v = ops.mul(mid, ops.apply_antipode(e(b.right)));
          for (const auto& [k, c] : v) detail::accumulate(lhs_3, k, a.coeff * b.coeff * c);
        }
      }
      Sparse rt, rs;
      for (std::size_t i = 0; i < n; ++i) {
        detail::accumulate(rt, i, et(i, h));
        detail::accumulate(rs, i, es(i, h));
      }
      detail::compare_sparse(t, h, lhs_t, rt);
      detail::compare_sparse(s, h, lhs_s, rs);
      detail::compare_sparse(sandwich, h, lhs_3, ops.antipode(h));
    }
    t.finish(r);
    s.finish(r);
    sandwich.finish(r);
  }
  return r;
}

/// A = (+)_{x,y} A_{x,y}; products of non-composable blocks vanish.
inline WeakHopf pack(const HopfCategory& a) {
  a.check_shapes();
  if (!a.has_antipode()) throw MissingAntipode("pack requires an antipode");
  const std::size_t n = a.size();
  std::vector<Block> blocks;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      blocks.push_back({x, y, offset, a.dim(x, y)});
      offset += a.dim(x, y);
    }
  }
  WeakHopf w(a.field(), a.objects(), blocks);
  const std::size_t t = w.total;
  for (std::size_t x = 0; x < n; ++x) {
    const Block& bxx = w.block(x, x);
    for (std::size_t i = 0; i < bxx.length; ++i) w.unit.at(bxx.offset + i, 0) = a.unit(x)(i, 0);
    for (std::size_t y = 0; y < n; ++y) {
      const Block& b = w.block(x, y);
      const Block& bt = w.block(y, x);
      for (std::size_t i = 0; i < b.length; ++i) {
        w.counit.at(0, b.offset + i) = a.counit(x, y)(0, i);
        for (std::size_t j = 0; j < b.length; ++j) {
          for (std::size_t k = 0; k < b.length; ++k) {
            w.comult.at((b.offset + j) * t + b.offset + k, b.offset + i) =
                a.comult(x, y)(j * b.length + k, i);
          }
        }
        for (std::size_t j = 0; j < bt.length; ++j) {
          w.antipode.at(bt.offset + j, b.offset + i) = a.antipode(x, y)(j, i);
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        const Block& b2 = w.block(y, z);
        const Block& out = w.block(x, z);
        for (std::size_t i = 0; i < b.length; ++i) {
          for (std::size_t j = 0; j < b2.length; ++j) {
            for (std::size_t k = 0; k < out.length; ++k) {
              w.mult.at(out.offset + k, (b.offset + i) * t + b2.offset + j) =
                  a.mult(x, y, z)(k, i * b2.length + j);
            }
          }
        }
      }
    }
  }
  return w;
}

/// C = (+)_{x,y} C_{x,y} as a product of algebras; Delta(h) = sum_y Delta_{x,y,z}(h),
/// eps is eps_x on C_{x,x} and zero elsewhere, S on C_{x,y} is S_{y,x}.
inline WeakHopf pack_dual(const DualHopfCategory& c) {
  c.check_shapes();
  if (!c.has_antipode()) throw MissingAntipode("pack-dual requires an antipode");
  const std::size_t n = c.size();
  std::vector<Block> blocks;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      blocks.push_back({x, y, offset, c.dim(x, y)});
      offset += c.dim(x, y);
    }
  }
  WeakHopf w(c.field(), c.objects(), blocks);
  const std::size_t t = w.total;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Block& b = w.block(x, y);
      const Block& bt = w.block(y, x);
      const std::size_t d = b.length;
      for (std::size_t i = 0; i < d; ++i) {
        w.unit.at(b.offset + i, 0) = c.unit(x, y)(i, 0);
        if (x == y) w.counit.at(0, b.offset + i) = c.counit(x)(0, i);
        for (std::size_t j = 0; j < bt.length; ++j) {
          w.antipode.at(bt.offset + j, b.offset + i) = c.antipode(y, x)(j, i);
        }
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            w.mult.at(b.offset + k, (b.offset + i) * t + b.offset + j) = c.mult(x, y)(k, i * d + j);
          }
        }
      }
      // h in C_{x,z} with z := y here; sum over the middle object u.
      for (std::size_t u = 0; u < n; ++u) {
        const Block& l = w.block(x, u);
        const Block& r = w.block(u, y);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t p = 0; p < l.length; ++p) {
            for (std::size_t q = 0; q < r.length; ++q) {
              w.comult.at((l.offset + p) * t + r.offset + q, b.offset + i) =
                  c.cocomp(x, u, y)(p * r.length + q, i);
            }
          }
        }
      }
    }
  }
  return w;
}

/// Products of block (x,y) with block (z,u) lie in block (x,u) if y = z and
/// vanish otherwise.
inline Report check_block_composition(const WeakHopf& w) {
  Report r;
  const std::size_t t = w.total;
  for (std::size_t b1 = 0; b1 < w.blocks.size(); ++b1) {
    for (std::size_t b2 = 0; b2 < w.blocks.size(); ++b2) {
      const Block& p = w.blocks[b1];
      const Block& q = w.blocks[b2];
      std::string problem;
      for (std::size_t i = p.offset; i < p.offset + p.length && problem.empty(); ++i) {
        for (std::size_t j = q.offset; j < q.offset + q.length && problem.empty(); ++j) {
          for (std::size_t k = 0; k < t; ++k) {
            if (w.mult(k, i * t + j).is_zero()) continue;
            const Block& out = w.blocks[w.block_of(k)];
            if (p.y != q.x || out.x != p.x || out.y != q.y) {
              problem = "product of basis " + std::to_string(i) + " and " + std::to_string(j) +
                        " has a component in block " + w.block_label(w.block_of(k));
              break;
            }
          }
        }
      }
      r.expect(problem.empty(), "block-composition",
               {w.block_label(b1), w.block_label(b2)}, problem);
    }
  }
  return r;
}

}  // namespace hopfcat
