// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// A finite group given by its multiplication table.
class Group {
 public:
  Group() = default;
  Group(std::vector<std::string> elements, std::vector<std::size_t> table)
      : elements_(std::move(elements)), table_(std::move(table)) {
    const std::size_t n = elements_.size();
    if (n == 0 || table_.size() != n * n) throw MalformedData("group table must be |G| x |G|");
    for (auto v : table_) {
      if (v >= n) throw MalformedData("group table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t c = 0; c < n && !e; ++c) {
      bool neutral = true;
      for (std::size_t s = 0; s < n; ++s) neutral = neutral && mul(c, s) == s && mul(s, c) == s;
      if (neutral) e = c;
    }
    if (!e) throw PreconditionError("group table has no identity element");
    identity_ = *e;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
          if (mul(mul(s, t), u) != mul(s, mul(t, u))) {
            throw PreconditionError("group table is not associative at (" + elements_[s] + "," +
                                    elements_[t] + "," + elements_[u] + ")");
          }
        }
      }
      std::optional<std::size_t> inv;
      for (std::size_t t = 0; t < n && !inv; ++t) {
        if (mul(s, t) == identity_ && mul(t, s) == identity_) inv = t;
      }
      if (!inv) throw PreconditionError("element " + elements_[s] + " has no inverse");
      inverse_.push_back(*inv);
    }
  }

  /// Z/n with elements e, g, g2, ..., g{n-1}.
  static Group cyclic(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    }
    return Group(std::move(names), std::move(table));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t mul(std::size_t s, std::size_t t) const { return table_.at(s * size() + t); }
  std::size_t inv(std::size_t s) const { return inverse_.at(s); }
  std::size_t identity() const noexcept { return identity_; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.elements_ == b.elements_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// A G-graded (semi-)Hopf group algebra: components A_s that are coalgebras,
/// products m_{s,t}: A_s (x) A_t -> A_{st}, unit into A_e, antipode S_s: A_s -> A_{s^-1}.
struct GradedHopf {
  Field field;
  Group group;
  std::vector<std::size_t> dims;            // per element
  std::vector<LinMap> mult;                 // index s * |G| + t
  LinMap unit;
  std::vector<LinMap> comult;               // per element
  std::vector<LinMap> counit;               // per element
  std::optional<std::vector<LinMap>> antipode;

  GradedHopf() = default;
  GradedHopf(Field f, Group g, std::vector<std::size_t> d)
      : field(f), group(std::move(g)), dims(std::move(d)) {
    const std::size_t n = group.size();
    if (dims.size() != n) throw MalformedData("one dimension per group element required");
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        mult.emplace_back(f, dims[group.mul(s, t)], dims[s] * dims[t]);
      }
      comult.emplace_back(f, dims[s] * dims[s], dims[s]);
      counit.emplace_back(f, 1, dims[s]);
    }
    unit = LinMap(f, dims[group.identity()], 1);
  }

  LinMap& m(std::size_t s, std::size_t t) { return mult.at(s * group.size() + t); }
  const LinMap& m(std::size_t s, std::size_t t) const { return mult.at(s * group.size() + t); }

  void add_antipode() {
    std::vector<LinMap> v;
    for (std::size_t s = 0; s < group.size(); ++s) v.emplace_back(field, dims[group.inv(s)], dims[s]);
    antipode = std::move(v);
  }

  friend bool operator==(const GradedHopf&, const GradedHopf&) = default;
};

/// Graded associativity and unit, coalgebra axioms per component, the products
/// and unit as coalgebra maps, and (if present) the antipode laws.
inline Report validate_graded(const GradedHopf& h) {
  const Field f = h.field;
  const Group& g = h.group;
  const std::size_t n = g.size();
  const std::size_t e = g.identity();
  auto id = [&](std::size_t d) { return LinMap::identity(f, d); };
  auto lab = [&](std::initializer_list<std::size_t> xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(g.elements()[x]);
    return out;
  };
  Report r;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t u = 0; u < n; ++u) {
        const std::size_t st = g.mul(s, t);
        const std::size_t tu = g.mul(t, u);
        r.check_equal("assoc", lab({s, t, u}), h.m(st, u) * kron(h.m(s, t), id(h.dims[u])),
                      h.m(s, tu) * kron(id(h.dims[s]), h.m(t, u)), {h.dims[s], h.dims[t], h.dims[u]});
      }
    }
    const std::size_t d = h.dims[s];
    r.check_equal("unit-left", lab({s}), h.m(e, s) * kron(h.unit, id(d)), id(d), {d});
    r.check_equal("unit-right", lab({s}), h.m(s, e) * kron(id(d), h.unit), id(d), {d});
    const LinMap& delta = h.comult[s];
    r.check_equal("coassoc", lab({s}), kron(delta, id(d)) * delta, kron(id(d), delta) * delta, {d});
    r.check_equal("counit-left", lab({s}), kron(h.counit[s], id(d)) * delta, id(d), {d});
    r.check_equal("counit-right", lab({s}), kron(id(d), h.counit[s]) * delta, id(d), {d});
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t st = g.mul(s, t);
      const std::size_t ds = h.dims[s];
      const std::size_t dt = h.dims[t];
      const LinMap& m = h.m(s, t);
      r.check_equal("comult-mult", lab({s, t}), h.comult[st] * m,
                    kron(m, m) * permute_factors(f, {ds, ds, dt, dt}, {0, 2, 1, 3}) *
                        kron(h.comult[s], h.comult[t]),
                    {ds, dt});
      r.check_equal("counit-mult", lab({s, t}), h.counit[st] * m, kron(h.counit[s], h.counit[t]),
                    {ds, dt});
    }
  }
  r.check_equal("comult-unit", lab({e}), h.comult[e] * h.unit, kron(h.unit, h.unit), {1});
  r.check_equal("counit-unit", lab({e}), h.counit[e] * h.unit, id(1), {1});
  if (h.antipode) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t si = g.inv(s);
      const std::size_t d = h.dims[s];
      const LinMap& sm = h.antipode->at(s);
      r.check_equal("antipode-right", lab({s}), h.m(s, si) * kron(id(d), sm) * h.comult[s],
                    h.unit * h.counit[s], {d});
      r.check_equal("antipode-left", lab({s}), h.m(si, s) * kron(sm, id(d)) * h.comult[s],
                    h.unit * h.counit[s], {d});
    }
  }
  return r;
}

/// K(A): objects are group elements, K(A)_{s,t} = A_{s^-1 t},
/// m_{s,r,t} = m_{s^-1 r, r^-1 t}, units eta, antipode S_{s^-1 t}.
inline HopfCategory from_graded(const GradedHopf& h) {
  const Report check = validate_graded(h);
  if (const Finding* bad = check.first_failure()) {
    std::string where;
    for (const auto& o : bad->objects) where += (where.empty() ? "" : ",") + o;
    throw PreconditionError("graded axiom " + bad->axiom + " fails at (" + where + "): " +
                            bad->detail);
  }
  const Group& g = h.group;
  const std::size_t n = g.size();
  auto quot = [&](std::size_t s, std::size_t t) { return g.mul(g.inv(s), t); };
  std::vector<std::size_t> dims(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) dims[s * n + t] = h.dims[quot(s, t)];
  }
  HopfCategory a(h.field, ObjectSet(g.elements()), dims);
  if (h.antipode) a.add_antipode();
  for (std::size_t s = 0; s < n; ++s) {
    a.unit(s) = h.unit;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t q = quot(s, t);
      a.comult(s, t) = h.comult[q];
      a.counit(s, t) = h.counit[q];
      if (h.antipode) a.antipode(s, t) = h.antipode->at(q);
      for (std::size_t u = 0; u < n; ++u) a.mult(s, t, u) = h.m(quot(s, t), quot(t, u));
    }
  }
  return a;
}

}  // namespace hopfcat
