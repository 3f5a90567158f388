// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// A finite groupoid given by explicit tables. comp(g, h) is "g after h" and is
/// defined when target(h) == source(g).
struct Groupoid {
  struct Morphism {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
  };

  ObjectSet objects;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> identity;                            // per object
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
  std::map<std::size_t, std::size_t> inverse;                   // may be partial

  std::optional<std::size_t> comp(std::size_t g, std::size_t h) const {
    auto it = compose.find({g, h});
    if (it == compose.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find(const std::string& id) const {
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
      if (morphisms[i].id == id) return i;
    }
    return std::nullopt;
  }

  /// Morphisms y -> x in declaration order; this is the basis of A_{x,y}.
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
      if (morphisms[i].target == x && morphisms[i].source == y) out.push_back(i);
    }
    return out;
  }

  /// Position of morphism g within its hom basis.
  std::size_t local_index(std::size_t g) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (morphisms[i].source == morphisms[g].source && morphisms[i].target == morphisms[g].target) {
        ++k;
      }
    }
    return k;
  }
};

/// The unique two-sided inverse of g, found by search when the table omits it.
inline std::optional<std::size_t> find_inverse(const Groupoid& g, std::size_t m) {
  if (auto it = g.inverse.find(m); it != g.inverse.end()) return it->second;
  const auto& mm = g.morphisms[m];
  for (std::size_t h = 0; h < g.morphisms.size(); ++h) {
    if (g.comp(m, h) == g.identity[mm.target] && g.comp(h, m) == g.identity[mm.source]) return h;
  }
  return std::nullopt;
}

/// Exhaustive check of composition closure, identities, associativity and inverses.
inline Report validate_groupoid(const Groupoid& g) {
  Report r;
  const std::size_t n = g.objects.size();
  const std::size_t count = g.morphisms.size();
  auto id_of = [&](std::size_t m) { return std::vector<std::string>{g.morphisms[m].id}; };
  if (g.identity.size() != n) {
    r.fail("identity", {}, "every object needs exactly one identity");
    return r;
  }
  for (const auto& m : g.morphisms) {
    if (m.source >= n || m.target >= n) {
      r.fail("morphism", {m.id}, "endpoint out of range");
      return r;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t e = g.identity[x];
    if (e >= count || g.morphisms[e].source != x || g.morphisms[e].target != x) {
      r.fail("identity", g.objects.tuple({x}), "identity is not an endomorphism of its object");
      return r;
    }
  }
  bool closed = true;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const bool composable = g.morphisms[b].target == g.morphisms[a].source;
      const auto c = g.comp(a, b);
      std::string problem;
      if (composable && !c) problem = "composite missing";
      if (!composable && c) problem = "composite of non-composable pair";
      if (composable && c &&
          (*c >= count || g.morphisms[*c].source != g.morphisms[b].source ||
           g.morphisms[*c].target != g.morphisms[a].target)) {
        problem = "composite has wrong endpoints";
      }
      if (!problem.empty()) {
        r.fail("composition", {g.morphisms[a].id, g.morphisms[b].id}, problem);
        closed = false;
      }
    }
  }
  if (!closed) return r;
  for (std::size_t m = 0; m < count; ++m) {
    const auto& mm = g.morphisms[m];
    const bool ok = g.comp(g.identity[mm.target], m) == m && g.comp(m, g.identity[mm.source]) == m;
    r.expect(ok, "identity-law", id_of(m), ok ? "" : "identity is not neutral");
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (g.morphisms[b].target != g.morphisms[a].source) continue;
      for (std::size_t c = 0; c < count; ++c) {
        if (g.morphisms[c].target != g.morphisms[b].source) continue;
        if (g.comp(*g.comp(a, b), c) != g.comp(a, *g.comp(b, c))) {
          r.fail("assoc", {g.morphisms[a].id, g.morphisms[b].id, g.morphisms[c].id},
                 "composition is not associative");
        }
      }
    }
  }
  for (std::size_t m = 0; m < count; ++m) {
    const auto inv = find_inverse(g, m);
    bool ok = inv.has_value();
    if (ok) {
      const auto& mm = g.morphisms[m];
      ok = *inv < count && g.comp(m, *inv) == g.identity[mm.target] &&
           g.comp(*inv, m) == g.identity[mm.source];
    }
    r.expect(ok, "inverse", id_of(m), ok ? "" : "no two-sided inverse");
  }
  return r;
}

/// A_{x,y} = k G_{x,y}; composition linearized, Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}.
inline HopfCategory linearize_groupoid(const Groupoid& g, Field f) {
  const Report check = validate_groupoid(g);
  if (const Finding* bad = check.first_failure()) {
    std::string where;
    for (const auto& o : bad->objects) where += (where.empty() ? "" : ",") + o;
    throw PreconditionError("not a groupoid: " + bad->axiom + " at " + where +
                            (bad->detail.empty() ? "" : ": " + bad->detail));
  }
  const std::size_t n = g.objects.size();
  std::vector<std::size_t> dims(n * n, 0);
  for (const auto& m : g.morphisms) ++dims[m.target * n + m.source];
  HopfCategory a(f, g.objects, dims);
  a.add_antipode();
  const Scalar one = Scalar::one(f);
  for (std::size_t m = 0; m < g.morphisms.size(); ++m) {
    const std::size_t x = g.morphisms[m].target;
    const std::size_t y = g.morphisms[m].source;
    const std::size_t i = g.local_index(m);
    set_comult(a, x, y, i, i, i, one);
    a.counit(x, y).at(0, i) = one;
    const std::size_t inv = *find_inverse(g, m);
    a.antipode(x, y).at(g.local_index(inv), i) = one;
    if (m == g.identity[x]) a.unit(x).at(i, 0) = one;
  }
  for (const auto& [key, c] : g.compose) {
    const auto [gm, hm] = key;
    const std::size_t x = g.morphisms[gm].target;
    const std::size_t y = g.morphisms[gm].source;
    const std::size_t z = g.morphisms[hm].source;
    set_mult(a, x, y, z, g.local_index(gm), g.local_index(hm), g.local_index(c), one);
  }
  return a;
}

}  // namespace hopfcat
