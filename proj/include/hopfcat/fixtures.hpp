// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcat/graded.hpp"
#include "hopfcat/groupoid.hpp"
#include "hopfcat/hopf_category.hpp"

/// Small named examples used by the tests, the acceptance suite and the
/// bundled fixture files.
namespace hopfcat::fixtures {

/// A group as a one-object groupoid on object "x".
inline Groupoid group_groupoid(const Group& g) {
  Groupoid out;
  out.objects = ObjectSet({"x"});
  for (const auto& e : g.elements()) out.morphisms.push_back({e, 0, 0});
  out.identity = {g.identity()};
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t t = 0; t < g.size(); ++t) out.compose[{s, t}] = g.mul(s, t);
    out.inverse[s] = g.inv(s);
  }
  return out;
}

/// The pair groupoid on objects "1".."n": one morphism m<x><y>: y -> x per pair.
inline Groupoid pair_groupoid(std::size_t n) {
  Groupoid g;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x + 1));
  g.objects = ObjectSet(labels);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) g.morphisms.push_back({"m" + labels[x] + labels[y], y, x});
  }
  for (std::size_t x = 0; x < n; ++x) g.identity.push_back(x * n + x);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.inverse[x * n + y] = y * n + x;
      for (std::size_t z = 0; z < n; ++z) g.compose[{x * n + y, y * n + z}] = x * n + z;
    }
  }
  return g;
}

/// Z/2 on object "1" disjoint from the trivial group on object "2".
inline Groupoid disjoint_groupoid() {
  Groupoid g;
  g.objects = ObjectSet({"1", "2"});
  g.morphisms = {{"e1", 0, 0}, {"g1", 0, 0}, {"e2", 1, 1}};
  g.identity = {0, 2};
  g.compose = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}, {{2, 2}, 2}};
  return g;
}

inline HopfCategory group_algebra(std::size_t n, Field f = Field::rationals()) {
  return linearize_groupoid(group_groupoid(Group::cyclic(n)), f);
}

inline HopfCategory pair_category(std::size_t n, Field f = Field::rationals()) {
  return linearize_groupoid(pair_groupoid(n), f);
}

inline HopfCategory disjoint_category(Field f = Field::rationals()) {
  return linearize_groupoid(disjoint_groupoid(), f);
}

/// Sweedler's 4-dimensional Hopf algebra with basis 1, g, x, gx
/// (g^a x^b has index a + 2b): g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
inline HopfCategory sweedler(Field f = Field::rationals()) {
  HopfCategory h(f, ObjectSet({"x"}), {4});
  h.add_antipode();
  auto idx = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          const long sign = (b * c) % 2 ? -1 : 1;
          set_mult(h, 0, 0, 0, idx(a, b), idx(c, d), idx((a + c) % 2, b + d),
                   Scalar::from_int(f, sign));
        }
      }
    }
  }
  const Scalar one = Scalar::one(f);
  h.unit(0).at(0, 0) = one;
  set_comult(h, 0, 0, 0, 0, 0, one);
  set_comult(h, 0, 0, 1, 1, 1, one);
  set_comult(h, 0, 0, 2, 2, 0, one);
  set_comult(h, 0, 0, 2, 1, 2, one);
  set_comult(h, 0, 0, 3, 3, 1, one);
  set_comult(h, 0, 0, 3, 0, 3, one);
  h.counit(0, 0).at(0, 0) = one;
  h.counit(0, 0).at(0, 1) = one;
  h.antipode(0, 0).at(0, 0) = one;
  h.antipode(0, 0).at(1, 1) = one;
  h.antipode(0, 0).at(3, 2) = -one;
  h.antipode(0, 0).at(2, 3) = one;
  return h;
}

/// The monoid bialgebra k{1, z} with z^2 = z, Delta(z) = z (x) z, eps(z) = 1.
/// It has no antipode.
inline HopfCategory idempotent_monoid(Field f = Field::rationals()) {
  HopfCategory h(f, ObjectSet({"x"}), {2});
  const Scalar one = Scalar::one(f);
  set_mult(h, 0, 0, 0, 0, 0, 0, one);
  set_mult(h, 0, 0, 0, 0, 1, 1, one);
  set_mult(h, 0, 0, 0, 1, 0, 1, one);
  set_mult(h, 0, 0, 0, 1, 1, 1, one);
  h.unit(0).at(0, 0) = one;
  set_comult(h, 0, 0, 0, 0, 0, one);
  set_comult(h, 0, 0, 1, 1, 1, one);
  h.counit(0, 0).at(0, 0) = one;
  h.counit(0, 0).at(0, 1) = one;
  return h;
}

/// Candidate antipodes for the idempotent monoid, as (name, matrix) pairs; none
/// of them satisfies the antipode axioms.
inline std::vector<std::pair<std::string, LinMap>> idempotent_candidates(
    Field f = Field::rationals()) {
  return {
      {"identity", LinMap::from_ints(f, {{1, 0}, {0, 1}})},
      {"swap", LinMap::from_ints(f, {{0, 1}, {1, 0}})},
      {"zero", LinMap::from_ints(f, {{0, 0}, {0, 0}})},
      {"collapse", LinMap::from_ints(f, {{1, 1}, {0, 0}})},
      {"complement", LinMap::from_ints(f, {{1, 1}, {0, -1}})},
  };
}

/// Z/2-graded algebra with A_e = k and A_g = k (dims as given), products 1
/// wherever both factors are nonzero, grouplike comultiplication, S = 1.
inline GradedHopf z2_graded(std::size_t dim_g, Field f = Field::rationals()) {
  GradedHopf h(f, Group::cyclic(2), {1, dim_g});
  const Scalar one = Scalar::one(f);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) {
      LinMap& m = h.m(s, t);
      if (m.rows() > 0 && m.cols() > 0) m.at(0, 0) = one;
    }
    if (h.dims[s] > 0) {
      h.comult[s].at(0, 0) = one;
      h.counit[s].at(0, 0) = one;
    }
  }
  h.unit.at(0, 0) = one;
  h.add_antipode();
  for (std::size_t s = 0; s < 2; ++s) {
    if (h.dims[s] > 0) h.antipode->at(s).at(0, 0) = one;
  }
  return h;
}

inline GradedHopf z2_strong(Field f = Field::rationals()) { return z2_graded(1, f); }
inline GradedHopf z2_zero(Field f = Field::rationals()) { return z2_graded(0, f); }

/// Every bundled Hopf category with its antipode, by fixture name.
inline std::vector<std::pair<std::string, HopfCategory>> hopf_fixtures(
    Field f = Field::rationals()) {
  return {
      {"pair2", pair_category(2, f)},
      {"pair3", pair_category(3, f)},
      {"disjoint", disjoint_category(f)},
      {"z2", group_algebra(2, f)},
      {"z3", group_algebra(3, f)},
      {"sweedler", sweedler(f)},
      {"z2-strong-graded", from_graded(z2_strong(f))},
      {"z2-zero-graded", from_graded(z2_zero(f))},
  };
}

}  // namespace hopfcat::fixtures
