// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

enum class Level { category, semihopf, hopf };

inline const char* to_string(Level l) {
  switch (l) {
    case Level::category: return "category";
    case Level::semihopf: return "semihopf";
    case Level::hopf: return "hopf";
  }
  return "?";
}

inline Level parse_level(const std::string& s) {
  if (s == "category") return Level::category;
  if (s == "semihopf") return Level::semihopf;
  if (s == "hopf") return Level::hopf;
  throw std::invalid_argument("unknown level '" + s + "'");
}

namespace detail {

inline LinMap id(Field f, std::size_t n) { return LinMap::identity(f, n); }

/// a (x) b (x) c (x) d -> a (x) c (x) b (x) d
inline LinMap middle_swap(Field f, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return permute_factors(f, {a, b, c, d}, {0, 2, 1, 3});
}

}  // namespace detail

/// Associativity and unit laws of the underlying k-linear category.
inline void check_category_axioms(const HopfCategory& a, Report& r) {
  const Field f = a.field();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t t = 0; t < n; ++t) {
          const LinMap lhs = a.mult(x, y, t) * kron(detail::id(f, a.dim(x, y)), a.mult(y, z, t));
          const LinMap rhs = a.mult(x, z, t) * kron(a.mult(x, y, z), detail::id(f, a.dim(z, t)));
          r.check_equal("assoc", ob.tuple({x, y, z, t}), lhs, rhs,
                        {a.dim(x, y), a.dim(y, z), a.dim(z, t)});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.dim(x, y);
      r.check_equal("unit-left", ob.tuple({x, y}),
                    a.mult(x, x, y) * kron(a.unit(x), detail::id(f, d)), detail::id(f, d), {d});
      r.check_equal("unit-right", ob.tuple({x, y}),
                    a.mult(x, y, y) * kron(detail::id(f, d), a.unit(y)), detail::id(f, d), {d});
    }
  }
}

/// Each A_{x,y} is a coalgebra, and composition and units are coalgebra maps.
inline void check_coalgebra_axioms(const HopfCategory& a, Report& r) {
  const Field f = a.field();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.dim(x, y);
      const LinMap& delta = a.comult(x, y);
      const LinMap& eps = a.counit(x, y);
      r.check_equal("coassoc", ob.tuple({x, y}), kron(delta, detail::id(f, d)) * delta,
                    kron(detail::id(f, d), delta) * delta, {d});
      r.check_equal("counit-left", ob.tuple({x, y}), kron(eps, detail::id(f, d)) * delta,
                    detail::id(f, d), {d});
      r.check_equal("counit-right", ob.tuple({x, y}), kron(detail::id(f, d), eps) * delta,
                    detail::id(f, d), {d});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t dxy = a.dim(x, y);
        const std::size_t dyz = a.dim(y, z);
        const LinMap& m = a.mult(x, y, z);
        const LinMap lhs = a.comult(x, z) * m;
        const LinMap rhs = kron(m, m) * detail::middle_swap(f, dxy, dxy, dyz, dyz) *
                           kron(a.comult(x, y), a.comult(y, z));
        r.check_equal("comult-mult", ob.tuple({x, y, z}), lhs, rhs, {dxy, dyz});
        r.check_equal("counit-mult", ob.tuple({x, y, z}), a.counit(x, z) * m,
                      kron(a.counit(x, y), a.counit(y, z)), {dxy, dyz});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    r.check_equal("comult-unit", ob.tuple({x}), a.comult(x, x) * a.unit(x),
                  kron(a.unit(x), a.unit(x)), {1});
    r.check_equal("counit-unit", ob.tuple({x}), a.counit(x, x) * a.unit(x),
                  detail::id(f, 1), {1});
  }
}

/// h_(1) S(h_(2)) = eps(h) 1_x and S(h_(1)) h_(2) = eps(h) 1_y.
inline void check_antipode_axioms(const HopfCategory& a, Report& r) {
  const Field f = a.field();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.dim(x, y);
      const LinMap& s = a.antipode(x, y);
      const LinMap& delta = a.comult(x, y);
      r.check_equal("antipode-right", ob.tuple({x, y}),
                    a.mult(x, y, x) * kron(detail::id(f, d), s) * delta,
                    a.unit(x) * a.counit(x, y), {d});
      r.check_equal("antipode-left", ob.tuple({x, y}),
                    a.mult(y, x, y) * kron(s, detail::id(f, d)) * delta,
                    a.unit(y) * a.counit(x, y), {d});
    }
  }
}

inline Report verify_structure(const HopfCategory& a, Level level) {
  a.check_shapes();
  if (level == Level::hopf && !a.has_antipode()) {
    throw MissingAntipode("level hopf requires an antipode");
  }
  Report r;
  check_category_axioms(a, r);
  if (level == Level::category) return r;
  check_coalgebra_axioms(a, r);
  if (level == Level::semihopf) return r;
  check_antipode_axioms(a, r);
  return r;
}

/// The three conditions that are equivalent for a Hopf category, each taken
/// over all pairs (x,y):
///   [0] S(h_(2)) h_(1) = eps(h) 1_y
///   [1] h_(2) S(h_(1)) = eps(h) 1_x
///   [2] S_{y,x} S_{x,y} = id
inline std::array<bool, 3> involution_conditions(const HopfCategory& a) {
  const Field f = a.field();
  std::array<bool, 3> holds{true, true, true};
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      const std::size_t d = a.dim(x, y);
      const LinMap& s = a.antipode(x, y);
      const LinMap flipped = flip(f, d, d) * a.comult(x, y);
      if (!(a.mult(y, x, y) * kron(s, detail::id(f, d)) * flipped ==
            a.unit(y) * a.counit(x, y))) {
        holds[0] = false;
      }
      if (!(a.mult(x, y, x) * kron(detail::id(f, d), s) * flipped ==
            a.unit(x) * a.counit(x, y))) {
        holds[1] = false;
      }
      if (!(a.antipode(y, x) * s == detail::id(f, d))) holds[2] = false;
    }
  }
  return holds;
}

/// Anti-multiplicativity and anti-comultiplicativity of the antipode, and the
/// three involution conditions with a check that they agree.
inline Report check_antipode_theorems(const HopfCategory& a) {
  if (!a.has_antipode()) throw MissingAntipode("antipode theorems need an antipode");
  if (!verify_structure(a, Level::hopf).passed()) {
    throw PreconditionError("antipode theorems require a Hopf category");
  }
  const Field f = a.field();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  Report r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t dxy = a.dim(x, y);
        const std::size_t dyz = a.dim(y, z);
        r.check_equal("antipode-antimult", ob.tuple({x, y, z}), a.antipode(x, z) * a.mult(x, y, z),
                      a.mult(z, y, x) * kron(a.antipode(y, z), a.antipode(x, y)) * flip(f, dxy, dyz),
                      {dxy, dyz});
      }
    }
    r.check_equal("antipode-unit", ob.tuple({x}), a.antipode(x, x) * a.unit(x), a.unit(x), {1});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.dim(x, y);
      const LinMap& s = a.antipode(x, y);
      r.check_equal("antipode-anticomult", ob.tuple({x, y}), a.comult(y, x) * s,
                    kron(s, s) * flip(f, d, d) * a.comult(x, y), {d});
      r.check_equal("antipode-counit", ob.tuple({x, y}), a.counit(y, x) * s, a.counit(x, y), {d});
    }
  }
  const auto holds = involution_conditions(a);
  const char* names[] = {"involution-left", "involution-right", "involution-square"};
  for (std::size_t i = 0; i < 3; ++i) {
    r.note(names[i], {}, holds[i] ? "holds" : "does not hold");
  }
  r.expect(holds[0] == holds[1] && holds[1] == holds[2], "involution-agree", {},
           "the three involution conditions must coincide");
  return r;
}

/// Surjectivity of every composition map (condition 1) and of m_{x,y,x}
/// (condition 2); the two must agree.
struct Strictness {
  bool all_surjective = true;
  bool loops_surjective = true;
  Report report;
};

inline Strictness strictness(const HopfCategory& a) {
  a.check_shapes();
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  Strictness s;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t target = a.dim(x, z);
        const std::size_t rk = rank(a.mult(x, y, z));
        const std::string detail = "rank " + std::to_string(rk) + " of " + std::to_string(target);
        s.report.expect(rk == target, "mult-surjective", ob.tuple({x, y, z}), detail);
        if (rk != target) s.all_surjective = false;
        if (x == z) {
          s.report.note("loop-surjective", ob.tuple({x, y, z}), detail);
          if (rk != target) s.loops_surjective = false;
        }
      }
    }
  }
  s.report.expect(s.all_surjective == s.loops_surjective, "strict-conditions-agree", {},
                  std::string("all triples ") + (s.all_surjective ? "surjective" : "not surjective") +
                      ", loops " + (s.loops_surjective ? "surjective" : "not surjective"));
  return s;
}

inline Report check_strictness(const HopfCategory& a) { return strictness(a).report; }

inline bool is_strict(const HopfCategory& a) { return strictness(a).all_surjective; }

}  // namespace hopfcat
