// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>

#include "hopfcat/hopf_category.hpp"
#include "hopfcat/linalg.hpp"

namespace hopfcat {

enum class Variance { opposite, coopposite, opcop };

inline Variance parse_variance(const std::string& s) {
  if (s == "opposite") return Variance::opposite;
  if (s == "coopposite") return Variance::coopposite;
  if (s == "opcop") return Variance::opcop;
  throw std::invalid_argument("unknown transform '" + s + "'");
}

namespace detail {

inline LinMap inverse_or_throw(const LinMap& m, const std::string& what) {
  auto inv = invert(m);
  if (auto* bad = std::get_if<NotInvertible>(&inv)) {
    throw PreconditionError(what + " is not invertible (rank " + std::to_string(bad->rank) + ")");
  }
  return std::get<LinMap>(std::move(inv));
}

}  // namespace detail

/// opposite: A^op_{x,y} = A_{y,x}, m^op_{x,y,z} = m_{z,y,x} c, antipode S^{-1}.
/// coopposite: Delta^cop = c Delta, antipode S^cop_{x,y} = (S_{y,x})^{-1}.
/// opcop: both, antipode S_{y,x}.
inline HopfCategory transform(const HopfCategory& a, Variance mode) {
  a.check_shapes();
  const Field f = a.field();
  const std::size_t n = a.size();
  const bool op = mode != Variance::coopposite;
  const bool cop = mode != Variance::opposite;
  std::vector<std::size_t> dims(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) dims[x * n + y] = op ? a.dim(y, x) : a.dim(x, y);
  }
  HopfCategory out(f, a.objects(), dims);
  for (std::size_t x = 0; x < n; ++x) {
    out.unit(x) = a.unit(x);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t sx = op ? y : x;
      const std::size_t sy = op ? x : y;
      const std::size_t d = a.dim(sx, sy);
      out.comult(x, y) = cop ? flip(f, d, d) * a.comult(sx, sy) : a.comult(sx, sy);
      out.counit(x, y) = a.counit(sx, sy);
      for (std::size_t z = 0; z < n; ++z) {
        out.mult(x, y, z) =
            op ? a.mult(z, y, x) * flip(f, a.dim(y, x), a.dim(z, y)) : a.mult(x, y, z);
      }
    }
  }
  if (a.has_antipode()) {
    out.add_antipode();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::string pair = a.objects().label(x) + "," + a.objects().label(y);
        switch (mode) {
          case Variance::opposite:
            out.antipode(x, y) = detail::inverse_or_throw(a.antipode(x, y), "antipode " + pair);
            break;
          case Variance::coopposite:
            out.antipode(x, y) = detail::inverse_or_throw(a.antipode(y, x), "antipode " + pair);
            break;
          case Variance::opcop:
            out.antipode(x, y) = a.antipode(y, x);
            break;
        }
      }
    }
  }
  return out;
}

inline HopfCategory strip_antipode(HopfCategory a) {
  a.remove_antipode();
  return a;
}

}  // namespace hopfcat
