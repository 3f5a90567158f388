// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hopfcat/errors.hpp"

namespace hopfcat {

/// An exact field: the rationals, or the prime field F_p with p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("prime modulus out of range [2, 2^31): " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    Field f;
    f.p_ = p;
    return f;
  }

  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text) {
    if (text == "q") return rationals();
    if (text.substr(0, 3) == "fp:" && text.size() > 3) {
      std::uint64_t p = 0;
      for (char c : text.substr(3)) {
        if (c < '0' || c > '9' || p > (std::uint64_t{1} << 40)) {
          throw ParseError("bad field descriptor '" + std::string(text) + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      try {
        return prime(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("bad field descriptor '" + std::string(text) + "'");
  }

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }

  std::string to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

  friend bool operator==(Field, Field) = default;

 private:
  std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

/// An element of an exact field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field f) {
    Scalar s;
    s.field_ = f;
    return s;
  }

  static Scalar one(Field f) { return from_int(f, 1); }

  static Scalar from_int(Field f, long value) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
      s.q_ = value;
    } else {
      const auto p = static_cast<long long>(f.modulus());
      long long r = static_cast<long long>(value) % p;
      if (r < 0) r += p;
      s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
  }

  static Scalar from_fraction(Field f, long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return from_int(f, num) / from_int(f, den);
  }

  /// Rationals: "a" or "a/b". Prime field: a decimal residue in [0, p).
  static Scalar parse(Field f, std::string_view text) {
    auto all_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    const std::string bad = "bad scalar '" + std::string(text) + "' for field " + f.to_string();
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
      std::string_view body = text;
      if (!body.empty() && body.front() == '-') body.remove_prefix(1);
      const auto slash = body.find('/');
      const auto num = body.substr(0, slash);
      if (!all_digits(num)) throw ParseError(bad);
      if (slash != std::string_view::npos) {
        const auto den = body.substr(slash + 1);
        if (!all_digits(den) || den.find_first_not_of('0') == std::string_view::npos) {
          throw ParseError(bad);
        }
      }
      s.q_.set_str(std::string(text), 10);
      s.q_.canonicalize();
      return s;
    }
    if (!all_digits(text) || text.size() > 12) throw ParseError(bad);
    const std::uint64_t v = std::stoull(std::string(text));
    if (v >= f.modulus()) throw ParseError(bad + " (residue out of range)");
    s.r_ = v;
    return s;
  }

  Field field() const noexcept { return field_; }

  bool is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

  std::string to_string() const {
    if (!field_.is_rational()) return std::to_string(r_);
    return q_.get_str(10);
  }

  /// Maps a rational into F_p. Throws if the denominator vanishes mod p.
  Scalar reduce(Field target) const {
    if (target == field_) return *this;
    if (!field_.is_rational() || target.is_rational()) {
      throw FieldMismatch("cannot convert " + field_.to_string() + " to " + target.to_string());
    }
    const auto p = target.modulus();
    auto residue = [&](const mpz_class& z) {
      mpz_class r = z % static_cast<unsigned long>(p);
      if (r < 0) r += static_cast<unsigned long>(p);
      return from_int(target, static_cast<long>(r.get_ui()));
    };
    const Scalar den = residue(q_.get_den());
    if (den.is_zero()) {
      throw std::domain_error(to_string() + " has no image in " + target.to_string());
    }
    return residue(q_.get_num()) / den;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational()) {
      s.q_ = 1 / q_;
    } else {
      s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
    }
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
      s.q_ = -q_;
    } else if (r_ != 0) {
      s.r_ = field_.modulus() - r_;
    }
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    same_field(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % field_.modulus();
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    same_field(o);
    if (field_.is_rational()) {
      q_ -= o.q_;
    } else {
      r_ = (r_ + field_.modulus() - o.r_) % field_.modulus();
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    same_field(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      r_ = (r_ * o.r_) % field_.modulus();
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    same_field(o);
    return *this *= o.inverse();
  }

  /// this += a * b, without a temporary.
  void add_product(const Scalar& a, const Scalar& b) {
    same_field(a);
    same_field(b);
    if (field_.is_rational()) {
      q_ += a.q_ * b.q_;
    } else {
      r_ = (r_ + a.r_ * b.r_) % field_.modulus();
    }
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

 private:
  void same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) {
      throw FieldMismatch("arithmetic between " + field_.to_string() + " and " +
                          o.field_.to_string());
    }
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
      if (exp & 1) result = result * base % mod;
      base = base * base % mod;
      exp >>= 1;
    }
    return result;
  }

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfcat
