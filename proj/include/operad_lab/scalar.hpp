/*
 *   Copyright 2026 The operad_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPERAD_LAB_SCALAR_HPP
#define OPERAD_LAB_SCALAR_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "operad_lab/errors.hpp"

namespace operad_lab {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

class Scalar;

/// The ground field: either the rationals or a prime field GF(p), p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { rational, prime };

  /// The rationals.
  Field() = default;

  static Field rationals() noexcept { return Field{}; }

  static Field prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    }
    Field f;
    f.kind_ = Kind::prime;
    f.modulus_ = p;
    return f;
  }

  /// Accepts "q" or "gfp:<p>".
  static Field parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    constexpr std::string_view prefix = "gfp:";
    if (text.substr(0, prefix.size()) == prefix) {
      std::uint64_t p = 0;
      auto digits = text.substr(prefix.size());
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || p > UINT32_MAX) {
        throw parse_error("bad field modulus in '" + std::string(text) + "'");
      }
      if (p >= (std::uint64_t{1} << 31) || !is_prime(static_cast<std::uint32_t>(p))) {
        throw parse_error("field modulus in '" + std::string(text) + "' is not a prime below 2^31");
      }
      return prime(static_cast<std::uint32_t>(p));
    }
    throw parse_error("unknown field '" + std::string(text) + "' (expected q or gfp:<p>)");
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  std::string name() const {
    return is_rational() ? std::string("q") : "gfp:" + std::to_string(modulus_);
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const rational& v) const;
  /// Parses "3", "-1/2" or "4 mod 32003".
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint32_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  Kind kind_ = Kind::rational;
  std::uint32_t modulus_ = 0;
};

namespace detail {

inline std::uint32_t mod_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline std::uint32_t mod_from_integer(const integer& v, std::uint32_t p) {
  integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

/// An exact field element tagged with its field. Rationals are kept reduced
/// with positive denominator; residues live in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  Scalar(Field f, const rational& q) : field_(f) {
    if (f.is_rational()) {
      q_ = q;
    } else {
      std::uint32_t num = detail::mod_from_integer(boost::multiprecision::numerator(q), f.modulus());
      std::uint32_t den = detail::mod_from_integer(boost::multiprecision::denominator(q), f.modulus());
      if (den == 0) throw std::domain_error("denominator vanishes in GF(" + std::to_string(f.modulus()) + ")");
      r_ = static_cast<std::uint32_t>(std::uint64_t{num} * detail::mod_inverse(den, f.modulus()) % f.modulus());
    }
  }

  static Scalar residue(Field f, std::uint32_t r) {
    if (f.is_rational()) return Scalar(f, rational(r));
    Scalar s;
    s.field_ = f;
    s.r_ = r % f.modulus();
    return s;
  }

  const Field& field() const noexcept { return field_; }

  bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

  const rational& as_rational() const { return q_; }
  std::uint32_t residue() const noexcept { return r_; }

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
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % field_.modulus());
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.modulus());
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) {
      q_ /= o.q_;
    } else {
      r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * detail::mod_inverse(o.r_, field_.modulus()) %
                                      field_.modulus());
    }
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// "3", "-1/2", or "4 mod 32003".
  std::string to_string() const {
    if (field_.is_rational()) return q_.str();
    return std::to_string(r_) + " mod " + std::to_string(field_.modulus());
  }

  /// Like to_string() without the " mod p" suffix.
  std::string to_short_string() const {
    return field_.is_rational() ? q_.str() : std::to_string(r_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void check(const Scalar& o) const {
    if (!(field_ == o.field_)) {
      throw field_mismatch("scalar arithmetic across fields " + field_.name() + " and " + o.field_.name());
    }
  }

  Field field_{};
  rational q_{};
  std::uint32_t r_ = 0;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(*this, rational(v));
  return Scalar::residue(*this, detail::mod_reduce(v, modulus_));
}

inline Scalar Field::from_rational(const rational& v) const { return Scalar(*this, v); }

inline Scalar Field::parse_scalar(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (auto pos = body.find("mod"); pos != std::string_view::npos) {
    std::string_view mod_part = trim(body.substr(pos + 3));
    Field stated = Field::parse("gfp:" + std::string(mod_part));
    if (!(stated == *this)) {
      throw field_mismatch("scalar '" + std::string(text) + "' is not in field " + name());
    }
    body = trim(body.substr(0, pos));
  }
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (s.empty()) throw parse_error("empty number in '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw parse_error("bad number '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw parse_error("bad number '" + std::string(text) + "'");
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return integer(digits);
  };
  integer num, den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_int(body.substr(0, slash));
    den = parse_int(body.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  } else {
    num = parse_int(body);
  }
  return Scalar(*this, rational(num, den));
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_SCALAR_HPP
