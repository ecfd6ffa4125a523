// Copyright 2026 The quadprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUADPROD_FIELD_HPP
#define QUADPROD_FIELD_HPP

#include <charconv>
#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadprod/error.hpp"

namespace quadprod {

enum class FieldKind { Rationals, PrimeField };

/// Describes the scalar field: either Q or GF(p) for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }

  static Field prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw Error(Errc::InvalidModulus, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
  }

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }

  std::string to_string() const {
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
  }

  friend bool operator==(const Field&, const Field&) = default;

  /// Deterministic trial division; moduli of 2^31 and above are rejected.
  static bool is_prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  friend class Residue;

  Field(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint32_t modulus_;
};

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Rational zero(const Field& = Field::rationals()) { return Rational(); }
  static Rational one(const Field& = Field::rationals()) { return from_integer(1); }
  static Rational from_integer(std::int64_t v, const Field& = Field::rationals()) {
    Rational r;
    r.num_ = v;
    return r;
  }

  /// Accepts `[+-]digits[/digits]`.
  static Rational parse(std::string_view text, const Field& field = Field::rationals()) {
    if (!field.is_rationals()) throw Error(Errc::FieldMismatch, "rational scalar requested for " + field.to_string());
    std::string_view s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num_part = s.substr(0, slash);
      den_part = s.substr(slash + 1);
    }
    if (!detail::all_digits(num_part) || !detail::all_digits(den_part)) {
      throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    BigInt num{std::string(num_part)};
    BigInt den{std::string(den_part)};
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
  }

  Field field() const { return Field::rationals(); }
  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return Rational(den_, num_);
  }

  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::size_t hash() const {
    std::size_t h = boost::multiprecision::hash_value(num_);
    return h ^ (boost::multiprecision::hash_value(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

/// Residue class modulo a prime. Elements carry their modulus; mixing moduli
/// throws FieldMismatch.
class Residue {
 public:
  Residue() = default;

  static Residue zero(const Field& field) { return Residue(0, checked_modulus(field)); }
  static Residue one(const Field& field) { return Residue(1 % checked_modulus(field), checked_modulus(field)); }
  static Residue from_integer(std::int64_t v, const Field& field) {
    const std::int64_t p = checked_modulus(field);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Residue(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p));
  }

  /// Accepts an optionally signed integer and reduces it modulo p.
  static Residue parse(std::string_view text, const Field& field) {
    std::string_view s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (!detail::all_digits(s)) throw Error(Errc::ParseError, "malformed residue '" + std::string(text) + "'");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(Errc::ParseError, "residue out of range '" + std::string(text) + "'");
    }
    return from_integer(negative ? -v : v, field);
  }

  Field field() const { return Field(FieldKind::PrimeField, modulus_); }
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Residue inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    // Extended Euclid on (value, p).
    std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::tie(a, m) = std::make_pair(m, a - q * m);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += modulus_;
    return Residue(static_cast<std::uint32_t>(r), modulus_);
  }

  std::string to_string() const { return std::to_string(value_); }

  Residue operator-() const { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  friend Residue operator+(Residue a, Residue b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return Residue(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    check(a, b);
    return Residue(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.modulus_ - b.value_), a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    check(a, b);
    return Residue(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_), a.modulus_);
  }
  friend Residue operator/(Residue a, Residue b) {
    check(a, b);
    return a * b.inverse();
  }
  Residue& operator+=(Residue b) { return *this = *this + b; }
  Residue& operator-=(Residue b) { return *this = *this - b; }
  Residue& operator*=(Residue b) { return *this = *this * b; }

  friend bool operator==(const Residue&, const Residue&) = default;

  std::size_t hash() const noexcept { return std::hash<std::uint64_t>{}((std::uint64_t{modulus_} << 32) | value_); }

 private:
  Residue(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {}

  static std::uint32_t checked_modulus(const Field& field) {
    if (field.is_rationals()) throw Error(Errc::FieldMismatch, "residue requested for Q");
    return field.modulus();
  }

  static void check(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) {
      throw Error(Errc::FieldMismatch,
                  "GF(" + std::to_string(a.modulus_) + ") vs GF(" + std::to_string(b.modulus_) + ")");
    }
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

/// Requirements on a scalar type usable by Matrix and the factor routines.
template <class K>
concept FieldElement = std::regular<K> && requires(const K a, const K b, const Field& f, std::string_view s,
                                                   std::int64_t i) {
  { K::zero(f) } -> std::same_as<K>;
  { K::one(f) } -> std::same_as<K>;
  { K::from_integer(i, f) } -> std::same_as<K>;
  { K::parse(s, f) } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.field() } -> std::same_as<Field>;
};

/// Checked binary arithmetic with an explicit operator tag.
enum class ArithOp { Add, Sub, Mul, Div };

template <FieldElement K>
K scalar_arith(const K& a, const K& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(Errc::BadParameters, "unknown arithmetic operator");
}

template <FieldElement K>
K scalar_inverse(const K& a) {
  return a.inverse();
}

}  // namespace quadprod

template <>
struct std::hash<quadprod::Rational> {
  std::size_t operator()(const quadprod::Rational& r) const { return r.hash(); }
};

template <>
struct std::hash<quadprod::Residue> {
  std::size_t operator()(const quadprod::Residue& r) const noexcept { return r.hash(); }
};

#endif  // QUADPROD_FIELD_HPP
