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

#include <gtest/gtest.h>

#include "quadprod/field.hpp"
#include "quadprod/oracle.hpp"

namespace quadprod {
namespace {

const Field kQ = Field::rationals();

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(BigInt(num), BigInt(den)); }

TEST(Field, RejectsCompositeModuli) {
  EXPECT_NO_THROW(Field::prime(2));
  EXPECT_NO_THROW(Field::prime(2147483647));  // 2^31 - 1
  for (std::uint64_t bad : {0ULL, 1ULL, 4ULL, 9ULL, 91ULL, 2147483648ULL, 4294967311ULL}) {
    try {
      Field::prime(bad);
      FAIL() << bad << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidModulus);
    }
  }
}

TEST(Field, RationalArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), "5/6");
  EXPECT_EQ(scalar_arith(q(3, 4), q(1), ArithOp::Mul), q(3, 4));
  EXPECT_EQ(scalar_arith(q(1, 2), q(1, 2), ArithOp::Sub), q(0));
  EXPECT_EQ(scalar_arith(q(2, 3), q(4, 9), ArithOp::Div), q(3, 2));
  EXPECT_EQ(q(-6, 4).to_string(), "-3/2");
  EXPECT_EQ(q(6, -4).to_string(), "-3/2");
  EXPECT_EQ(q(0, -5).to_string(), "0");
}

TEST(Field, ResidueArithmetic) {
  const Field gf2 = Field::prime(2);
  const Field gf5 = Field::prime(5);
  EXPECT_EQ(Residue::one(gf2) + Residue::one(gf2), Residue::zero(gf2));
  const auto a = Residue::from_integer(3, gf5);
  EXPECT_EQ(scalar_arith(a, Residue::one(gf5), ArithOp::Mul), a);
  EXPECT_EQ(Residue::from_integer(-1, gf5).value(), 4U);
  EXPECT_EQ((Residue::from_integer(2, gf5) - Residue::from_integer(4, gf5)).value(), 3U);
}

TEST(Field, Inverses) {
  EXPECT_EQ(scalar_inverse(q(3, 4)), q(4, 3));
  EXPECT_EQ(scalar_inverse(q(-2)), q(-1, 2));
  const Field gf5 = Field::prime(5);
  EXPECT_EQ(scalar_inverse(Residue::from_integer(2, gf5)).value(), 3U);
  const Field gf2 = Field::prime(2);
  EXPECT_EQ(scalar_inverse(Residue::one(gf2)), Residue::one(gf2));
}

TEST(Field, ErrorsAreTyped) {
  const Field gf5 = Field::prime(5);
  const Field gf7 = Field::prime(7);
  try {
    (void)scalar_inverse(q(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  try {
    (void)scalar_arith(Residue::one(gf5), Residue::zero(gf5), ArithOp::Div);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  try {
    (void)(Residue::one(gf5) + Residue::one(gf7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
  EXPECT_THROW(Residue::parse("1", kQ), Error);
  EXPECT_THROW(Rational::parse("1", gf5), Error);
}

TEST(Field, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "-1", "5/6", "-123456789012345678901234567890/11", "22/7"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
  EXPECT_EQ(Rational::parse("+4/6").to_string(), "2/3");
  EXPECT_EQ(Rational::parse("-0").to_string(), "0");
  for (const char* bad : {"", "-", "1/0", "1/-2", "a", "1.5", "1//2", "3/"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
  const Field gf7 = Field::prime(7);
  for (const char* s : {"0", "1", "6"}) EXPECT_EQ(Residue::parse(s, gf7).to_string(), s);
  EXPECT_EQ(Residue::parse("-1", gf7).to_string(), "6");
  EXPECT_EQ(Residue::parse("15", gf7).to_string(), "1");
  EXPECT_THROW(Residue::parse("x", gf7), Error);
}

template <class K>
void check_axioms(const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 300; ++trial) {
    const K a = random_scalar<K>(rng, field, 50);
    const K b = random_scalar<K>(rng, field, 50);
    const K c = random_scalar<K>(rng, field, 50);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), K::zero(field));
    EXPECT_EQ(a - b, a + (-b));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), K::one(field));
      EXPECT_EQ(b / a * a, b);
    }
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  check_axioms<Rational>(kQ, 11);
  check_axioms<Residue>(Field::prime(2), 12);
  check_axioms<Residue>(Field::prime(5), 13);
  check_axioms<Residue>(Field::prime(2147483647), 14);
}

TEST(Field, CanonicalFormIsUnique) {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t a = rng.between(-1000, 1000);
    std::int64_t b = rng.between(-1000, 1000);
    std::int64_t k = rng.between(-50, 50);
    if (b == 0) b = 1;
    if (k == 0) k = 7;
    const Rational x{BigInt(a), BigInt(b)};
    const Rational y{BigInt(a * k), BigInt(b * k)};
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.to_string(), y.to_string());
    EXPECT_EQ(std::hash<Rational>{}(x), std::hash<Rational>{}(y));
    EXPECT_GT(x.denominator(), 0);
    EXPECT_EQ(boost::multiprecision::gcd(x.numerator(), x.denominator()), x.is_zero() ? x.denominator() : 1);
  }
}

}  // namespace
}  // namespace quadprod
