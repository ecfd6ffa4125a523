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

#include "quadprod/io.hpp"
#include "quadprod/oracle.hpp"

namespace quadprod {
namespace {

using QMat = Matrix<Rational>;
using PMat = Matrix<Residue>;
const Field kQ = Field::rationals();
const Field kGF5 = Field::prime(5);

Errc parse_error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::ConstructionError;
}

TEST(MatrixText, Format) {
  const QMat m = QMat::from_rows(kQ, {{0, 0}, {1, 0}});
  EXPECT_EQ(to_text(m), "field Q\n2 2\n0 0\n1 0\n");
  EXPECT_EQ(to_text(PMat::identity(2, kGF5)), "field GF 5\n2 2\n1 0\n0 1\n");
}

TEST(MatrixText, ParsesCommentsFractionsAndResidues) {
  const QMat q = parse_matrix<Rational>("# a comment\nfield Q\n\n2 3\n1/2 -3 4/6\n0 0 7\n");
  EXPECT_EQ(q(0, 0).to_string(), "1/2");
  EXPECT_EQ(q(0, 2).to_string(), "2/3");
  EXPECT_EQ(q(1, 2).to_string(), "7");
  const PMat p = parse_matrix<Residue>("field GF 5\n1 2\n-1 7\n");
  EXPECT_EQ(p, PMat::from_rows(kGF5, {{4, 2}}));
  EXPECT_EQ(parse_matrix<Rational>("field Q\n0 0\n").rows(), 0U);
}

TEST(MatrixText, RoundTrips) {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const std::size_t r = rng.below(5), c = rng.below(5);
    QMat q = random_matrix<Rational>(rng, r, c, kQ, 9);
    if (r > 0 && c > 0) q(0, 0) = Rational::parse("-7/3");
    EXPECT_EQ(parse_matrix<Rational>(to_text(q)), q);
    const PMat p = random_matrix<Residue>(rng, r, c, kGF5);
    EXPECT_EQ(parse_matrix<Residue>(to_text(p)), p);
  }
}

TEST(MatrixText, Errors) {
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field R\n1 1\n1\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field Q\n2 2\n1 0\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field Q\n1 2\n1 0 3\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field Q\n1 1\nx\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field Q\n1 1\n1/0\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field Q\n-1 1\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>("field GF 5\n1 1\n1\n"); }), Errc::FieldMismatch);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Residue>("field GF 6\n1 1\n1\n"); }), Errc::InvalidModulus);
  EXPECT_EQ(parse_error_of([] { parse_matrix<Rational>(""); }), Errc::ParseError);
}

TEST(WitnessText, RoundTrip) {
  Witness<Rational> w;
  w.factors.push_back({QMat::from_rows(kQ, {{0, 0}, {1, 1}}), FactorRole::Idempotent, 1, Rational::one()});
  w.factors.push_back({QMat::from_rows(kQ, {{0, 2}, {0, 0}}), FactorRole::ScaledIdempotent, 1,
                       Rational::from_integer(2)});
  w.factors.push_back({QMat::from_rows(kQ, {{0, 0}, {1, 0}}), FactorRole::SquareZero, 1, Rational::one()});
  const std::string text = to_text(w);
  EXPECT_EQ(text.substr(0, text.find('\n')), "factor 1 role=idempotent nullity=1 scalar=1");
  EXPECT_NE(text.find("factor 2 role=scaled-idempotent nullity=1 scalar=2"), std::string::npos);
  EXPECT_EQ(parse_witness<Rational>(text, kQ), w);
  EXPECT_TRUE(parse_witness<Rational>("# nothing\n", kQ).factors.empty());
}

TEST(WitnessText, Errors) {
  const std::string body = "field Q\n1 1\n1\n";
  EXPECT_EQ(parse_error_of([&] { parse_witness<Rational>("factor 2 role=idempotent nullity=0 scalar=1\n" + body, kQ); }),
            Errc::ParseError);
  EXPECT_EQ(parse_error_of([&] { parse_witness<Rational>("factor 1 role=funny nullity=0 scalar=1\n" + body, kQ); }),
            Errc::ParseError);
  EXPECT_EQ(parse_error_of([&] { parse_witness<Rational>("factor 1 nullity=0 role=idempotent scalar=1\n" + body, kQ); }),
            Errc::ParseError);
  EXPECT_EQ(parse_error_of([&] { parse_witness<Rational>("factor 1 role=idempotent nullity=0 scalar=1\n", kQ); }),
            Errc::ParseError);
  EXPECT_EQ(parse_error_of([] {
              parse_witness<Rational>("factor 1 role=idempotent nullity=0 scalar=1\nfield GF 5\n1 1\n1\n", kQ);
            }),
            Errc::FieldMismatch);
}

TEST(SpecText, ParseAndFormat) {
  auto s = parse_factor_spec<Rational>("idem=1,2 sqz=2,2", kQ);
  EXPECT_EQ(s.idem_nullities, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(s.sqz_nullities, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(s.scalars, (std::vector<Rational>{Rational::one(), Rational::one()}));
  EXPECT_EQ(format_factor_spec(s), "idem=1,2 scalars=1,1 sqz=2,2");

  s = parse_factor_spec<Rational>("sqz=1 idem=0 scalars=-1/2", kQ);
  EXPECT_EQ(s.scalars[0].to_string(), "-1/2");
  EXPECT_EQ(format_factor_spec(s), "idem=0 scalars=-1/2 sqz=1");
  EXPECT_EQ(parse_factor_spec<Rational>(format_factor_spec(s), kQ).scalars, s.scalars);

  s = parse_factor_spec<Rational>("", kQ);
  EXPECT_EQ(s.k(), 0U);
  EXPECT_EQ(s.l(), 0U);
  EXPECT_EQ(format_factor_spec(s), "idem= scalars= sqz=");
  EXPECT_EQ(parse_factor_spec<Rational>("idem= scalars= sqz=", kQ).k(), 0U);

  const auto p = parse_factor_spec<Residue>("idem=1 scalars=7", kGF5);
  EXPECT_EQ(p.scalars[0], Residue::from_integer(2, kGF5));
}

TEST(SpecText, Errors) {
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("idem=1 foo=2", kQ); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("idem", kQ); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("idem=-1", kQ); }), Errc::ParseError);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("idem=1,2 scalars=1", kQ); }), Errc::InvalidSpec);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("idem=1 scalars=0", kQ); }), Errc::ZeroScalar);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Residue>("idem=1 scalars=5", kGF5); }), Errc::ZeroScalar);
  EXPECT_EQ(parse_error_of([] { parse_factor_spec<Rational>("sqz=1,1,1", kQ); }), Errc::UnsupportedFactorShape);
}

}  // namespace
}  // namespace quadprod
