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

#include "quadprod/invariants.hpp"
#include "quadprod/oracle.hpp"
#include "support/generators.hpp"

namespace quadprod {
namespace {

using QMat = Matrix<Rational>;
using PMat = Matrix<Residue>;
const Field kQ = Field::rationals();
const Field kGF5 = Field::prime(5);

TEST(N0, Examples) {
  for (std::size_t k = 2; k <= 6; ++k) EXPECT_EQ(n0(jordan_block<Rational>(k, kQ)), 0U) << k;
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(n0(QMat::zero(n, n, kQ)), n);
  EXPECT_EQ(n0(QMat::from_rows(kQ, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}})), 1U);
  EXPECT_THROW(n0(QMat(2, 3, kQ)), Error);
}

TEST(N0, CountsSizeOneBlocks) {
  // 0_2 ⊕ J_3 ⊕ J_2 ⊕ [4]
  const QMat g = block_diag({nilpotent_canonical<Rational>(2, {3, 2}, kQ), QMat::from_rows(kQ, {{4}})}, kQ);
  EXPECT_EQ(n0(g), 2U);
}

TEST(InvariantReport, Examples) {
  EXPECT_EQ(invariant_report(QMat::identity(3, kQ)), (InvariantReport{3, 3, 0, 0, 0, 3}));
  EXPECT_EQ(invariant_report(QMat::zero(2, 2, kQ)), (InvariantReport{2, 0, 2, 2, 0, 2}));
  EXPECT_EQ(invariant_report(QMat::from_rows(kQ, {{0, 0}, {1, 0}})), (InvariantReport{2, 1, 1, 0, 1, 1}));
  try {
    invariant_report(QMat(1, 2, kQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquare);
  }
}

TEST(Fitting, Examples) {
  const QMat inv = QMat::from_rows(kQ, {{2, 1}, {1, 1}});
  auto f = fitting(inv);
  EXPECT_EQ(f.nil_dim, 0U);
  EXPECT_EQ(f.nilpotent.rows(), 0U);
  EXPECT_EQ(conjugate(f.transform, f.invertible), inv);

  const QMat nil = QMat::from_rows(kQ, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  f = fitting(nil);
  EXPECT_EQ(f.nil_dim, 3U);
  EXPECT_EQ(f.invertible.rows(), 0U);

  f = fitting(QMat::from_rows(kQ, {{2, 0}, {0, 0}}));
  EXPECT_EQ(f.nilpotent, QMat::from_rows(kQ, {{0}}));
  EXPECT_EQ(f.invertible, QMat::from_rows(kQ, {{2}}));
  EXPECT_EQ(f.transform, QMat::from_rows(kQ, {{0, 1}, {1, 0}}));
}

TEST(NilpotentStructure, Examples) {
  auto s = nilpotent_structure(QMat::zero(3, 3, kQ));
  EXPECT_TRUE(s.block_sizes.empty());
  EXPECT_EQ(s.zero_block_count, 3U);
  EXPECT_EQ(s.chain_count, 0U);

  s = nilpotent_structure(jordan_block<Rational>(3, kQ));
  EXPECT_EQ(s.block_sizes, (std::vector<std::size_t>{3}));
  EXPECT_EQ(s.zero_block_count, 0U);
  EXPECT_EQ(s.chain_count, 1U);
  EXPECT_EQ(s.transform, QMat::identity(3, kQ));

  const QMat n = QMat::from_rows(kQ, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  s = nilpotent_structure(n);
  EXPECT_EQ(s.block_sizes, (std::vector<std::size_t>{2}));
  EXPECT_EQ(s.zero_block_count, 1U);
  EXPECT_EQ(s.canonical(), QMat::from_rows(kQ, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(conjugate(s.transform, s.canonical()), n);

  try {
    nilpotent_structure(QMat::identity(2, kQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNilpotent);
  }
}

template <class K>
void round_trips(const Field& field, std::uint64_t seed, std::int64_t magnitude) {
  Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto st = testing::random_structure(rng, n, n);
    const auto inst = testing::realize<K>(rng, field, n, st, magnitude);
    const Matrix<K>& g = inst.g;

    const auto fit = fitting(g);
    EXPECT_EQ(conjugate(fit.transform, fit.block_form()), g);
    EXPECT_TRUE(is_nilpotent(fit.nilpotent));
    EXPECT_TRUE(is_invertible(fit.invertible));
    EXPECT_EQ(fit.nil_dim, n - st.invertible_dim);

    const auto nil = nilpotent_structure(fit.nilpotent);
    EXPECT_EQ(conjugate(nil.transform, nil.canonical()), fit.nilpotent);
    std::size_t total = nil.zero_block_count;
    for (std::size_t k : nil.block_sizes) total += k;
    EXPECT_EQ(total, fit.nil_dim);
    EXPECT_EQ(nil.block_sizes, st.jordan_blocks);
    EXPECT_EQ(nil.zero_block_count, st.zero_blocks);
    EXPECT_EQ(nil.zero_block_count, n0(fit.nilpotent));
    EXPECT_EQ(n0(g), n0(fit.nilpotent));
    EXPECT_EQ(nil.chain_count, range_null_overlap(fit.nilpotent));

    // Weyr data: #blocks of size >= j = r(N^{j-1}) - r(N^j).
    for (std::size_t j = 1; j <= fit.nil_dim; ++j) {
      std::size_t at_least = 0;
      if (j == 1) at_least = nil.zero_block_count;
      for (std::size_t k : nil.block_sizes) at_least += k >= j ? 1 : 0;
      EXPECT_EQ(at_least, rank(power(fit.nilpotent, j - 1)) - rank(power(fit.nilpotent, j)));
    }
  }
}

TEST(Properties, FittingAndJordanRoundTrips) {
  round_trips<Rational>(kQ, 7, 3);
  round_trips<Residue>(kGF5, 8, 0);
  round_trips<Residue>(Field::prime(2), 9, 0);
}

template <class K>
void similarity_invariance(const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const std::size_t inner = rng.below(n + 1);
    const Matrix<K> g = random_matrix<K>(rng, n, inner, field, 3) * random_matrix<K>(rng, inner, n, field, 3);
    const Matrix<K> s = random_invertible<K>(rng, n, field, 3);
    const auto rep = invariant_report(g);
    EXPECT_EQ(invariant_report(conjugate(s, g)), rep);
    EXPECT_EQ(invariant_report(random_nonzero_scalar<K>(rng, field, 5) * g), rep);
    EXPECT_EQ(rep.dim_range_cap_null + rep.dim_range_plus_null, rep.rank + rep.nullity);
  }
}

TEST(Properties, SimilarityAndScalingInvariance) {
  similarity_invariance<Rational>(kQ, 31);
  similarity_invariance<Residue>(kGF5, 32);
  similarity_invariance<Residue>(Field::prime(2), 33);
}

}  // namespace
}  // namespace quadprod
