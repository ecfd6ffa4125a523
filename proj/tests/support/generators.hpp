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

// Random structured instances shared by the unit and acceptance suites.

#ifndef QUADPROD_TESTS_GENERATORS_HPP
#define QUADPROD_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "quadprod/quadprod.hpp"

namespace quadprod::testing {

struct Structure {
  std::size_t zero_blocks = 0;
  std::vector<std::size_t> jordan_blocks;
  std::size_t invertible_dim = 0;

  std::size_t rank() const {
    std::size_t r = invertible_dim;
    for (std::size_t k : jordan_blocks) r += k - 1;
    return r;
  }
  std::size_t nullity() const { return zero_blocks + jordan_blocks.size(); }
};

/// Splits n into an invertible part of size <= max_invertible and random
/// nilpotent blocks (size 1 counts as a zero block).
inline Structure random_structure(Rng& rng, std::size_t n, std::size_t max_invertible) {
  Structure s;
  s.invertible_dim = static_cast<std::size_t>(rng.below(std::min(max_invertible, n) + 1));
  std::size_t left = n - s.invertible_dim;
  while (left > 0) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.below(left));
    if (k == 1) {
      ++s.zero_blocks;
    } else {
      s.jordan_blocks.push_back(k);
    }
    left -= k;
  }
  std::sort(s.jordan_blocks.rbegin(), s.jordan_blocks.rend());
  return s;
}

template <FieldElement K>
RandomInstance<K> realize(Rng& rng, const Field& field, std::size_t n, const Structure& s,
                          std::int64_t magnitude) {
  RandomTarget<K> t;
  t.zero_blocks = s.zero_blocks;
  t.jordan_blocks = s.jordan_blocks;
  t.invertible_part = random_invertible<K>(rng, s.invertible_dim, field, magnitude);
  return random_instance<K>(rng.next(), field, n, t, magnitude);
}

template <FieldElement K>
struct TwoSquareZeroCase {
  Matrix<K> g;
  std::vector<std::size_t> nullities;
  std::size_t nz1 = 0;
  std::size_t nz2 = 0;
};

/// Random G (random Jordan structure, random similarity) together with a
/// factor shape satisfying the two-square-zero conditions.
template <FieldElement K>
TwoSquareZeroCase<K> random_two_square_zero_case(Rng& rng, const Field& field, std::size_t max_n, std::int64_t magnitude) {
  while (true) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_n));
    const Structure s = random_structure(rng, n, n / 2);
    const std::size_t nul = s.nullity();
    const std::size_t half_up = (n + 1) / 2;
    if (nul < half_up) continue;
    const std::size_t r = s.rank();
    const std::size_t need = r > s.zero_blocks ? r - s.zero_blocks : 0;
    TwoSquareZeroCase<K> c;
    c.nz1 = half_up + static_cast<std::size_t>(rng.below(nul - half_up + 1));
    c.nz2 = half_up + static_cast<std::size_t>(rng.below(nul - half_up + 1));
    std::size_t k = static_cast<std::size_t>(rng.below(4));
    if (need > 0 && k == 0) k = 1;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      c.nullities.push_back(static_cast<std::size_t>(rng.below(nul + 1)));
      sum += c.nullities.back();
    }
    for (std::size_t i = 0; sum < need; i = (i + 1) % k) {
      if (c.nullities[i] < nul) {
        ++c.nullities[i];
        ++sum;
      }
    }
    c.g = realize<K>(rng, field, n, s, magnitude).g;
    return c;
  }
}

/// Random F with r(F) <= n0(F), i.e. a product of two square-zero matrices.
template <FieldElement K>
Matrix<K> random_squarezero_product(Rng& rng, const Field& field, std::size_t max_n, std::int64_t magnitude) {
  while (true) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_n));
    const Structure s = random_structure(rng, n, n / 2);
    if (s.rank() > s.zero_blocks) continue;
    return realize<K>(rng, field, n, s, magnitude).g;
  }
}

template <FieldElement K>
struct ProductTriple {
  Matrix<K> h;
  Matrix<K> z1;
  Matrix<K> z2;
};

/// Random H (any matrix, idempotent half of the time) and a square-zero pair
/// Z_1, Z_2 with random legal ranks whose product is a random F.
template <FieldElement K>
ProductTriple<K> random_product_triple(Rng& rng, const Field& field, std::size_t max_n, std::int64_t magnitude) {
  const Matrix<K> f = random_squarezero_product<K>(rng, field, max_n, magnitude);
  const std::size_t n = f.rows();
  const std::size_t r = rank(f);
  const std::size_t r1 = r + static_cast<std::size_t>(rng.below(n / 2 - r + 1));
  const std::size_t r2 = r + static_cast<std::size_t>(rng.below(n / 2 - r + 1));
  auto zz = squarezero_pair(f, n - r1, n - r2);
  Matrix<K> h = random_matrix<K>(rng, n, n, field, magnitude);
  if (rng.below(2) == 0) {
    const std::size_t t = static_cast<std::size_t>(rng.below(n + 1));
    Matrix<K> d = Matrix<K>::identity(n, field);
    for (std::size_t i = 0; i < t; ++i) d(i, i) = K::zero(field);
    h = conjugate(random_invertible<K>(rng, n, field, magnitude), d);
  }
  return {std::move(h), std::move(zz.left), std::move(zz.right)};
}

}  // namespace quadprod::testing

#endif  // QUADPROD_TESTS_GENERATORS_HPP
