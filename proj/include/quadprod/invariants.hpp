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

#ifndef QUADPROD_INVARIANTS_HPP
#define QUADPROD_INVARIANTS_HPP

#include <cstddef>
#include <vector>

#include "quadprod/matrix.hpp"
#include "quadprod/subspace.hpp"

namespace quadprod {

/// J_k(0) with ones on the subdiagonal.
template <FieldElement K>
Matrix<K> jordan_block(std::size_t k, const Field& field) {
  Matrix<K> j(k, k, field);
  for (std::size_t i = 1; i < k; ++i) j(i, i - 1) = K::one(field);
  return j;
}

/// 0_{zero_blocks} ⊕ J_{k_1}(0) ⊕ ... in the given order.
template <FieldElement K>
Matrix<K> nilpotent_canonical(std::size_t zero_blocks, const std::vector<std::size_t>& block_sizes,
                              const Field& field) {
  std::vector<Matrix<K>> parts;
  parts.push_back(Matrix<K>::zero(zero_blocks, zero_blocks, field));
  for (std::size_t k : block_sizes) parts.push_back(jordan_block<K>(k, field));
  return block_diag(std::span<const Matrix<K>>(parts), field);
}

/// dim(R(G) ∩ N(G)).
template <FieldElement K>
std::size_t range_null_overlap(const Matrix<K>& g) {
  detail::require_square(g, "range_null_overlap");
  return subspace_intersect(colspace_basis(g), nullspace_basis(g)).dim();
}

/// n0(G) = n(G) - dim(R(G) ∩ N(G)): the number of 1x1 zero Jordan blocks.
template <FieldElement K>
std::size_t n0(const Matrix<K>& g) {
  detail::require_square(g, "n0");
  return nullity(g) - range_null_overlap(g);
}

struct InvariantReport {
  std::size_t order = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t n0 = 0;
  std::size_t dim_range_cap_null = 0;
  std::size_t dim_range_plus_null = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

template <FieldElement K>
InvariantReport invariant_report(const Matrix<K>& g) {
  detail::require_square(g, "invariant_report");
  const auto range = colspace_basis(g);
  const auto null = nullspace_basis(g);
  InvariantReport rep;
  rep.order = g.rows();
  rep.rank = range.dim();
  rep.nullity = null.dim();
  rep.dim_range_cap_null = subspace_intersect(range, null).dim();
  rep.dim_range_plus_null = subspace_sum_dim(range, null);
  rep.n0 = rep.nullity - rep.dim_range_cap_null;
  if (rep.dim_range_cap_null + rep.dim_range_plus_null != rep.rank + rep.nullity) {
    throw Error(Errc::ConstructionError, "Grassmann identity violated in invariant_report");
  }
  return rep;
}

/// G = S * (N ⊕ B) * S^-1 with N nilpotent and B invertible.
template <FieldElement K>
struct FittingDecomposition {
  Matrix<K> transform;
  std::size_t nil_dim = 0;
  Matrix<K> nilpotent;
  Matrix<K> invertible;

  Matrix<K> block_form() const { return block_diag({nilpotent, invertible}, transform.field()); }
};

/// Splits K^n = N(G^n) ⊕ R(G^n); both summands are G-invariant.
template <FieldElement K>
FittingDecomposition<K> fitting(const Matrix<K>& g) {
  detail::require_square(g, "fitting");
  const std::size_t n = g.rows();
  const Matrix<K> gn = power(g, n);
  const auto kernel = nullspace_basis(gn);
  const auto range = colspace_basis(gn);
  FittingDecomposition<K> out;
  out.transform = hconcat(kernel.vectors(), range.vectors());
  out.nil_dim = kernel.dim();
  const Matrix<K> c = inverse(out.transform) * g * out.transform;
  const std::size_t d = out.nil_dim;
  if (!c.block(0, d, d, n - d).is_zero() || !c.block(d, 0, n - d, d).is_zero()) {
    throw Error(Errc::ConstructionError, "Fitting summands are not invariant");
  }
  out.nilpotent = c.block(0, 0, d, d);
  out.invertible = c.block(d, d, n - d, n - d);
  return out;
}

/// T^-1 * N * T = 0_{zero_block_count} ⊕ J_{k_1}(0) ⊕ ... ⊕ J_{k_m}(0),
/// k_1 >= k_2 >= ... >= 2.
template <FieldElement K>
struct NilpotentStructure {
  Matrix<K> transform;
  std::vector<std::size_t> block_sizes;
  std::size_t zero_block_count = 0;
  std::size_t chain_count = 0;

  Matrix<K> canonical() const {
    return nilpotent_canonical<K>(zero_block_count, block_sizes, transform.field());
  }
};

template <FieldElement K>
NilpotentStructure<K> nilpotent_structure(const Matrix<K>& nil) {
  detail::require_square(nil, "nilpotent_structure");
  const std::size_t n = nil.rows();
  const Field& field = nil.field();

  // powers[j] = N^j until it vanishes.
  std::vector<Matrix<K>> powers{Matrix<K>::identity(n, field)};
  std::vector<std::size_t> ranks{n};
  while (ranks.back() > 0) {
    if (powers.size() > n) throw Error(Errc::NotNilpotent, "N^n is nonzero");
    powers.push_back(powers.back() * nil);
    ranks.push_back(rank(powers.back()));
  }
  const std::size_t index = powers.size() - 1;

  // Weyr data: #blocks of size >= j is r(N^{j-1}) - r(N^j).
  auto at_least = [&](std::size_t j) -> std::size_t { return j > index ? 0 : ranks[j - 1] - ranks[j]; };

  struct Chain {
    std::size_t size;
    Matrix<K> top;
  };
  std::vector<Chain> chains;

  for (std::size_t j = index; j >= 1; --j) {
    const std::size_t need = at_least(j) - at_least(j + 1);
    if (need == 0) continue;
    Matrix<K> base = nullspace_basis(powers[j - 1]).vectors();
    for (const Chain& c : chains) base = hconcat(base, powers[c.size - j] * c.top);
    std::size_t base_rank = rank(base);
    const Matrix<K> candidates = nullspace_basis(powers[j]).vectors();
    std::size_t found = 0;
    std::vector<Chain> level;
    for (std::size_t c = 0; c < candidates.cols() && found < need; ++c) {
      Matrix<K> x = candidates.column(c);
      Matrix<K> trial = hconcat(base, x);
      if (rank(trial) == base_rank + 1) {
        base = std::move(trial);
        ++base_rank;
        ++found;
        level.push_back({j, std::move(x)});
      }
    }
    if (found != need) throw Error(Errc::ConstructionError, "Jordan chain lifting fell short");
    for (auto& c : level) chains.push_back(std::move(c));
  }

  NilpotentStructure<K> out;
  out.transform = Matrix<K>(n, 0, field);
  for (const Chain& c : chains) {
    if (c.size == 1) {
      out.transform = hconcat(out.transform, c.top);
      ++out.zero_block_count;
    }
  }
  for (const Chain& c : chains) {
    if (c.size == 1) continue;
    Matrix<K> v = c.top;
    for (std::size_t i = 0; i < c.size; ++i) {
      out.transform = hconcat(out.transform, v);
      v = nil * v;
    }
    out.block_sizes.push_back(c.size);
  }
  out.chain_count = out.block_sizes.size();
  return out;
}

}  // namespace quadprod

#endif  // QUADPROD_INVARIANTS_HPP
