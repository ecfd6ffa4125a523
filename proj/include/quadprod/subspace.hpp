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

#ifndef QUADPROD_SUBSPACE_HPP
#define QUADPROD_SUBSPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quadprod/matrix.hpp"

namespace quadprod {

/// A subspace of K^n stored as the columns of a matrix in canonical form:
/// the basis vectors are the nonzero rows of the RREF of the generators,
/// so equal subspaces have identical representations.
template <FieldElement K>
class SubspaceBasis {
 public:
  /// Span of the columns of `generators`; dependent columns are fine.
  static SubspaceBasis span_of(const Matrix<K>& generators) {
    auto r = rref(transpose(generators));
    SubspaceBasis s(generators.rows(), generators.field());
    s.vectors_ = transpose(r.reduced.block(0, 0, r.rank, generators.rows()));
    return s;
  }

  static SubspaceBasis zero(std::size_t ambient_dim, const Field& field) { return SubspaceBasis(ambient_dim, field); }

  static SubspaceBasis whole(std::size_t ambient_dim, const Field& field) {
    return span_of(Matrix<K>::identity(ambient_dim, field));
  }

  std::size_t ambient_dim() const noexcept { return vectors_.rows(); }
  std::size_t dim() const noexcept { return vectors_.cols(); }
  const Field& field() const noexcept { return vectors_.field(); }

  /// ambient_dim x dim matrix whose columns are the basis vectors.
  const Matrix<K>& vectors() const noexcept { return vectors_; }
  Matrix<K> vector(std::size_t i) const { return vectors_.column(i); }

  bool contains(const Matrix<K>& v) const {
    if (v.rows() != ambient_dim()) throw Error(Errc::AmbientMismatch, "vector length differs from ambient dimension");
    return rank(hconcat(vectors_, v)) == dim();
  }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  SubspaceBasis(std::size_t ambient_dim, const Field& field) : vectors_(ambient_dim, 0, field) {}

  Matrix<K> vectors_;
};

/// Kernel of M. Free variables are taken in column order before canonicalizing.
template <FieldElement K>
SubspaceBasis<K> nullspace_basis(const Matrix<K>& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  Matrix<K> gens(n, n - r.rank, m.field());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    gens(free, k) = K::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) gens(r.pivot_cols[i], k) = -r.reduced(i, free);
    ++k;
  }
  return SubspaceBasis<K>::span_of(gens);
}

/// Range of M, spanned by its pivot columns.
template <FieldElement K>
SubspaceBasis<K> colspace_basis(const Matrix<K>& m) {
  auto r = rref(m);
  Matrix<K> gens(m.rows(), r.rank, m.field());
  for (std::size_t k = 0; k < r.rank; ++k) gens.set_block(0, k, m.column(r.pivot_cols[k]));
  return SubspaceBasis<K>::span_of(gens);
}

namespace detail {

template <FieldElement K>
void require_same_ambient(const SubspaceBasis<K>& u, const SubspaceBasis<K>& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw Error(Errc::AmbientMismatch,
                "ambient dimensions " + std::to_string(u.ambient_dim()) + " and " + std::to_string(v.ambient_dim()));
  }
  require_same_field(u.vectors(), v.vectors());
}

}  // namespace detail

/// U ∩ V from the kernel of [U | -V].
template <FieldElement K>
SubspaceBasis<K> subspace_intersect(const SubspaceBasis<K>& u, const SubspaceBasis<K>& v) {
  detail::require_same_ambient(u, v);
  const K minus_one = -K::one(u.field());
  auto kernel = nullspace_basis(hconcat(u.vectors(), minus_one * v.vectors()));
  const Matrix<K> coeffs = kernel.vectors().block(0, 0, u.dim(), kernel.dim());
  return SubspaceBasis<K>::span_of(u.vectors() * coeffs);
}

template <FieldElement K>
SubspaceBasis<K> subspace_sum(const SubspaceBasis<K>& u, const SubspaceBasis<K>& v) {
  detail::require_same_ambient(u, v);
  return SubspaceBasis<K>::span_of(hconcat(u.vectors(), v.vectors()));
}

template <FieldElement K>
std::size_t subspace_sum_dim(const SubspaceBasis<K>& u, const SubspaceBasis<K>& v) {
  detail::require_same_ambient(u, v);
  return rank(hconcat(u.vectors(), v.vectors()));
}

/// Appends columns of `candidates`, scanned left to right, that are
/// independent of everything chosen so far, stopping once `target` columns
/// are held. `base` must have independent columns.
template <FieldElement K>
Matrix<K> extend_independent(const Matrix<K>& base, const Matrix<K>& candidates, std::size_t target) {
  Matrix<K> out = base;
  std::size_t have = base.cols();
  for (std::size_t j = 0; j < candidates.cols() && have < target; ++j) {
    Matrix<K> trial = hconcat(out, candidates.column(j));
    if (rank(trial) == have + 1) {
      out = std::move(trial);
      ++have;
    }
  }
  return out;
}

/// Extends independent columns to a basis of the ambient space using
/// standard basis vectors in ascending index order.
template <FieldElement K>
Matrix<K> extend_to_basis(const Matrix<K>& independent) {
  const std::size_t n = independent.rows();
  return extend_independent(independent, Matrix<K>::identity(n, independent.field()), n);
}

}  // namespace quadprod

#endif  // QUADPROD_SUBSPACE_HPP
