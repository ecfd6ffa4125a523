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

#ifndef QUADPROD_ORACLE_HPP
#define QUADPROD_ORACLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadprod/factor.hpp"
#include "quadprod/invariants.hpp"
#include "quadprod/matrix.hpp"
#include "quadprod/subspace.hpp"

namespace quadprod {

/// All n x n matrices over a small prime field, capped at 2^24 elements.
struct EnumerationDomain {
  Field field = Field::prime(2);
  std::size_t n = 0;

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

  std::uint64_t size() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= field.modulus();
      if (total > kMaxSize) return kMaxSize + 1;
    }
    return total;
  }

  void validate() const {
    if (field.is_rationals()) throw Error(Errc::DomainTooLarge, "cannot enumerate matrices over Q");
    if (size() > kMaxSize) {
      throw Error(Errc::DomainTooLarge, field.to_string() + " with n=" + std::to_string(n) + " exceeds 2^24 matrices");
    }
  }
};

struct MatrixProperty {
  enum class Kind { Idempotent, SquareZero, NullityEq, All };
  Kind kind = Kind::All;
  std::size_t nullity = 0;

  static MatrixProperty idempotent() { return {Kind::Idempotent, 0}; }
  static MatrixProperty square_zero() { return {Kind::SquareZero, 0}; }
  static MatrixProperty nullity_eq(std::size_t t) { return {Kind::NullityEq, t}; }
  static MatrixProperty all() { return {Kind::All, 0}; }
};

struct Mismatch {
  Matrix<Residue> g;
  bool in_product_set = false;
  bool decided_feasible = false;
};

/// Brute-force ground truth over one EnumerationDomain.
///
/// A matrix is identified by its code: the row-major entry list read as a
/// base-p number, first entry most significant. Rows get their own base-p
/// codes so that a left product E*X is assembled row by row from a table of
/// all linear combinations of the rows of X. Product sets are memoized by
/// suffix, so sweeping many specs reuses the shared right-hand stages.
class SmallFieldOracle {
 public:
  using Code = std::uint32_t;

  explicit SmallFieldOracle(EnumerationDomain dom) : dom_(dom) {
    dom_.validate();
    p_ = dom_.field.modulus();
    n_ = dom_.n;
    row_count_ = 1;
    for (std::size_t i = 0; i < n_; ++i) row_count_ *= p_;
    total_ = 1;
    for (std::size_t i = 0; i < n_; ++i) total_ *= row_count_;
    row_add_.resize(std::size_t{row_count_} * row_count_);
    row_scale_.resize(std::size_t{p_} * row_count_);
    for (Code a = 0; a < row_count_; ++a) {
      for (Code b = 0; b < row_count_; ++b) {
        Code sum = 0, pa = a, pb = b, place = 1;
        for (std::size_t d = 0; d < n_; ++d) {
          sum += ((pa % p_ + pb % p_) % p_) * place;
          pa /= p_;
          pb /= p_;
          place *= p_;
        }
        row_add_[std::size_t{a} * row_count_ + b] = sum;
      }
      for (Code c = 0; c < p_; ++c) {
        Code prod = 0, pa = a, place = 1;
        for (std::size_t d = 0; d < n_; ++d) {
          prod += ((pa % p_) * c % p_) * place;
          pa /= p_;
          place *= p_;
        }
        row_scale_[std::size_t{c} * row_count_ + a] = prod;
      }
    }
  }

  const EnumerationDomain& domain() const noexcept { return dom_; }
  std::uint64_t size() const noexcept { return total_; }

  Code encode(const Matrix<Residue>& m) const {
    if (m.rows() != n_ || m.cols() != n_ || m.field() != dom_.field) {
      throw Error(Errc::ShapeMismatch, "matrix is outside the enumeration domain");
    }
    Code code = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) code = code * p_ + m(i, j).value();
    return code;
  }

  Matrix<Residue> decode(Code code) const {
    Matrix<Residue> m(n_, n_, dom_.field);
    for (std::size_t idx = n_ * n_; idx-- > 0;) {
      m(idx / n_, idx % n_) = Residue::from_integer(code % p_, dom_.field);
      code /= p_;
    }
    return m;
  }

  /// Complete list in ascending code order.
  std::vector<Code> enumerate_codes(const MatrixProperty& prop) {
    switch (prop.kind) {
      case MatrixProperty::Kind::All: {
        std::vector<Code> out(total_);
        for (Code c = 0; c < total_; ++c) out[c] = c;
        return out;
      }
      case MatrixProperty::Kind::NullityEq: {
        std::vector<Code> out;
        for (Code c = 0; c < total_; ++c)
          if (nullity_of(c) == prop.nullity) out.push_back(c);
        return out;
      }
      case MatrixProperty::Kind::Idempotent:
      case MatrixProperty::Kind::SquareZero: {
        classify();
        const auto& by_nullity =
            prop.kind == MatrixProperty::Kind::Idempotent ? idempotents_by_nullity_ : square_zero_by_nullity_;
        std::vector<Code> out;
        for (const auto& v : by_nullity) out.insert(out.end(), v.begin(), v.end());
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    return {};
  }

  std::vector<Matrix<Residue>> enumerate(const MatrixProperty& prop) {
    std::vector<Matrix<Residue>> out;
    for (Code c : enumerate_codes(prop)) out.push_back(decode(c));
    return out;
  }

  /// Every product (c_1 E_1) ... (c_k E_k) Z_1 ... Z_l with the prescribed
  /// roles and nullities, as ascending codes.
  const std::vector<Code>& product_set_codes(const FactorSpec<Residue>& spec) {
    check_spec(spec);
    std::vector<Stage> stages;
    for (std::size_t i = 0; i < spec.k(); ++i) stages.push_back({false, spec.idem_nullities[i], spec.scalars[i].value()});
    for (std::size_t j = 0; j < spec.l(); ++j) stages.push_back({true, spec.sqz_nullities[j], 1});
    return suffix_set(stages, 0);
  }

  std::vector<Matrix<Residue>> product_set(const FactorSpec<Residue>& spec) {
    std::vector<Matrix<Residue>> out;
    for (Code c : product_set_codes(spec)) out.push_back(decode(c));
    return out;
  }

  /// Disagreements between product-set membership and decide(), over every
  /// matrix of the domain.
  std::vector<Mismatch> cross_check(const FactorSpec<Residue>& spec) {
    check_spec(spec);
    const auto& codes = product_set_codes(spec);
    std::vector<bool> member(total_, false);
    for (Code c : codes) member[c] = true;
    const Residue c = spec.combined_scalar(dom_.field);
    std::vector<Mismatch> out;
    for (Code code = 0; code < total_; ++code) {
      const DecisionInputs& in = inputs_for(code, spec.l() == 0 ? std::optional<Residue>(c) : std::nullopt);
      const bool feasible = evaluate_conditions(in, spec).feasible;
      if (feasible != member[code]) out.push_back({decode(code), member[code], feasible});
    }
    return out;
  }

  /// Rank by plain Gaussian elimination on the digits, independent of the
  /// library's rref.
  std::size_t rank_of(Code code) const {
    std::vector<std::uint32_t> a(n_ * n_);
    for (std::size_t idx = n_ * n_; idx-- > 0;) {
      a[idx] = code % p_;
      code /= p_;
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < n_; ++col) {
      std::size_t piv = r;
      while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
      if (piv == n_) continue;
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[r * n_ + j]);
      const std::uint32_t inv = small_inverse(a[r * n_ + col]);
      for (std::size_t i = r + 1; i < n_; ++i) {
        const std::uint32_t f = a[i * n_ + col] * inv % p_;
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] = (a[i * n_ + j] + (p_ - f) * a[r * n_ + j]) % p_;
      }
      ++r;
    }
    return r;
  }

  std::size_t nullity_of(Code code) const { return n_ - rank_of(code); }

  Code multiply(Code a, Code b) const {
    const auto comb = combinations(b);
    return left_apply(rows_of(a), comb);
  }

  Code identity_code() const {
    Code code = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) code = code * p_ + (i == j ? 1 : 0);
    return code;
  }

 private:
  struct Stage {
    bool square_zero;
    std::size_t nullity;
    std::uint32_t scalar;
  };

  void check_spec(const FactorSpec<Residue>& spec) const {
    spec.validate();
    for (const auto& c : spec.scalars) {
      if (c.field() != dom_.field) throw Error(Errc::FieldMismatch, "spec scalars over a different field");
    }
  }

  std::uint32_t small_inverse(std::uint32_t a) const {
    for (std::uint32_t x = 1; x < p_; ++x)
      if (a * x % p_ == 1) return x;
    throw Error(Errc::DivisionByZero, "inverse of zero");
  }

  std::vector<Code> rows_of(Code code) const {
    std::vector<Code> rows(n_);
    for (std::size_t i = n_; i-- > 0;) {
      rows[i] = code % row_count_;
      code /= row_count_;
    }
    return rows;
  }

  /// comb[c] = sum_j c_j * row_j(X), for every coefficient row code c whose
  /// digit for row j sits at place p^(n-1-j).
  std::vector<Code> combinations(Code x) const {
    const auto rows = rows_of(x);
    std::vector<Code> comb(row_count_, 0);
    for (Code c = 1; c < row_count_; ++c) {
      Code place = 1;
      std::size_t t = 0;
      while ((c / place) % p_ == 0) {
        place *= p_;
        ++t;
      }
      const Code digit = (c / place) % p_;
      const Code term = row_scale_[std::size_t{digit} * row_count_ + rows[n_ - 1 - t]];
      comb[c] = row_add_[std::size_t{comb[c - digit * place]} * row_count_ + term];
    }
    return comb;
  }

  Code left_apply(const std::vector<Code>& left_rows, const std::vector<Code>& comb) const {
    Code code = 0;
    for (std::size_t i = 0; i < n_; ++i) code = code * row_count_ + comb[left_rows[i]];
    return code;
  }

  Code scale(Code code, std::uint32_t c) const {
    auto rows = rows_of(code);
    Code out = 0;
    for (std::size_t i = 0; i < n_; ++i) out = out * row_count_ + row_scale_[std::size_t{c} * row_count_ + rows[i]];
    return out;
  }

  void classify() {
    if (classified_) return;
    idempotents_by_nullity_.assign(n_ + 1, {});
    square_zero_by_nullity_.assign(n_ + 1, {});
    for (Code c = 0; c < total_; ++c) {
      const Code sq = multiply(c, c);
      if (sq == c) idempotents_by_nullity_[nullity_of(c)].push_back(c);
      if (sq == 0) square_zero_by_nullity_[nullity_of(c)].push_back(c);
    }
    classified_ = true;
  }

  const std::vector<Code>& suffix_set(const std::vector<Stage>& stages, std::size_t from) {
    std::string key;
    for (std::size_t i = from; i < stages.size(); ++i) {
      key += (stages[i].square_zero ? "Z" : "E") + std::to_string(stages[i].nullity) + "c" +
             std::to_string(stages[i].scalar) + ";";
    }
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
    std::vector<Code> result;
    if (from == stages.size()) {
      result.push_back(identity_code());
    } else {
      const auto& right = suffix_set(stages, from + 1);
      classify();
      const Stage& st = stages[from];
      std::vector<std::vector<Code>> factor_rows;
      if (st.nullity <= n_) {
        const auto& pool = st.square_zero ? square_zero_by_nullity_[st.nullity] : idempotents_by_nullity_[st.nullity];
        for (Code f : pool) factor_rows.push_back(rows_of(st.scalar == 1 ? f : scale(f, st.scalar)));
      }
      std::vector<bool> seen(total_, false);
      for (Code x : right) {
        const auto comb = combinations(x);
        for (const auto& fr : factor_rows) seen[left_apply(fr, comb)] = true;
      }
      for (Code c = 0; c < total_; ++c)
        if (seen[c]) result.push_back(c);
    }
    auto stored = std::make_unique<std::vector<Code>>(std::move(result));
    const auto& ref = *stored;
    memo_.emplace(std::move(key), std::move(stored));
    return ref;
  }

  const DecisionInputs& inputs_for(Code code, std::optional<Residue> c) {
    if (reports_.empty()) reports_.resize(total_);
    auto& slot = reports_[code];
    if (!slot) {
      slot.emplace();
      slot->report = invariant_report(decode(code));
    }
    if (!c) return *slot;
    auto& per_c = scaled_[c->value()];
    if (per_c.empty()) per_c.resize(total_);
    auto& s = per_c[code];
    if (!s) {
      s.emplace(*slot);
      fill_scaled_inputs(*s, decode(code), *c);
    }
    return *s;
  }

  EnumerationDomain dom_;
  std::uint32_t p_ = 2;
  std::size_t n_ = 0;
  Code row_count_ = 1;
  Code total_ = 1;
  std::vector<Code> row_add_;
  std::vector<Code> row_scale_;
  bool classified_ = false;
  std::vector<std::vector<Code>> idempotents_by_nullity_;
  std::vector<std::vector<Code>> square_zero_by_nullity_;
  std::map<std::string, std::unique_ptr<std::vector<Code>>> memo_;
  std::vector<std::optional<DecisionInputs>> reports_;
  std::map<std::uint32_t, std::vector<std::optional<DecisionInputs>>> scaled_;
};

inline std::vector<Matrix<Residue>> enumerate_with_property(const EnumerationDomain& dom, const MatrixProperty& prop) {
  return SmallFieldOracle(dom).enumerate(prop);
}

inline std::vector<Matrix<Residue>> product_set(const EnumerationDomain& dom, const FactorSpec<Residue>& spec) {
  return SmallFieldOracle(dom).product_set(spec);
}

inline std::vector<Mismatch> cross_check(const EnumerationDomain& dom, const FactorSpec<Residue>& spec) {
  return SmallFieldOracle(dom).cross_check(spec);
}

/// Rank inequalities for G = H * F with F = Z_1 * Z_2 a product of two
/// square-zero matrices and H arbitrary. Every bound below holds for all
/// such triples; the struct records the integers so a test can compare them.
struct ProductInequalities {
  std::size_t rank_g = 0;
  std::size_t n0_g = 0;
  std::size_t rank_f = 0;
  std::size_t nullity_f = 0;
  std::size_t dim_rg_cap_nf = 0;        // dim(R(G) ∩ N(F))
  std::size_t dim_rg_cap_rf_cap_nf = 0; // dim(R(G) ∩ R(F) ∩ N(F))
  std::size_t rank_i_minus_h = 0;

  /// dim(R(G) ∩ N(F)) >= n(F) - n0(G).
  bool kernel_overlap_bound() const { return dim_rg_cap_nf + n0_g >= nullity_f; }
  /// R(G) ∩ N(F) lies inside R(F) (equal dimensions, one space contains the other).
  bool overlap_inside_range() const { return dim_rg_cap_nf == dim_rg_cap_rf_cap_nf; }
  /// If R(G) ∩ N(F) lies inside R(F), then r(G) <= n0(G).
  bool contained_overlap_bound() const { return !overlap_inside_range() || rank_g <= n0_g; }
  /// r(G) <= n0(G) + r(I - H).
  bool rank_bound() const { return rank_g <= n0_g + rank_i_minus_h; }

  bool holds() const { return kernel_overlap_bound() && contained_overlap_bound() && rank_bound(); }
};

template <FieldElement K>
ProductInequalities product_inequalities(const Matrix<K>& h, const Matrix<K>& z1, const Matrix<K>& z2) {
  detail::require_square(h, "product_inequalities");
  if (!is_square_zero(z1) || !is_square_zero(z2)) {
    throw Error(Errc::BadParameters, "product_inequalities needs square-zero Z_1 and Z_2");
  }
  const Matrix<K> f = z1 * z2;
  const Matrix<K> g = h * f;
  const auto rg = colspace_basis(g);
  const auto nf = nullspace_basis(f);
  const auto rg_nf = subspace_intersect(rg, nf);
  ProductInequalities out;
  out.rank_g = rg.dim();
  out.n0_g = n0(g);
  out.rank_f = rank(f);
  out.nullity_f = nf.dim();
  out.dim_rg_cap_nf = rg_nf.dim();
  out.dim_rg_cap_rf_cap_nf = subspace_intersect(rg_nf, colspace_basis(f)).dim();
  out.rank_i_minus_h = rank(Matrix<K>::identity(h.rows(), h.field()) - h);
  return out;
}

/// std::mt19937_64 with plain modular reduction, so a seed yields the same
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue over GF(p); an integer in [-magnitude, magnitude] over Q.
template <FieldElement K>
K random_scalar(Rng& rng, const Field& field, std::int64_t magnitude = 10) {
  if (field.is_rationals()) return K::from_integer(rng.between(-magnitude, magnitude), field);
  return K::from_integer(static_cast<std::int64_t>(rng.below(field.modulus())), field);
}

template <FieldElement K>
K random_nonzero_scalar(Rng& rng, const Field& field, std::int64_t magnitude = 10) {
  while (true) {
    K x = random_scalar<K>(rng, field, magnitude);
    if (!x.is_zero()) return x;
  }
}

template <FieldElement K>
Matrix<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const Field& field,
                        std::int64_t magnitude = 10) {
  Matrix<K> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<K>(rng, field, magnitude);
  return m;
}

/// Rejection sampling on random entries.
template <FieldElement K>
Matrix<K> random_invertible(Rng& rng, std::size_t n, const Field& field, std::int64_t magnitude = 10) {
  while (true) {
    Matrix<K> s = random_matrix<K>(rng, n, n, field, magnitude);
    if (is_invertible(s)) return s;
  }
}

/// Requested similarity class: 0_{zero_blocks} ⊕ J_{k_1}(0) ⊕ ... ⊕ B.
template <FieldElement K>
struct RandomTarget {
  std::size_t zero_blocks = 0;
  std::vector<std::size_t> jordan_blocks;
  Matrix<K> invertible_part;
};

template <FieldElement K>
struct RandomInstance {
  std::uint64_t seed = 0;
  Matrix<K> g;
  Matrix<K> canonical;
  Matrix<K> transform;  // g = transform * canonical * transform^-1
};

template <FieldElement K>
RandomInstance<K> random_instance(std::uint64_t seed, const Field& field, std::size_t n,
                                  const RandomTarget<K>& target, std::int64_t magnitude = 3) {
  std::size_t total = target.zero_blocks + target.invertible_part.rows();
  for (std::size_t k : target.jordan_blocks) {
    if (k < 2) throw Error(Errc::BadTarget, "Jordan blocks must have size >= 2; use zero_blocks for size 1");
    total += k;
  }
  if (total != n) throw Error(Errc::BadTarget, "target sizes sum to " + std::to_string(total) + ", not " + std::to_string(n));
  if (target.invertible_part.field() != field || !is_invertible(target.invertible_part)) {
    throw Error(Errc::BadTarget, "invertible part must be a square invertible matrix over " + field.to_string());
  }
  RandomInstance<K> out;
  out.seed = seed;
  out.canonical = block_diag({nilpotent_canonical<K>(target.zero_blocks, target.jordan_blocks, field),
                              target.invertible_part},
                             field);
  Rng rng(seed);
  out.transform = random_invertible<K>(rng, n, field, magnitude);
  out.g = conjugate(out.transform, out.canonical);
  return out;
}

}  // namespace quadprod

#endif  // QUADPROD_ORACLE_HPP
