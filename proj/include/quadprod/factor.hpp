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

#ifndef QUADPROD_FACTOR_HPP
#define QUADPROD_FACTOR_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quadprod/invariants.hpp"
#include "quadprod/matrix.hpp"
#include "quadprod/subspace.hpp"

namespace quadprod {

/// Requested shape: G = (c_1 E_1) ... (c_k E_k) Z_1 ... Z_l with
/// n(E_i) = idem_nullities[i], n(Z_j) = sqz_nullities[j], l <= 2.
template <FieldElement K>
struct FactorSpec {
  std::vector<std::size_t> idem_nullities;
  std::vector<K> scalars;
  std::vector<std::size_t> sqz_nullities;

  /// Spec with every scalar equal to 1.
  static FactorSpec unit(std::vector<std::size_t> idem, std::vector<std::size_t> sqz, const Field& field) {
    FactorSpec s;
    s.scalars.assign(idem.size(), K::one(field));
    s.idem_nullities = std::move(idem);
    s.sqz_nullities = std::move(sqz);
    return s;
  }

  std::size_t k() const noexcept { return idem_nullities.size(); }
  std::size_t l() const noexcept { return sqz_nullities.size(); }

  void validate() const {
    if (scalars.size() != idem_nullities.size()) {
      throw Error(Errc::InvalidSpec, std::to_string(scalars.size()) + " scalars for " +
                                         std::to_string(idem_nullities.size()) + " idempotent factors");
    }
    for (const K& c : scalars) {
      if (c.is_zero()) throw Error(Errc::ZeroScalar, "idempotent scalars must be nonzero");
    }
    if (sqz_nullities.size() > 2) {
      throw Error(Errc::UnsupportedFactorShape,
                  "no feasibility condition is available for " + std::to_string(sqz_nullities.size()) +
                      " square-zero factors");
    }
  }

  /// c = (c_1 ... c_k)^-1; 1 for an empty list.
  K combined_scalar(const Field& field) const {
    K prod = K::one(field);
    for (const K& c : scalars) prod = prod * c;
    return prod.inverse();
  }

  std::size_t idem_sum() const { return std::accumulate(idem_nullities.begin(), idem_nullities.end(), std::size_t{0}); }
};

enum class Relation { LessEqual, GreaterEqual };

/// One inequality with both sides evaluated.
struct ConditionReport {
  std::string id;
  std::string lhs_label;
  long long lhs = 0;
  Relation relation = Relation::LessEqual;
  std::string rhs_label;
  long long rhs = 0;
  bool passed = false;

  /// e.g. "r(G)=1 > 0=sum(n_i)+n0(G)".
  std::string describe() const {
    std::string op;
    if (relation == Relation::LessEqual) {
      op = passed ? "<=" : ">";
    } else {
      op = passed ? ">=" : "<";
    }
    return lhs_label + "=" + std::to_string(lhs) + " " + op + " " + std::to_string(rhs) + "=" + rhs_label;
  }
};

enum class Constructive { Full, DecisionOnly };

struct Decision {
  bool feasible = false;
  std::vector<ConditionReport> conditions;
  Constructive constructive = Constructive::DecisionOnly;
};

/// Quantities the feasibility conditions depend on. `rank_i_minus_cg` and
/// `cg_idempotent` are only consulted when l = 0.
struct DecisionInputs {
  InvariantReport report;
  std::size_t rank_i_minus_cg = 0;
  bool cg_idempotent = false;
};

namespace detail {

inline ConditionReport make_condition(std::string id, std::string lhs_label, std::size_t lhs, Relation rel,
                                      std::string rhs_label, std::size_t rhs) {
  ConditionReport c{std::move(id), std::move(lhs_label), static_cast<long long>(lhs), rel,
                    std::move(rhs_label), static_cast<long long>(rhs), false};
  c.passed = rel == Relation::LessEqual ? c.lhs <= c.rhs : c.lhs >= c.rhs;
  return c;
}

}  // namespace detail

/// Evaluates the case-appropriate conditions from precomputed invariants.
template <FieldElement K>
Decision evaluate_conditions(const DecisionInputs& in, const FactorSpec<K>& spec) {
  spec.validate();
  const InvariantReport& rep = in.report;
  Decision d;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::string idx = std::to_string(i + 1);
    d.conditions.push_back(detail::make_condition("idem_nullity_" + idx, "n_" + idx, spec.idem_nullities[i],
                                                  Relation::LessEqual, "n(G)", rep.nullity));
  }
  for (std::size_t j = 0; j < spec.l(); ++j) {
    const std::string idx = std::to_string(j + 1);
    d.conditions.push_back(detail::make_condition("sqz_nullity_" + idx, "m_" + idx, spec.sqz_nullities[j],
                                                  Relation::LessEqual, "n(G)", rep.nullity));
  }
  for (std::size_t j = 0; j < spec.l(); ++j) {
    const std::string idx = std::to_string(j + 1);
    d.conditions.push_back(detail::make_condition("sqz_half_" + idx, "2*m_" + idx, 2 * spec.sqz_nullities[j],
                                                  Relation::GreaterEqual, "n", rep.order));
  }
  const std::size_t sum = spec.idem_sum();
  switch (spec.l()) {
    case 0:
      d.conditions.push_back(detail::make_condition("rank_i_minus_cg", "r(I-cG)", in.rank_i_minus_cg,
                                                    Relation::LessEqual, "sum(n_i)", sum));
      break;
    case 1:
      d.conditions.push_back(detail::make_condition("range_plus_null", "dim(R(G)+N(G))", rep.dim_range_plus_null,
                                                    Relation::LessEqual, "sum(n_i)+m_1",
                                                    sum + spec.sqz_nullities[0]));
      break;
    default:
      d.conditions.push_back(detail::make_condition("rank", "r(G)", rep.rank, Relation::LessEqual,
                                                    "sum(n_i)+n0(G)", sum + rep.n0));
      break;
  }
  d.feasible = std::all_of(d.conditions.begin(), d.conditions.end(), [](const auto& c) { return c.passed; });
  const bool full = spec.l() == 2 || (spec.l() == 0 && in.cg_idempotent);
  d.constructive = full ? Constructive::Full : Constructive::DecisionOnly;
  return d;
}

/// r(I - cG) and idempotency of cG for c = (c_1 ... c_k)^-1.
template <FieldElement K>
void fill_scaled_inputs(DecisionInputs& in, const Matrix<K>& g, const K& c) {
  const Matrix<K> cg = c * g;
  in.rank_i_minus_cg = rank(Matrix<K>::identity(g.rows(), g.field()) - cg);
  in.cg_idempotent = is_idempotent(cg);
}

template <FieldElement K>
Decision decide(const Matrix<K>& g, const FactorSpec<K>& spec) {
  detail::require_square(g, "decide");
  spec.validate();
  for (const K& c : spec.scalars) {
    if (c.field() != g.field()) throw Error(Errc::FieldMismatch, "scalar field differs from matrix field");
  }
  DecisionInputs in;
  in.report = invariant_report(g);
  if (spec.l() == 0) fill_scaled_inputs(in, g, spec.combined_scalar(g.field()));
  return evaluate_conditions(in, spec);
}

enum class FactorRole { Idempotent, ScaledIdempotent, SquareZero };

inline std::string role_name(FactorRole r) {
  switch (r) {
    case FactorRole::Idempotent: return "idempotent";
    case FactorRole::ScaledIdempotent: return "scaled-idempotent";
    case FactorRole::SquareZero: return "square-zero";
  }
  return "unknown";
}

template <FieldElement K>
struct WitnessFactor {
  Matrix<K> matrix;
  FactorRole role = FactorRole::Idempotent;
  std::size_t declared_nullity = 0;
  K scalar;

  friend bool operator==(const WitnessFactor&, const WitnessFactor&) = default;
};

/// Ordered factor list whose product is the target.
template <FieldElement K>
struct Witness {
  std::vector<WitnessFactor<K>> factors;

  Matrix<K> product(std::size_t n, const Field& field) const {
    Matrix<K> p = Matrix<K>::identity(n, field);
    for (const auto& f : factors) p = p * f.matrix;
    return p;
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FactorCheck {
  bool shape_ok = false;
  bool role_ok = false;
  bool nullity_ok = false;
  std::size_t actual_nullity = 0;

  bool passed() const { return shape_ok && role_ok && nullity_ok; }
};

struct VerificationReport {
  bool product_ok = false;
  std::vector<FactorCheck> factors;

  bool passed() const {
    return product_ok && std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.passed(); });
  }
};

/// Checks the literal product in the listed order, every role property and
/// every declared nullity. Failures are reported, never thrown.
template <FieldElement K>
VerificationReport verify_witness(const Matrix<K>& g, const Witness<K>& w) {
  VerificationReport rep;
  bool conformable = g.is_square();
  for (const auto& f : w.factors) {
    FactorCheck fc;
    fc.shape_ok = f.matrix.is_square() && f.matrix.rows() == g.rows() && f.matrix.field() == g.field() &&
                  f.scalar.field() == g.field();
    if (fc.shape_ok) {
      fc.actual_nullity = nullity(f.matrix);
      fc.nullity_ok = fc.actual_nullity == f.declared_nullity;
      switch (f.role) {
        case FactorRole::Idempotent:
          fc.role_ok = is_idempotent(f.matrix);
          break;
        case FactorRole::ScaledIdempotent:
          fc.role_ok = !f.scalar.is_zero() && is_idempotent(f.scalar.inverse() * f.matrix);
          break;
        case FactorRole::SquareZero:
          fc.role_ok = is_square_zero(f.matrix);
          break;
      }
    }
    conformable = conformable && fc.shape_ok;
    rep.factors.push_back(fc);
  }
  rep.product_ok = conformable && w.product(g.rows(), g.field()) == g;
  return rep;
}

template <FieldElement K>
struct FactorPair {
  Matrix<K> left;
  Matrix<K> right;
};

/// J_k(0) = E * F with E^2 = E, n(E) = 1, N(F) = N(J_k(0)), n0(F) = 1.
template <FieldElement K>
FactorPair<K> jordan_shuffle(std::size_t k, const Field& field) {
  if (k < 2) throw Error(Errc::BadBlockSize, "jordan_shuffle needs k >= 2, got " + std::to_string(k));
  const K one = K::one(field);
  Matrix<K> e(k, k, field), f(k, k, field);
  if (k == 2) {
    e(1, 0) = one;
    e(1, 1) = one;
    f(0, 0) = one;
  } else {
    // E = [0 0; e_{k-1} I_{k-1}],  F = [e_{k-1}^T 0; F_1 0] with F_1 = [I_{k-2}; 0].
    e(k - 1, 0) = one;
    for (std::size_t i = 1; i < k; ++i) e(i, i) = one;
    f(0, k - 2) = one;
    for (std::size_t i = 0; i < k - 2; ++i) f(i + 1, i) = one;
  }
  if (e * f != jordan_block<K>(k, field)) throw Error(Errc::ConstructionError, "jordan_shuffle product");
  return {std::move(e), std::move(f)};
}

/// J = J_{k_1}(0) ⊕ ... ⊕ J_{k_m}(0) = E * F with E^2 = E, n(E) = e_nullity,
/// N(F) = N(J), n0(F) = s. Requires s <= e_nullity <= m.
template <FieldElement K>
FactorPair<K> nilpotent_EF(const std::vector<std::size_t>& block_sizes, std::size_t s, std::size_t e_nullity,
                           const Field& field) {
  const std::size_t m = block_sizes.size();
  if (s > e_nullity || e_nullity > m) {
    throw Error(Errc::BadParameters, "need s <= e_nullity <= m, got s=" + std::to_string(s) +
                                         " e_nullity=" + std::to_string(e_nullity) + " m=" + std::to_string(m));
  }
  std::vector<Matrix<K>> es, fs;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = block_sizes[i];
    if (k < 2) throw Error(Errc::BadBlockSize, "Jordan blocks must have size >= 2");
    if (i < s) {
      auto p = jordan_shuffle<K>(k, field);
      es.push_back(std::move(p.left));
      fs.push_back(std::move(p.right));
    } else {
      Matrix<K> e = Matrix<K>::identity(k, field);
      if (i < e_nullity) e(0, 0) = K::zero(field);
      es.push_back(std::move(e));
      fs.push_back(jordan_block<K>(k, field));
    }
  }
  return {block_diag(std::span<const Matrix<K>>(es), field), block_diag(std::span<const Matrix<K>>(fs), field)};
}

/// Diagonal idempotents E_i = I_{n-t} ⊕ D_i whose product is I_{n-t} ⊕ 0_t.
/// D_i has n_i zeros laid down cyclically over the trailing t coordinates,
/// so the zero sets jointly cover all of them.
template <FieldElement K>
std::vector<Matrix<K>> idempotent_chain(std::size_t n, std::size_t t, const std::vector<std::size_t>& nullities,
                                        const Field& field) {
  if (nullities.empty()) throw Error(Errc::BadParameters, "idempotent_chain needs at least one factor");
  if (t > n) throw Error(Errc::Infeasible, "t exceeds the order");
  std::size_t sum = 0;
  for (std::size_t ni : nullities) {
    if (ni > t) throw Error(Errc::Infeasible, "nullity " + std::to_string(ni) + " exceeds n(H) = " + std::to_string(t));
    sum += ni;
  }
  if (sum < t) throw Error(Errc::Infeasible, "nullities sum to " + std::to_string(sum) + " < r(I-H) = " + std::to_string(t));

  std::vector<Matrix<K>> out;
  std::size_t cursor = 0;
  for (std::size_t ni : nullities) {
    Matrix<K> e = Matrix<K>::identity(n, field);
    for (std::size_t z = 0; z < ni; ++z) {
      e(n - t + (cursor % t), n - t + (cursor % t)) = K::zero(field);
      ++cursor;
    }
    out.push_back(std::move(e));
  }
  return out;
}

/// F = Z_1 * Z_2 with Z_1^2 = Z_2^2 = 0 and n(Z_i) = nz_i.
///
/// Basis bookkeeping (r = r(F), K = N(F), A = R(F) ∩ K):
///   V  complement of K (r vectors), so F*V is a basis of R(F);
///   C  complement of A inside K (n0(F) >= r vectors), split as U (first r) and C';
///   Q'' completes F*V ∪ U ∪ C' to a basis.
/// Base pair: Z_2 sends v_i to u_i and kills K; Z_1 sends u_i to F v_i and
/// kills F*V ∪ C' ∪ Q''. Extra rank comes from pairs x -> y added to Z_2
/// inside A ∪ C' and to Z_1 inside C' ∪ Q'', keeping Z_1 zero on the image
/// of Z_2.
template <FieldElement K>
FactorPair<K> squarezero_pair(const Matrix<K>& f, std::size_t nz1, std::size_t nz2) {
  detail::require_square(f, "squarezero_pair");
  const Field& field = f.field();
  const std::size_t n = f.rows();
  const auto range = colspace_basis(f);
  const auto kernel = nullspace_basis(f);
  const std::size_t r = range.dim();
  const auto overlap = subspace_intersect(range, kernel);
  const std::size_t a = overlap.dim();
  const std::size_t n0f = kernel.dim() - a;
  if (r > n0f) {
    throw Error(Errc::Infeasible, "r(F)=" + std::to_string(r) + " > " + std::to_string(n0f) + "=n0(F)");
  }
  for (std::size_t nz : {nz1, nz2}) {
    if (nz > n || n - nz < r || 2 * (n - nz) > n) {
      throw Error(Errc::BadRank, "nullity " + std::to_string(nz) + " gives a rank outside [r(F), n/2] = [" +
                                     std::to_string(r) + ", " + std::to_string(n / 2) + "]");
    }
  }
  const std::size_t d1 = (n - nz1) - r;
  const std::size_t d2 = (n - nz2) - r;

  // V: standard vectors completing a basis of K, in ascending index order.
  const Matrix<K> kv = extend_to_basis(kernel.vectors());
  const Matrix<K> vv = kv.block(0, kernel.dim(), n, r);
  const Matrix<K> fv = f * vv;
  const Matrix<K> ac = extend_independent(overlap.vectors(), kernel.vectors(), kernel.dim());
  const Matrix<K> cc = ac.block(0, a, n, n0f);
  const Matrix<K> uu = cc.block(0, 0, n, r);
  const Matrix<K> cprime = cc.block(0, r, n, n0f - r);
  const std::size_t c = cprime.cols();

  // Z_2 basis: V | A | U | C'.
  const Matrix<K> aa = overlap.vectors();
  const Matrix<K> basis2 = hconcat(hconcat(vv, aa), hconcat(uu, cprime));
  // Z_1 basis: F*V | U | C' | Q''.
  const Matrix<K> partial1 = hconcat(hconcat(fv, uu), cprime);
  const Matrix<K> basis1 = extend_to_basis(partial1);
  const Matrix<K> q2 = basis1.block(0, partial1.cols(), n, a);
  if (basis2.cols() != n || basis1.cols() != n) throw Error(Errc::ConstructionError, "basis size");

  // Images in the respective bases.
  Matrix<K> img2(n, n, field), img1(n, n, field);
  for (std::size_t i = 0; i < r; ++i) {
    img2.set_block(0, i, uu.column(i));            // v_i -> u_i
    img1.set_block(0, r + i, fv.column(i));        // u_i -> F v_i
  }
  // Z_2 pool M = A | C'.
  auto pool2_pos = [&](std::size_t idx) -> std::size_t { return idx < a ? r + idx : r + a + r + (idx - a); };
  auto pool2_vec = [&](std::size_t idx) -> Matrix<K> { return idx < a ? aa.column(idx) : cprime.column(idx - a); };
  for (std::size_t j = 0; j < d2; ++j) {
    // x = pool[d2 + j] -> y = pool[j]
    img2.set_block(0, pool2_pos(d2 + j), pool2_vec(j));
  }
  // C' vectors used as Z_2 images must stay in ker Z_1.
  const std::size_t yc = d2 > a ? d2 - a : 0;
  // Z_1 pool Q = C' | Q''; positions 2r + idx in basis1.
  auto pool1_vec = [&](std::size_t idx) -> Matrix<K> { return idx < c ? cprime.column(idx) : q2.column(idx - c); };
  const std::size_t x_start = std::max(d1, yc);
  if (x_start + d1 > c + a) throw Error(Errc::ConstructionError, "square-zero pool exhausted");
  for (std::size_t j = 0; j < d1; ++j) {
    img1.set_block(0, 2 * r + x_start + j, pool1_vec(j));
  }

  FactorPair<K> out{img1 * inverse(basis1), img2 * inverse(basis2)};
  if (!is_square_zero(out.left) || !is_square_zero(out.right) || out.left * out.right != f ||
      nullity(out.left) != nz1 || nullity(out.right) != nz2) {
    throw Error(Errc::ConstructionError, "square-zero pair failed self-check");
  }
  return out;
}

namespace detail {

/// P with P^-1 * E * P = I_{r(E)} ⊕ 0_{n(E)} for idempotent E.
template <FieldElement K>
Matrix<K> idempotent_eigenbasis(const Matrix<K>& e) {
  return hconcat(colspace_basis(e).vectors(), nullspace_basis(e).vectors());
}

template <FieldElement K>
Witness<K> checked(const Matrix<K>& g, Witness<K> w) {
  if (!verify_witness(g, w).passed()) throw Error(Errc::ConstructionError, "constructed witness failed verification");
  return w;
}

}  // namespace detail

/// G = E_1 ... E_k Z_1 Z_2 with n(E_i) = nullities[i], n(Z_j) = nz_j.
///
/// In a basis where G = 0_{n0} ⊕ J ⊕ B, write G = E * F with
/// E = H_1 ⊕ H_2 ⊕ I and F = 0_{n0} ⊕ F_2 ⊕ B, where J = H_2 F_2 has
/// n0(F_2) = s = max(r(G) - n0(G), 0). n(E) = max(max n_i, s), E splits
/// into the idempotent chain and F into the square-zero pair.
template <FieldElement K>
Witness<K> factor_theorem1(const Matrix<K>& g, const std::vector<std::size_t>& nullities, std::size_t nz1,
                           std::size_t nz2) {
  detail::require_square(g, "factor_theorem1");
  const Field& field = g.field();
  const std::size_t n = g.rows();
  const auto spec = FactorSpec<K>::unit(nullities, {nz1, nz2}, field);
  const Decision d = decide(g, spec);
  if (!d.feasible) {
    std::string why;
    for (const auto& c : d.conditions)
      if (!c.passed) why += (why.empty() ? "" : "; ") + c.describe();
    throw Error(Errc::Infeasible, why);
  }

  const auto fit = fitting(g);
  const auto nil = nilpotent_structure(fit.nilpotent);
  const std::size_t inv_dim = n - fit.nil_dim;
  const Matrix<K> s_total = fit.transform * block_diag({nil.transform, Matrix<K>::identity(inv_dim, field)}, field);

  const std::size_t zeros = nil.zero_block_count;
  const std::size_t m = nil.chain_count;
  const std::size_t r = rank(g);
  const std::size_t s = r > zeros ? r - zeros : 0;
  const std::size_t max_ni = nullities.empty() ? 0 : *std::max_element(nullities.begin(), nullities.end());
  const std::size_t e_total = std::max(max_ni, s);
  const std::size_t e_jordan = std::max(s, e_total > zeros ? e_total - zeros : 0);
  const std::size_t e_zero = e_total - e_jordan;
  if (e_jordan > m || e_zero > zeros) throw Error(Errc::ConstructionError, "nullity split out of range");

  Matrix<K> h1 = Matrix<K>::identity(zeros, field);
  for (std::size_t i = 0; i < e_zero; ++i) h1(i, i) = K::zero(field);
  const auto h2f2 = nilpotent_EF<K>(nil.block_sizes, s, e_jordan, field);
  const Matrix<K> e = block_diag({h1, h2f2.left, Matrix<K>::identity(inv_dim, field)}, field);
  const Matrix<K> f = block_diag({Matrix<K>::zero(zeros, zeros, field), h2f2.right, fit.invertible}, field);
  if (e * f != block_diag({nil.canonical(), fit.invertible}, field)) {
    throw Error(Errc::ConstructionError, "E * F does not reproduce the canonical form");
  }

  const Matrix<K> s_inv = inverse(s_total);
  auto to_original = [&](const Matrix<K>& x) { return s_total * x * s_inv; };

  Witness<K> w;
  if (!nullities.empty()) {
    const Matrix<K> p = detail::idempotent_eigenbasis(e);
    const Matrix<K> p_inv = inverse(p);
    const auto chain = idempotent_chain<K>(n, e_total, nullities, field);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      w.factors.push_back({to_original(p * chain[i] * p_inv), FactorRole::Idempotent, nullities[i], K::one(field)});
    }
  } else if (e_total != 0) {
    throw Error(Errc::ConstructionError, "empty idempotent chain with nonzero nullity");
  }
  const auto zz = squarezero_pair(f, nz1, nz2);
  w.factors.push_back({to_original(zz.left), FactorRole::SquareZero, nz1, K::one(field)});
  w.factors.push_back({to_original(zz.right), FactorRole::SquareZero, nz2, K::one(field)});
  return detail::checked(g, std::move(w));
}

/// G = (c_1 E_1) ... (c_k E_k) when cG is idempotent.
template <FieldElement K>
Witness<K> factor_scaled_idem(const Matrix<K>& g, const std::vector<std::size_t>& nullities,
                              const std::vector<K>& scalars) {
  detail::require_square(g, "factor_scaled_idem");
  const Field& field = g.field();
  FactorSpec<K> spec{nullities, scalars, {}};
  spec.validate();
  if (spec.k() == 0) throw Error(Errc::BadParameters, "factor_scaled_idem needs k >= 1");
  const Matrix<K> cg = spec.combined_scalar(field) * g;
  if (!is_idempotent(cg)) throw Error(Errc::NotScaledIdempotent, "cG is not idempotent");
  const Decision d = decide(g, spec);
  if (!d.feasible) throw Error(Errc::Infeasible, "conditions for the idempotent product fail");

  const std::size_t n = g.rows();
  const Matrix<K> p = detail::idempotent_eigenbasis(cg);
  const Matrix<K> p_inv = inverse(p);
  const auto chain = idempotent_chain<K>(n, nullity(cg), nullities, field);
  Witness<K> w;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const FactorRole role = scalars[i] == K::one(field) ? FactorRole::Idempotent : FactorRole::ScaledIdempotent;
    w.factors.push_back({scalars[i] * (p * chain[i] * p_inv), role, nullities[i], scalars[i]});
  }
  return detail::checked(g, std::move(w));
}

/// Dispatches on the spec: l = 2 goes through factor_theorem1 applied to cG,
/// l = 0 through factor_scaled_idem (or the empty product when k = 0).
/// Other shapes are decision-only and throw UnsupportedFactorShape.
template <FieldElement K>
Witness<K> factor(const Matrix<K>& g, const FactorSpec<K>& spec) {
  detail::require_square(g, "factor");
  spec.validate();
  const Field& field = g.field();
  if (spec.l() == 2) {
    const K c = spec.combined_scalar(field);
    Witness<K> w = factor_theorem1(c * g, spec.idem_nullities, spec.sqz_nullities[0], spec.sqz_nullities[1]);
    for (std::size_t i = 0; i < spec.k(); ++i) {
      if (spec.scalars[i] == K::one(field)) continue;
      w.factors[i].matrix = spec.scalars[i] * w.factors[i].matrix;
      w.factors[i].scalar = spec.scalars[i];
      w.factors[i].role = FactorRole::ScaledIdempotent;
    }
    return detail::checked(g, std::move(w));
  }
  if (spec.l() == 0) {
    if (spec.k() == 0) {
      if (g != Matrix<K>::identity(g.rows(), field)) throw Error(Errc::Infeasible, "empty product is I");
      return Witness<K>{};
    }
    return factor_scaled_idem(g, spec.idem_nullities, spec.scalars);
  }
  throw Error(Errc::UnsupportedFactorShape, "no construction is available for a single square-zero factor");
}

}  // namespace quadprod

#endif  // QUADPROD_FACTOR_HPP
