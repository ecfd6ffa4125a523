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

// Factor a small matrix over GF(5) into an idempotent followed by two
// square-zero matrices, then check the result independently.

#include <iostream>

#include "quadprod/quadprod.hpp"

int main() {
  using quadprod::Field;
  using quadprod::Matrix;
  using quadprod::Residue;

  const Field gf5 = Field::prime(5);
  // Similar to 0_1 ⊕ J_2(0): rank 1, nullity 2, n0 = 1.
  const auto g = Matrix<Residue>::from_rows(gf5, {{1, 1, 0}, {4, 4, 0}, {2, 2, 0}});

  const auto rep = quadprod::invariant_report(g);
  std::cout << "rank=" << rep.rank << " nullity=" << rep.nullity << " n0=" << rep.n0 << '\n';

  const auto spec = quadprod::FactorSpec<Residue>::unit({1}, {2, 2}, gf5);
  const auto decision = quadprod::decide(g, spec);
  for (const auto& c : decision.conditions) std::cout << c.id << ": " << c.describe() << '\n';
  if (!decision.feasible) return 1;

  const auto witness = quadprod::factor(g, spec);
  quadprod::write_witness(std::cout, witness);
  const bool ok = quadprod::verify_witness(g, witness).passed();
  std::cout << (ok ? "verified" : "rejected") << '\n';
  return ok ? 0 : 1;
}
