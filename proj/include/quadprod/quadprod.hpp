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

#ifndef QUADPROD_QUADPROD_HPP
#define QUADPROD_QUADPROD_HPP

#include "quadprod/error.hpp"
#include "quadprod/factor.hpp"
#include "quadprod/field.hpp"
#include "quadprod/invariants.hpp"
#include "quadprod/io.hpp"
#include "quadprod/matrix.hpp"
#include "quadprod/oracle.hpp"
#include "quadprod/subspace.hpp"

#endif  // QUADPROD_QUADPROD_HPP
