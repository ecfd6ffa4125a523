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

#ifndef QUADPROD_ERROR_HPP
#define QUADPROD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadprod {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  InvalidModulus,
  ParseError,
  ShapeMismatch,
  SingularMatrix,
  NotSquare,
  AmbientMismatch,
  NotNilpotent,
  BadBlockSize,
  BadParameters,
  Infeasible,
  BadRank,
  ConstructionError,
  UnsupportedFactorShape,
  ZeroScalar,
  NotScaledIdempotent,
  InvalidSpec,
  DomainTooLarge,
  BadTarget,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::ParseError: return "ParseError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSquare: return "NotSquare";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::BadBlockSize: return "BadBlockSize";
    case Errc::BadParameters: return "BadParameters";
    case Errc::Infeasible: return "Infeasible";
    case Errc::BadRank: return "BadRank";
    case Errc::ConstructionError: return "ConstructionError";
    case Errc::UnsupportedFactorShape: return "UnsupportedFactorShape";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotScaledIdempotent: return "NotScaledIdempotent";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::DomainTooLarge: return "DomainTooLarge";
    case Errc::BadTarget: return "BadTarget";
  }
  return "Unknown";
}

/// All library failures are reported as this exception; `code()` tells them apart.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quadprod

#endif  // QUADPROD_ERROR_HPP
