/* Copyright 2026 The hasse-forms Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "hasse_forms/error.hpp"

namespace hasse_forms {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kCtxMismatch: return "CtxMismatch";
    case ErrorKind::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::kSingularModel: return "SingularModel";
    case ErrorKind::kUnsupportedModel: return "UnsupportedModel";
    case ErrorKind::kFieldTooLarge: return "FieldTooLarge";
    case ErrorKind::kZeroTwistParameter: return "ZeroTwistParameter";
    case ErrorKind::kWrongJInvariant: return "WrongJInvariant";
    case ErrorKind::kBadCongruence: return "BadCongruence";
    case ErrorKind::kZeroElement: return "ZeroElement";
  }
  return "Unknown";
}

}  // namespace hasse_forms
