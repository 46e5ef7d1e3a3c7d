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

#ifndef HASSE_FORMS_ERROR_HPP_
#define HASSE_FORMS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hasse_forms {

enum class ErrorKind {
  kNotPrime,
  kEvenCharacteristic,
  kDegreeTooLarge,
  kDivisionByZero,
  kCtxMismatch,
  kZeroPolynomial,
  kSingularModel,
  kUnsupportedModel,
  kFieldTooLarge,
  kZeroTwistParameter,
  kWrongJInvariant,
  kBadCongruence,
  kZeroElement,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind, so callers (the CLI in particular) can map kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hasse_forms

#endif  // HASSE_FORMS_ERROR_HPP_
