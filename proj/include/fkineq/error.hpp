// Copyright 2026 The fkineq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FKINEQ_ERROR_HPP
#define FKINEQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fkineq {

enum class ErrorKind {
  kShape,            // dimension mismatch, non-square input
  kHermiticity,      // input fails the Hermitian symmetry check
  kDomain,           // eigenvalue or scalar outside a function's domain
  kRegularity,       // a matrix that must be invertible / PD is not
  kSpecification,    // malformed map, partition, function or sampler config
  kPrecondition,     // a verifier's hypothesis does not hold for the input
  kIllConditioned,   // condition number above the hard cap
  kNumerical,        // solver failure or failed internal self-check
  kParse,            // text input could not be parsed
  kInput,            // other invalid arguments (coincident points, ...)
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by functional calculus when an eigenvalue falls outside the
/// function's domain; carries the offending eigenvalue.
class DomainError : public Error {
 public:
  DomainError(double eigenvalue, const std::string& what)
      : Error(ErrorKind::kDomain, what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

}  // namespace fkineq

#endif  // FKINEQ_ERROR_HPP
