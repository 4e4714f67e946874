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

#include "fkineq/error.hpp"

#include <string>

#include "fkineq/tolerance.hpp"

namespace fkineq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kHermiticity: return "hermiticity";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kRegularity: return "regularity";
    case ErrorKind::kSpecification: return "specification";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kIllConditioned: return "ill-conditioned";
    case ErrorKind::kNumerical: return "numerical";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInput: return "input";
  }
  return "unknown";
}

void ToleranceConfig::validate() const {
  const auto check = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1e-3)) {
      throw Error(ErrorKind::kSpecification,
                  std::string(name) + " must lie in [0, 1e-3], got " + std::to_string(v));
    }
  };
  check(hermiticity_tol, "hermiticity_tol");
  check(psd_tol, "psd_tol");
  check(singular_tol, "singular_tol");
  check(equality_tol, "equality_tol");
  check(membership_tol, "membership_tol");
  check(violation_tol, "violation_tol");
}

}  // namespace fkineq
