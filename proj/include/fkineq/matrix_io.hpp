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

// Plain-text matrix format shared by every tool:
//
//   n m
//   re,im re,im ...      (n lines of m entries)
//
// Numbers are written with the shortest decimal representation that
// round-trips, so write -> read is bitwise exact.

#ifndef FKINEQ_MATRIX_IO_HPP
#define FKINEQ_MATRIX_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "fkineq/linalg.hpp"

namespace fkineq {

/// Shortest round-trip decimal for a finite double.
std::string format_double(double x);

std::string format_matrix(const ComplexMatrix& m);
/// Throws Error(kParse) with a line number on malformed input.
ComplexMatrix parse_matrix(std::string_view text);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace fkineq

#endif  // FKINEQ_MATRIX_IO_HPP
