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

#include "fkineq/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace fkineq {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::kParse, "matrix text line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) parse_fail(line, "bad number '" + std::string(tok) + "'");
  return v;
}

long parse_dim(std::string_view tok, std::size_t line) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) {
    parse_fail(line, "bad dimension '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorKind::kInput, "format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_double(m(i, j).real());
      out += ',';
      out += format_double(m(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  // Trailing blank lines are allowed.
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) parse_fail(1, "empty input");

  const auto header = split_ws(lines[0]);
  if (header.size() != 2) parse_fail(1, "header must be 'rows cols'");
  const long rows = parse_dim(header[0], 1);
  const long cols = parse_dim(header[1], 1);
  if (static_cast<long>(lines.size()) != rows + 1) {
    parse_fail(lines.size(), "expected " + std::to_string(rows) + " rows, found " +
                                 std::to_string(lines.size() - 1));
  }

  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const std::size_t line_no = static_cast<std::size_t>(i) + 2;
    const auto toks = split_ws(lines[static_cast<std::size_t>(i) + 1]);
    if (static_cast<long>(toks.size()) != cols) {
      parse_fail(line_no, "expected " + std::to_string(cols) + " entries");
    }
    for (long j = 0; j < cols; ++j) {
      const std::string_view tok = toks[static_cast<std::size_t>(j)];
      const std::size_t comma = tok.find(',');
      if (comma == std::string_view::npos) parse_fail(line_no, "entry must be 're,im'");
      const double re = parse_number(tok.substr(0, comma), line_no);
      const double im = parse_number(tok.substr(comma + 1), line_no);
      m(i, j) = Complex(re, im);
    }
  }
  if (!all_finite(m)) parse_fail(1, "non-finite entry");
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open matrix file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInput, "cannot write matrix file " + path.string());
  out << format_matrix(m);
}

}  // namespace fkineq
