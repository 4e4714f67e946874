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

#include "fkineq/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "fkineq/matrix_io.hpp"

namespace fkineq {

void classify(InequalityReport& r, const ToleranceConfig& tol) {
  r.scale = std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  if (!std::isfinite(r.scale)) r.scale = 1.0;
  r.holds = r.gap >= -tol.violation_tol * r.scale;
  const double size = r.spread ? *r.spread : std::abs(r.gap);
  r.equality_detected = r.holds && size <= tol.equality_tol * r.scale;
}

namespace {

nlohmann::json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

template <typename T>
nlohmann::json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, double>) return num(*v);
  return *v;
}

std::string csv_num(double x) { return std::isfinite(x) ? format_double(x) : ""; }

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json_line(const InequalityReport& r) {
  nlohmann::ordered_json j;
  j["ineq_id"] = r.ineq_id;
  if (!r.part.empty()) j["part"] = r.part;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["partition"] = r.partition;
  j["function"] = r.function;
  j["map"] = r.map;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["gap"] = num(r.gap);
  j["scale"] = num(r.scale);
  j["spread"] = opt(r.spread);
  j["log_lhs"] = opt(r.log_lhs);
  j["log_rhs"] = opt(r.log_rhs);
  j["holds"] = r.holds;
  j["equality_detected"] = r.equality_detected;
  j["equality_expected"] = opt(r.equality_expected);
  j["membership_residual"] = opt(r.membership_residual);
  j["condition"] = num(r.condition);
  j["notes"] = r.notes;
  return j.dump();
}

std::string csv_header() {
  return "ineq_id,part,trial,seed,n,partition,function,map,lhs,rhs,gap,scale,spread,log_lhs,"
         "log_rhs,holds,equality_detected,equality_expected,membership_residual,condition,notes";
}

std::string to_csv_row(const InequalityReport& r) {
  const auto ob = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "true" : "false") : "";
  };
  const auto od = [](const std::optional<double>& d) -> std::string {
    return d ? csv_num(*d) : "";
  };
  std::string row;
  row += csv_text(r.ineq_id) + "," + csv_text(r.part) + "," + std::to_string(r.trial) + "," +
         std::to_string(r.seed) + "," + std::to_string(r.n) + "," + csv_text(r.partition) + "," +
         csv_text(r.function) + "," + csv_text(r.map) + ",";
  row += csv_num(r.lhs) + "," + csv_num(r.rhs) + "," + csv_num(r.gap) + "," + csv_num(r.scale) +
         "," + od(r.spread) + "," + od(r.log_lhs) + "," + od(r.log_rhs) + ",";
  row += std::string(r.holds ? "true" : "false") + "," +
         (r.equality_detected ? "true" : "false") + "," + ob(r.equality_expected) + "," +
         od(r.membership_residual) + "," + csv_num(r.condition) + "," + csv_text(r.notes);
  return row;
}

}  // namespace fkineq
