// Copyright 2026 The ncycle Authors
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

#include "ncycle/json_io.hpp"

#include <limits>
#include <sstream>

namespace ncycle {

Json bigexp_json(const BigExp& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(value);
  return to_string(value);
}

Json to_json(const FieldCtx& field) {
  Json j;
  j["p"] = field.p();
  j["n"] = field.n();
  j["order"] = field.order();
  j["modulus"] = field.modulus();
  j["generator"] = field.format_element(field.generator());
  return j;
}

namespace {

Json cycle_type_json(const std::map<std::uint64_t, std::uint64_t>& cycle_type) {
  Json j = Json::object();
  for (const auto& [len, count] : cycle_type) j[std::to_string(len)] = count;
  return j;
}

}  // namespace

Json to_json(const CycleReport& report) {
  Json j;
  j["bijective"] = report.bijective;
  j["order"] = report.bijective ? bigexp_json(report.order) : Json("not a permutation");
  j["cycle_type"] = cycle_type_json(report.cycle_type);
  j["fixed_points"] = report.fixed_points;
  return j;
}

Json to_json(const FieldCtx& field, const CriterionVerdict& verdict) {
  Json j;
  j["holds"] = verdict.holds;
  j["applicable"] = verdict.applicable();
  if (verdict.witness) {
    j["witness"] = {{"y", field.format_element(verdict.witness->y)},
                    {"lhs", field.format_element(verdict.witness->lhs)}};
  } else {
    j["witness"] = nullptr;
  }
  j["domain_size"] = verdict.domain_size;
  j["hypothesis_failures"] = verdict.hypothesis_failures;
  if (!verdict.failure.empty()) j["failure"] = verdict.failure;
  if (verdict.necessary_condition) j["necessary_condition"] = *verdict.necessary_condition;
  return j;
}

Json to_json(const FieldCtx& field, const AgwReport& report) {
  Json j;
  j["holds"] = report.holds;
  j["commutes"] = report.commutes;
  j["g_bijective"] = report.g_bijective;
  j["fibers_injective"] = report.fibers_injective;
  j["f_bijective"] = report.f_bijective;
  j["witness"] = report.witness ? Json(field.format_element(*report.witness)) : Json(nullptr);
  return j;
}

Json to_json(const FieldCtx& field, const WalshSymmetry& symmetry) {
  Json j;
  j["symmetric"] = symmetry.symmetric;
  if (symmetry.witness) {
    j["witness"] = {{"u", field.format_element(symmetry.witness->first)},
                    {"v", field.format_element(symmetry.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const FamilyInstance& instance) {
  Json j;
  j["family"] = instance.family;
  j["params"] = instance.params;
  j["field"] = to_json(*instance.field);
  j["poly"] = instance.poly ? Json(instance.poly->to_string()) : Json(nullptr);
  if (instance.inverse) j["inverse"] = instance.inverse->to_string();
  j["formula"] = instance.formula;
  j["claimed_n"] = instance.claimed_n;
  j["criterion"] = instance.criterion_name;
  j["notes"] = instance.notes;
  return j;
}

Json to_json(const OracleVerdict& verdict) {
  Json j;
  j["bijective"] = verdict.bijective;
  j["order"] = verdict.order ? bigexp_json(*verdict.order) : Json("not a permutation");
  j["cycle_type"] = cycle_type_json(verdict.cycle_type);
  Json ns = Json::object();
  for (const auto& [n, v] : verdict.is_ncycle_at) ns[std::to_string(n)] = v;
  j["is_ncycle_at"] = ns;
  return j;
}

Json to_json(const FieldCtx& field, const CrossCheckReport& report) {
  Json j;
  j["agreement"] = to_string(report.agreement);
  j["n"] = report.n;
  j["criterion"] = to_json(field, report.criterion);
  if (!report.criterion_error.empty()) j["criterion_error"] = report.criterion_error;
  j["oracle"] = to_json(report.oracle);
  if (report.walsh_symmetric) {
    j["walsh_symmetric"] = *report.walsh_symmetric;
  } else {
    j["walsh_symmetric"] = "skipped";
  }
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

Json to_json(const FuzzSummary& summary) {
  Json j;
  j["family"] = summary.family;
  j["seed"] = summary.seed;
  j["trials"] = summary.trials;
  Json outcomes = Json::object();
  for (const auto& [k, v] : summary.outcomes) outcomes[k] = v;
  j["outcomes"] = outcomes;
  j["failures"] = summary.failures();
  return j;
}

std::string cycle_report_csv(const CycleReport& report) {
  std::ostringstream out;
  out << "bijective,order,fixed_points,cycle_length,count\n";
  const std::string order = report.bijective ? to_string(report.order) : "";
  for (const auto& [len, count] : report.cycle_type)
    out << (report.bijective ? "true" : "false") << ',' << order << ',' << report.fixed_points << ',' << len
        << ',' << count << '\n';
  return out.str();
}

}  // namespace ncycle
