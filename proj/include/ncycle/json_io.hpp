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

#ifndef NCYCLE_JSON_IO_HPP_
#define NCYCLE_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "ncycle/constructions.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/field.hpp"
#include "ncycle/oracle.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/walsh.hpp"

namespace ncycle {

// Key order is fixed so that equal inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// A number when it fits in 64 bits, otherwise its decimal string.
Json bigexp_json(const BigExp& value);

Json to_json(const FieldCtx& field);
Json to_json(const CycleReport& report);
Json to_json(const FieldCtx& field, const CriterionVerdict& verdict);
Json to_json(const FieldCtx& field, const AgwReport& report);
Json to_json(const FieldCtx& field, const WalshSymmetry& symmetry);
Json to_json(const FamilyInstance& instance);
Json to_json(const OracleVerdict& verdict);
Json to_json(const FieldCtx& field, const CrossCheckReport& report);
/// Counts only; the per-trial lines are kept separately.
Json to_json(const FuzzSummary& summary);

/// One row per cycle length: bijective,order,fixed_points,cycle_length,count.
std::string cycle_report_csv(const CycleReport& report);

}  // namespace ncycle

#endif  // NCYCLE_JSON_IO_HPP_
