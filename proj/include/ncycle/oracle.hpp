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

#ifndef NCYCLE_ORACLE_HPP_
#define NCYCLE_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncycle/bigexp.hpp"
#include "ncycle/constructions.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/field.hpp"

namespace ncycle {

/// Brute-force answer computed from the value table alone.
struct OracleVerdict {
  bool bijective = false;
  // Empty when f is not a permutation.
  std::optional<BigExp> order;
  std::map<std::uint64_t, std::uint64_t> cycle_type;
  std::map<std::uint64_t, bool> is_ncycle_at;
  double elapsed_seconds = 0;
};

/// Tabulates f and walks its cycles with a visited bitmap. Throws
/// Error(kCapExceeded) if the field is larger than `cap`.
OracleVerdict exhaustive_verdict(const FieldPtr& field, const FieldMap& f, const std::vector<std::uint64_t>& ns,
                                 std::uint64_t cap = kDefaultCap);

enum class Agreement { kAgree, kDisagree, kNotApplicable };

std::string to_string(Agreement agreement);

struct CrossCheckReport {
  Agreement agreement = Agreement::kNotApplicable;
  std::uint64_t n = 0;
  CriterionVerdict criterion;
  // Set when the criterion itself refused the input (Error thrown).
  std::string criterion_error;
  OracleVerdict oracle;
  // Empty when the Walsh test was skipped (not a permutation, or too large).
  std::optional<bool> walsh_symmetric;
  std::string detail;
};

/// Runs the instance's criterion, the exhaustive verdict at claimed_n and,
/// for permutations with at most `walsh_cap` elements, the Walsh symmetry
/// test against "order divides 2".
CrossCheckReport cross_check(const FamilyInstance& instance, std::uint64_t walsh_cap = 1u << 12);

struct FuzzSummary {
  std::string family;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::map<std::string, std::uint64_t> outcomes;
  // One object per trial.
  std::vector<nlohmann::ordered_json> lines;

  /// DISAGREE, UNEXPECTED_ACCEPT and UNEXPECTED_REJECT trials.
  std::uint64_t failures() const;
};

/// Family ids accepted by random_family_fuzz.
std::vector<std::string> fuzz_families();

/// Draws `trials` parameter tuples (valid, perturbed, invalid) from a
/// generator seeded by (seed, trial index). Valid and perturbed instances are
/// cross-checked; invalid tuples must be rejected by the constructor.
/// Throws Error(kBadParams) for an unknown family.
FuzzSummary random_family_fuzz(const std::string& family, std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t walsh_cap = 1u << 12);

}  // namespace ncycle

#endif  // NCYCLE_ORACLE_HPP_
