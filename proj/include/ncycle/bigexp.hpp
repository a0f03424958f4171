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

#ifndef NCYCLE_BIGEXP_HPP_
#define NCYCLE_BIGEXP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncycle {

/// Arbitrary-precision integer used for exponents and permutation orders.
using BigExp = boost::multiprecision::cpp_int;

using ExprVars = std::map<std::string, BigExp, std::less<>>;

/// Evaluates an integer expression such as "45*(q^2+q+1)" or "187245".
///
/// Grammar: sums and differences of products of powers; atoms are decimal
/// literals, names bound in `vars`, or parenthesised subexpressions. `^` is
/// right-associative and binds tighter than unary minus. Throws
/// Error(kParse) on malformed input or unknown names.
BigExp parse_bigexp(std::string_view text, const ExprVars& vars = {});

/// Non-negative residue of `value` modulo `modulus` (modulus > 0).
std::uint64_t mod_u64(const BigExp& value, std::uint64_t modulus);

/// `value` as uint64; throws Error(kBadParams) if it does not fit.
std::uint64_t to_u64(const BigExp& value);

std::string to_string(const BigExp& value);

}  // namespace ncycle

#endif  // NCYCLE_BIGEXP_HPP_
