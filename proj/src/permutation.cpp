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

#include "ncycle/permutation.hpp"

#include <string>

#include "ncycle/error.hpp"
#include "ncycle/parallel.hpp"

namespace ncycle {
namespace {

void check_same_field(const PermMap& f, const PermMap& g) {
  if (f.field()->id() != g.field()->id())
    throw Error(ErrorCode::kCtxMismatch, "permutations over different fields");
}

// Returns the first collision in index order, if any.
std::optional<NotBijective> find_collision(const std::vector<Elem>& images) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> preimage(images.size(), kUnset);
  for (Elem x = 0; x < images.size(); ++x) {
    Elem y = images[x];
    if (preimage[y] != kUnset) return NotBijective{preimage[y], x, y};
    preimage[y] = x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Elem> tabulate(const FieldCtx& field, const FieldMap& f) {
  std::vector<Elem> table(field.order());
  parallel_for(table.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      Elem y = f(static_cast<Elem>(x));
      if (y >= field.order()) throw Error(ErrorCode::kBadParams, "map produced an out-of-range value");
      table[x] = y;
    }
  });
  return table;
}

PermMap PermMap::from_table(FieldPtr field, std::vector<Elem> images) {
  if (images.size() != field->order())
    throw Error(ErrorCode::kBadParams, "image table has the wrong length");
  for (Elem y : images)
    if (y >= field->order()) throw Error(ErrorCode::kBadParams, "image out of range");
  if (auto c = find_collision(images))
    throw Error(ErrorCode::kNotPermutation, "f(" + std::to_string(c->first) + ") = f(" +
                                                std::to_string(c->second) + ")");
  return PermMap(std::move(field), std::move(images));
}

PermMap PermMap::identity(FieldPtr field) {
  std::vector<Elem> images(field->order());
  for (Elem x = 0; x < images.size(); ++x) images[x] = x;
  return PermMap(std::move(field), std::move(images));
}

PermResult perm_from_map(FieldPtr field, const FieldMap& f) {
  std::vector<Elem> table = tabulate(*field, f);
  if (auto c = find_collision(table)) return *c;
  return PermMap::from_table(std::move(field), std::move(table));
}

PermResult perm_from_poly(const SparsePoly& poly) { return perm_from_map(poly.field(), poly.as_map()); }

PermMap require_perm(FieldPtr field, const FieldMap& f) {
  PermResult r = perm_from_map(std::move(field), f);
  if (auto* nb = std::get_if<NotBijective>(&r))
    throw Error(ErrorCode::kNotPermutation, "f(" + std::to_string(nb->first) + ") = f(" +
                                                std::to_string(nb->second) + ")");
  return std::get<PermMap>(std::move(r));
}

PermMap compose(const PermMap& f, const PermMap& g) {
  check_same_field(f, g);
  std::vector<Elem> out(f.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = f(g(static_cast<Elem>(x)));
  return PermMap::from_table(f.field(), std::move(out));
}

PermMap invert(const PermMap& f) {
  std::vector<Elem> out(f.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[f(static_cast<Elem>(x))] = static_cast<Elem>(x);
  return PermMap::from_table(f.field(), std::move(out));
}

PermMap functional_power(const PermMap& f, long long n) {
  if (n < 0) return functional_power(invert(f), -n);
  PermMap result = PermMap::identity(f.field());
  PermMap base = f;
  auto k = static_cast<unsigned long long>(n);
  while (k > 0) {
    if (k & 1) result = compose(base, result);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

CycleReport cycle_structure(const PermMap& f) {
  CycleReport report;
  std::vector<bool> seen(f.size(), false);
  for (std::size_t start = 0; start < f.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Elem x = static_cast<Elem>(start);
    while (!seen[x]) {
      seen[x] = true;
      x = f(x);
      ++len;
    }
    ++report.cycle_type[len];
  }
  for (const auto& [len, count] : report.cycle_type) {
    if (len == 1) report.fixed_points = count;
    report.order = boost::multiprecision::lcm(report.order, BigExp(len));
  }
  return report;
}

bool is_ncycle(const CycleReport& report, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kBadParams, "n-cycle test needs n >= 1");
  return report.bijective && BigExp(n) % report.order == 0;
}

bool is_ncycle(const PermMap& f, std::uint64_t n) { return is_ncycle(cycle_structure(f), n); }

}  // namespace ncycle
