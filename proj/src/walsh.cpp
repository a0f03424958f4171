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

#include "ncycle/walsh.hpp"

#include <algorithm>
#include <string>

#include "ncycle/error.hpp"
#include "ncycle/parallel.hpp"

namespace ncycle {
namespace {

// Absolute traces Tr_{p^n/p}(x) for every x, as integers in [0, p).
std::vector<std::uint32_t> trace_table(const FieldCtx& field) {
  std::vector<std::uint32_t> tr(field.order());
  for (Elem x = 0; x < tr.size(); ++x) tr[x] = field.trace(x, 1);
  return tr;
}

// Index a(u) whose base-p digits are Tr(u * x^j); then Tr(u x) is the digit
// dot product of a(u) with x.
std::vector<Elem> dual_indices(const FieldCtx& field, const std::vector<std::uint32_t>& tr) {
  const unsigned n = field.n();
  std::vector<Elem> basis(n);
  Elem w = 1;
  for (unsigned j = 0; j < n; ++j, w *= field.p()) basis[j] = w;
  std::vector<Elem> a(field.order());
  for (Elem u = 0; u < a.size(); ++u) {
    Elem idx = 0, weight = 1;
    for (unsigned j = 0; j < n; ++j, weight *= field.p()) idx += tr[field.mul(u, basis[j])] * weight;
    a[u] = idx;
  }
  return a;
}

void fwht(std::vector<std::int32_t>& data) {
  for (std::size_t h = 1; h < data.size(); h <<= 1)
    for (std::size_t i = 0; i < data.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        std::int32_t x = data[j], y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
}

// Radix-p transform over Z[w]^q stored as q blocks of p counts:
// out[a] = sum_x data[x] * w^{<a, x>}.
void character_transform(std::vector<std::int32_t>& data, std::uint32_t p, unsigned n) {
  const std::size_t q = data.size() / p;
  std::vector<std::int32_t> in(p * p), out(p * p);
  std::size_t weight = 1;
  for (unsigned j = 0; j < n; ++j, weight *= p) {
    for (std::size_t base = 0; base < q; ++base) {
      if ((base / weight) % p != 0) continue;
      for (std::uint32_t d = 0; d < p; ++d)
        std::copy_n(&data[(base + d * weight) * p], p, &in[d * p]);
      std::fill(out.begin(), out.end(), 0);
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t d = 0; d < p; ++d) {
          const std::uint32_t shift = (a * d) % p;
          for (std::uint32_t k = 0; k < p; ++k) out[a * p + (k + shift) % p] += in[d * p + k];
        }
      for (std::uint32_t a = 0; a < p; ++a)
        std::copy_n(&out[a * p], p, &data[(base + a * weight) * p]);
    }
  }
}

}  // namespace

WalshValue WalshValue::canonical(std::vector<std::int64_t> counts) {
  if (!counts.empty()) {
    std::int64_t lo = *std::min_element(counts.begin(), counts.end());
    for (auto& c : counts) c -= lo;
  }
  return WalshValue{std::move(counts)};
}

std::vector<std::int64_t> walsh_counts(const PermMap& f, Elem u, Elem v) {
  const FieldCtx& field = *f.field();
  std::vector<std::int64_t> counts(field.p(), 0);
  for (Elem x = 0; x < field.order(); ++x) {
    Elem t = field.add(field.trace(field.mul(v, f(x)), 1), field.trace(field.mul(u, x), 1));
    ++counts[t];
  }
  return counts;
}

WalshValue walsh_coefficient(const PermMap& f, Elem u, Elem v) {
  return WalshValue::canonical(walsh_counts(f, u, v));
}

namespace {

// Spectrum at fixed v in compact form: p = 2 stores one signed value per u,
// odd p stores p canonical counts per u.
std::vector<std::int32_t> compact_spectrum(const PermMap& f, Elem v,
                                           const std::vector<std::uint32_t>& tr,
                                           const std::vector<Elem>& dual) {
  const FieldCtx& field = *f.field();
  const std::uint32_t p = field.p();
  const std::size_t q = field.order();
  if (p == 2) {
    std::vector<std::int32_t> data(q);
    for (Elem x = 0; x < q; ++x) data[x] = tr[field.mul(v, f(x))] ? -1 : 1;
    fwht(data);
    std::vector<std::int32_t> out(q);
    for (Elem u = 0; u < q; ++u) out[u] = data[dual[u]];
    return out;
  }
  std::vector<std::int32_t> data(q * p, 0);
  for (Elem x = 0; x < q; ++x) data[x * p + tr[field.mul(v, f(x))]] = 1;
  character_transform(data, p, field.n());
  std::vector<std::int32_t> out(q * p);
  for (Elem u = 0; u < q; ++u) {
    const std::int32_t* src = &data[dual[u] * p];
    std::int32_t lo = *std::min_element(src, src + p);
    for (std::uint32_t k = 0; k < p; ++k) out[u * p + k] = src[k] - lo;
  }
  return out;
}

}  // namespace

std::vector<WalshValue> walsh_component_spectrum(const PermMap& f, Elem v) {
  const FieldCtx& field = *f.field();
  const auto tr = trace_table(field);
  const auto dual = dual_indices(field, tr);
  const auto compact = compact_spectrum(f, v, tr, dual);
  std::vector<WalshValue> out;
  out.reserve(field.order());
  const std::uint32_t p = field.p();
  for (Elem u = 0; u < field.order(); ++u) {
    if (p == 2) {
      std::int32_t w = compact[u];
      out.push_back(WalshValue{{std::max(w, 0), std::max(-w, 0)}});
    } else {
      out.push_back(WalshValue{std::vector<std::int64_t>(&compact[u * p], &compact[u * p] + p)});
    }
  }
  return out;
}

WalshSymmetry walsh_involution_test(const PermMap& f, std::uint64_t cap) {
  const FieldCtx& field = *f.field();
  if (field.order() > cap)
    throw Error(ErrorCode::kCapExceeded, "Walsh spectrum limited to fields of size <= " +
                                             std::to_string(cap));
  const std::size_t q = field.order();
  const std::size_t width = field.p() == 2 ? 1 : field.p();
  const auto tr = trace_table(field);
  const auto dual = dual_indices(field, tr);
  // spectrum[(v * q + u) * width ...] = W(u, v)
  std::vector<std::int32_t> spectrum(q * q * width);
  parallel_for(q, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      auto row = compact_spectrum(f, static_cast<Elem>(v), tr, dual);
      std::copy(row.begin(), row.end(), spectrum.begin() + v * q * width);
    }
  }, 1);
  WalshSymmetry result;
  for (std::size_t u = 0; u < q; ++u)
    for (std::size_t v = u + 1; v < q; ++v) {
      const auto* uv = &spectrum[(v * q + u) * width];
      const auto* vu = &spectrum[(u * q + v) * width];
      if (!std::equal(uv, uv + width, vu)) {
        result.symmetric = false;
        result.witness = std::make_pair(static_cast<Elem>(u), static_cast<Elem>(v));
        return result;
      }
    }
  return result;
}

}  // namespace ncycle
