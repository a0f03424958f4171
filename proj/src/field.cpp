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

#include "ncycle/field.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <string>

#include "ncycle/error.hpp"

namespace ncycle {
namespace {

using u128 = unsigned __int128;

std::atomic<std::uint64_t> g_next_ctx_id{1};

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, base, m);
    base = mulmod64(base, base, m);
    e >>= 1;
  }
  return r;
}

gfp::Poly digits_of(std::uint64_t v, std::uint32_t p, unsigned n) {
  gfp::Poly d(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

gfp::Poly poly_pow(gfp::Poly base, std::uint64_t e, const gfp::Poly& modulus, std::uint32_t p) {
  gfp::Poly r{1};
  while (e > 0) {
    if (e & 1) r = gfp::mul_mod(r, base, modulus, p);
    base = gfp::mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    unsigned k = 0;
    while (v % d == 0) {
      v /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

namespace gfp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly rem(Poly a, const Poly& modulus, std::uint32_t p) {
  trim(a);
  const std::size_t dm = modulus.size() - 1;
  const std::uint32_t lead_inv = powmod64(modulus.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t c = mulmod64(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t t = mulmod64(c, modulus[i], p);
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return rem(std::move(r), modulus, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = powmod64(a.back(), p - 2, p);
    for (auto& c : a) c = static_cast<std::uint32_t>(mulmod64(c, inv, p));
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(g.size() - 1);
  if (n == 1) return true;
  // x^{p^k} mod f for k = 0..n by repeated p-th powers.
  std::vector<Poly> frob(n + 1);
  frob[0] = rem(Poly{0, 1}, g, p);
  for (unsigned k = 1; k <= n; ++k) frob[k] = poly_pow(frob[k - 1], p, g, p);
  if (frob[n] != frob[0]) return false;
  for (auto [r, mult] : factorize(n)) {
    (void)mult;
    Poly h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = static_cast<std::uint32_t>((h[1] + p - 1) % p);
    Poly d = gcd(h, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace gfp

FieldPtr FieldCtx::make(std::uint32_t p, unsigned n,
                        std::optional<std::vector<std::uint32_t>> modulus, Options options) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::kBadParams, "extension degree must be >= 1");
  const std::uint64_t cap = std::min<std::uint64_t>(options.cap, std::uint64_t{1} << 32);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > cap)
      throw Error(ErrorCode::kCapExceeded, std::to_string(p) + "^" + std::to_string(n) +
                                               " exceeds the field-size cap " +
                                               std::to_string(options.cap));
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = q;
  ctx->id_ = g_next_ctx_id.fetch_add(1);
  ctx->digit_weight_.resize(n);
  for (unsigned i = 0; i < n; ++i) ctx->digit_weight_[i] = i == 0 ? 1 : ctx->digit_weight_[i - 1] * p;

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != n + 1 || m.back() != 1)
      throw Error(ErrorCode::kBadParams, "modulus must be monic of degree " + std::to_string(n));
    for (auto c : m)
      if (c >= p) throw Error(ErrorCode::kBadParams, "modulus coefficient out of range");
    if (!gfp::is_irreducible(m, p))
      throw Error(ErrorCode::kNotIrreducible, "supplied modulus is reducible");
    ctx->modulus_ = m;
  } else {
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      gfp::Poly cand = digits_of(idx, p, n);
      cand.push_back(1);
      if (gfp::is_irreducible(cand, p)) {
        ctx->modulus_ = std::move(cand);
        break;
      }
    }
  }

  ctx->factorization_ = factorize(q - 1);

  // Generator: first candidate (1, 2, ... for n = 1; x, x+1, ... otherwise)
  // of multiplicative order exactly q - 1.
  const gfp::Poly& mod = ctx->modulus_;
  auto has_full_order = [&](const gfp::Poly& g) {
    if (gfp::rem(g, mod, p).empty()) return false;
    for (auto [r, k] : ctx->factorization_) {
      (void)k;
      gfp::Poly t = poly_pow(g, (q - 1) / r, mod, p);
      if (t == gfp::Poly{1}) return false;
    }
    return true;
  };
  std::uint64_t cand = n == 1 ? 1 : p;
  for (; cand < q; ++cand) {
    gfp::Poly g = digits_of(cand, p, n);
    gfp::trim(g);
    if (has_full_order(g)) break;
  }
  if (q == 2) cand = 1;
  ctx->generator_ = static_cast<Elem>(cand);

  // Antilog table by repeated multiplication with the generator. The
  // generator has low degree, so g*a = sum_j g_j * (x^j * a).
  ctx->exp_.resize(q - 1);
  ctx->log_.assign(q, 0);
  const gfp::Poly g_digits = digits_of(cand, p, n);
  if (p == 2) {
    std::uint32_t low = 0;
    for (unsigned i = 0; i < n; ++i)
      if (mod[i]) low |= 1u << i;
    const std::uint32_t top = n == 32 ? 0 : (1u << (n - 1));
    const std::uint32_t mask = n >= 32 ? ~0u : ((1u << n) - 1);
    auto mulx = [&](std::uint32_t a) {
      bool carry = (a & top) != 0;
      a = (a << 1) & mask;
      return carry ? a ^ low : a;
    };
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      ctx->exp_[k] = cur;
      std::uint32_t t = cur, acc = 0;
      for (unsigned j = 0; j < n; ++j) {
        if ((cand >> j) & 1) acc ^= t;
        if ((cand >> (j + 1)) == 0) break;
        t = mulx(t);
      }
      cur = acc;
    }
  } else {
    unsigned g_deg = 0;
    for (unsigned j = 0; j < n; ++j)
      if (g_digits[j]) g_deg = j;
    std::vector<std::uint32_t> cur(n, 0), t(n), acc(n);
    cur[0] = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      std::uint64_t idx = 0;
      for (unsigned i = 0; i < n; ++i) idx += cur[i] * ctx->digit_weight_[i];
      ctx->exp_[k] = static_cast<Elem>(idx);
      t = cur;
      std::fill(acc.begin(), acc.end(), 0);
      for (unsigned j = 0; j <= g_deg; ++j) {
        if (g_digits[j])
          for (unsigned i = 0; i < n; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + std::uint64_t{g_digits[j]} * t[i]) % p);
        if (j == g_deg) break;
        std::uint32_t carry = t[n - 1];
        for (unsigned i = n - 1; i > 0; --i) t[i] = t[i - 1];
        t[0] = 0;
        if (carry)
          for (unsigned i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>((t[i] + std::uint64_t{p - carry} * mod[i]) % p);
      }
      cur = acc;
    }
  }
  for (std::uint64_t k = 0; k + 1 < q; ++k) ctx->log_[ctx->exp_[k]] = static_cast<std::uint32_t>(k);
  return ctx;
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (unsigned i = 0; i < n_ && (a | b); ++i) {
    std::uint32_t s = a % p_ + b % p_;
    a /= p_;
    b /= p_;
    if (s >= p_) s -= p_;
    r += static_cast<Elem>(s * digit_weight_[i]);
  }
  return r;
}

Elem FieldCtx::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  Elem r = 0;
  for (unsigned i = 0; i < n_ && a; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    if (d) r += static_cast<Elem>((p_ - d) * digit_weight_[i]);
  }
  return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  std::uint64_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1 - l)];
}

Elem FieldCtx::pow(Elem a, const BigExp& e) const {
  if (e < 0) throw Error(ErrorCode::kBadParams, "negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  return pow_reduced(a, mod_u64(e, q_ - 1));
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  if (a == 0) return e == 0 ? 1 : 0;
  return pow_reduced(a, e % (q_ - 1));
}

std::uint64_t FieldCtx::subfield_order(unsigned sub_degree) const {
  require_subfield(sub_degree);
  std::uint64_t r = 1;
  for (unsigned i = 0; i < sub_degree; ++i) r *= p_;
  return r;
}

void FieldCtx::require_subfield(unsigned sub_degree) const {
  if (sub_degree == 0 || n_ % sub_degree != 0)
    throw Error(ErrorCode::kInvalidSubfield, "sub-degree " + std::to_string(sub_degree) +
                                                 " does not divide " + std::to_string(n_));
}

Elem FieldCtx::frobenius(Elem a, unsigned sub_degree, long long i) const {
  require_subfield(sub_degree);
  const long long m = n_ / sub_degree;
  long long r = i % m;
  if (r < 0) r += m;
  if (a == 0) return 0;
  std::uint64_t e = powmod64(p_, static_cast<std::uint64_t>(sub_degree) * r, q_ - 1);
  if (q_ == 2) e = 0;
  return pow_reduced(a, e);
}

Elem FieldCtx::trace(Elem a, unsigned sub_degree) const {
  require_subfield(sub_degree);
  if (a == 0) return 0;
  const unsigned m = n_ / sub_degree;
  const std::uint64_t qs = subfield_order(sub_degree) % (q_ - 1);
  std::uint64_t e = 1 % (q_ - 1);
  Elem acc = 0;
  for (unsigned i = 0; i < m; ++i) {
    acc = add(acc, pow_reduced(a, e));
    e = mulmod64(e, qs, q_ - 1);
  }
  return acc;
}

Elem FieldCtx::norm(Elem a, unsigned sub_degree) const {
  require_subfield(sub_degree);
  if (a == 0) return 0;
  const unsigned m = n_ / sub_degree;
  const std::uint64_t qs = subfield_order(sub_degree) % (q_ - 1);
  std::uint64_t e = 1 % (q_ - 1), total = 0;
  for (unsigned i = 0; i < m; ++i) {
    total = (total + e) % (q_ - 1);
    e = mulmod64(e, qs, q_ - 1);
  }
  return pow_reduced(a, total);
}

bool FieldCtx::in_subfield(Elem a, unsigned sub_degree) const {
  const std::uint64_t qs = subfield_order(sub_degree);
  if (a == 0) return true;
  return log_[a] % ((q_ - 1) / (qs - 1)) == 0;
}

std::vector<Elem> FieldCtx::subgroup_mu(std::uint64_t ell) const {
  if (ell == 0 || (q_ - 1) % ell != 0)
    throw Error(ErrorCode::kNotDivisor,
                std::to_string(ell) + " does not divide " + std::to_string(q_ - 1));
  const std::uint64_t step = (q_ - 1) / ell;
  std::vector<Elem> out(ell);
  for (std::uint64_t i = 0; i < ell; ++i) out[i] = exp_[step * i];
  return out;
}

std::vector<Elem> FieldCtx::subfield_members(unsigned sub_degree) const {
  const std::uint64_t qs = subfield_order(sub_degree);
  const std::uint64_t step = (q_ - 1) / (qs - 1);
  std::vector<Elem> out;
  out.reserve(qs);
  out.push_back(0);
  for (std::uint64_t k = 0; k + 1 < qs; ++k) out.push_back(exp_[k * step]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> FieldCtx::coords(Elem a) const { return digits_of(a, p_, n_); }

Elem FieldCtx::from_coords(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != n_) throw Error(ErrorCode::kBadParams, "coordinate vector has wrong length");
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (coords[i] >= p_) throw Error(ErrorCode::kBadParams, "coordinate out of range");
    idx += coords[i] * digit_weight_[i];
  }
  return static_cast<Elem>(idx);
}

FieldElement FieldCtx::element(Elem index) const {
  if (index >= q_) throw Error(ErrorCode::kBadParams, "element index out of range");
  return FieldElement(index, id_);
}

void FieldCtx::check(const FieldElement& a) const {
  if (a.ctx_id() != id_) throw Error(ErrorCode::kCtxMismatch, "element belongs to another field");
  if (a.index() >= q_) throw Error(ErrorCode::kBadParams, "element index out of range");
}

FieldElement FieldCtx::arith(ArithOp op, const FieldElement& a,
                             const std::optional<FieldElement>& b) const {
  check(a);
  const bool binary = op == ArithOp::kAdd || op == ArithOp::kSub || op == ArithOp::kMul;
  if (binary) {
    if (!b) throw Error(ErrorCode::kBadParams, "binary operation needs two operands");
    check(*b);
  }
  switch (op) {
    case ArithOp::kAdd: return FieldElement(add(a.index(), b->index()), id_);
    case ArithOp::kSub: return FieldElement(sub(a.index(), b->index()), id_);
    case ArithOp::kMul: return FieldElement(mul(a.index(), b->index()), id_);
    case ArithOp::kNeg: return FieldElement(neg(a.index()), id_);
    case ArithOp::kInv: return FieldElement(inv(a.index()), id_);
  }
  throw Error(ErrorCode::kBadParams, "unknown operation");
}

FieldElement FieldCtx::pow(const FieldElement& a, const BigExp& e) const {
  check(a);
  return FieldElement(pow(a.index(), e), id_);
}

Elem FieldCtx::parse_element(std::string_view text, const ExprVars& vars) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "g") return generator_;
  if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
    BigExp k = parse_bigexp(text.substr(2), vars);
    return gen_pow(mod_u64(k, q_ - 1));
  }
  BigExp v = parse_bigexp(text, vars);
  if (v < 0 || v >= q_)
    throw Error(ErrorCode::kParse, "element literal \"" + std::string(text) + "\" out of range");
  return static_cast<Elem>(v.convert_to<std::uint64_t>());
}

std::string FieldCtx::format_element(Elem a) const { return std::to_string(a); }

}  // namespace ncycle
