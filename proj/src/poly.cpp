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

#include "ncycle/poly.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ncycle/error.hpp"

namespace ncycle {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on '+' outside parentheses.
std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth != 0) continue;
    if (c == '+') {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (c == '-' && i > start && text.substr(start, i - start).find_first_not_of(' ') != std::string_view::npos) {
      // Binary minus: the sign stays with the next term.
      out.push_back(text.substr(start, i - start));
      start = i;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

SparsePoly::SparsePoly(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)) {
  for (const auto& t : terms) {
    if (t.exp < 0) throw Error(ErrorCode::kBadParams, "negative exponent in polynomial");
    if (t.coeff >= field_->order()) throw Error(ErrorCode::kBadParams, "coefficient out of range");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
    if (terms_.back().coeff == 0) terms_.pop_back();
  }
  exp_mod_.reserve(terms_.size());
  for (const auto& t : terms_) exp_mod_.push_back(mod_u64(t.exp, field_->order_minus_1()));
}

SparsePoly SparsePoly::monomial(FieldPtr field, Elem c, const BigExp& e) {
  return SparsePoly(std::move(field), {Term{c, e}});
}

SparsePoly SparsePoly::parse(FieldPtr field, std::string_view text, const ExprVars& vars) {
  std::vector<Term> terms;
  text = strip(text);
  if (text.empty() || text == "0") return zero(std::move(field));
  for (std::string_view raw : split_terms(text)) {
    std::string_view term = strip(raw);
    if (term.empty()) throw Error(ErrorCode::kParse, "empty term in \"" + std::string(text) + "\"");
    bool negate = false;
    if (term.front() == '-') {
      negate = true;
      term = strip(term.substr(1));
    }
    // The variable is the first 'x' outside parentheses; coefficient
    // literals never contain one.
    std::size_t xpos = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (term[i] == 'x' && depth == 0) {
        xpos = i;
        break;
      }
    }
    Elem coeff = 1;
    BigExp exp = 0;
    if (xpos == std::string_view::npos) {
      coeff = field->parse_element(term, vars);
    } else {
      std::string_view head = strip(term.substr(0, xpos));
      std::string_view tail = strip(term.substr(xpos + 1));
      if (!head.empty()) {
        if (head.back() != '*')
          throw Error(ErrorCode::kParse, "expected '*' before x in \"" + std::string(term) + "\"");
        head = strip(head.substr(0, head.size() - 1));
        coeff = field->parse_element(head, vars);
      }
      if (tail.empty()) {
        exp = 1;
      } else {
        if (tail.front() != '^')
          throw Error(ErrorCode::kParse, "expected '^' after x in \"" + std::string(term) + "\"");
        exp = parse_bigexp(tail.substr(1), vars);
      }
    }
    if (negate) coeff = field->neg(coeff);
    terms.push_back(Term{coeff, exp});
  }
  return SparsePoly(std::move(field), std::move(terms));
}

Elem SparsePoly::operator()(Elem x) const {
  const FieldCtx& f = *field_;
  if (x == 0) return !terms_.empty() && terms_.front().exp == 0 ? terms_.front().coeff : 0;
  const std::uint64_t lx = f.log(x);
  const std::uint64_t qm1 = f.order_minus_1();
  Elem acc = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::uint64_t e = (f.log(terms_[i].coeff) + lx * exp_mod_[i]) % qm1;
    acc = f.add(acc, f.gen_pow(e));
  }
  return acc;
}

FieldElement SparsePoly::eval(const FieldElement& x) const {
  field_->check(x);
  return FieldElement((*this)(x.index()), field_->id());
}

FieldMap SparsePoly::as_map() const {
  return [poly = *this](Elem x) { return poly(x); };
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    out += field_->format_element(t.coeff);
    out += "*x^";
    out += t.exp.str();
  }
  return out;
}

void SparsePoly::check_same_field(const SparsePoly& other) const {
  if (field_->id() != other.field_->id())
    throw Error(ErrorCode::kCtxMismatch, "polynomials over different fields");
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  check_same_field(other);
  std::vector<Term> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  return *this + other.scaled(field_->neg(1));
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  check_same_field(other);
  std::vector<Term> t;
  t.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) t.push_back(Term{field_->mul(a.coeff, b.coeff), a.exp + b.exp});
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::scaled(Elem c) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = field_->mul(term.coeff, c);
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly r = constant(field_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::compose_monomial(const BigExp& s) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.exp *= s;
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::shifted(const BigExp& r) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.exp += r;
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::frobenius(unsigned sub_degree, unsigned i) const {
  const BigExp qi = boost::multiprecision::pow(BigExp(field_->subfield_order(sub_degree)), i);
  std::vector<Term> t = terms_;
  for (auto& term : t) {
    term.coeff = field_->frobenius(term.coeff, sub_degree, i);
    term.exp *= qi;
  }
  return SparsePoly(field_, std::move(t));
}

SparsePoly SparsePoly::trace(unsigned sub_degree) const {
  field_->require_subfield(sub_degree);
  const unsigned m = field_->n() / sub_degree;
  SparsePoly acc = zero(field_);
  for (unsigned i = 0; i < m; ++i) acc = acc + frobenius(sub_degree, i);
  return acc;
}

bool SparsePoly::coefficients_in_subfield(unsigned sub_degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return field_->in_subfield(t.coeff, sub_degree); });
}

bool SparsePoly::is_linearized(unsigned sub_degree) const {
  const BigExp q = field_->subfield_order(sub_degree);
  for (const auto& t : terms_) {
    BigExp e = t.exp;
    if (e == 0) return false;
    while (e % q == 0) e /= q;
    if (e != 1) return false;
  }
  return true;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.field_->id() != b.field_->id() || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].exp != b.terms_[i].exp) return false;
  return true;
}

}  // namespace ncycle
