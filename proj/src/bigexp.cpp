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

#include "ncycle/bigexp.hpp"

#include <cctype>
#include <string>

#include "ncycle/error.hpp"

namespace ncycle {
namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprVars& vars) : text_(text), vars_(vars) {}

  BigExp parse() {
    BigExp v = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, "expression \"" + std::string(text_) + "\" at " +
                                       std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigExp sum() {
    BigExp v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  BigExp product() {
    BigExp v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        BigExp d = unary();
        if (d == 0) fail("division by zero");
        if (v % d != 0) fail("inexact division");
        v /= d;
      } else {
        return v;
      }
    }
  }

  BigExp unary() {
    if (eat('-')) return -unary();
    return power();
  }

  BigExp power() {
    BigExp base = atom();
    if (eat('^')) {
      BigExp e = unary();
      if (e < 0) fail("negative exponent");
      if (e > 100000) fail("exponent too large");
      return boost::multiprecision::pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  BigExp atom() {
    skip_ws();
    if (eat('(')) {
      BigExp v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BigExp(std::string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown name '" + std::string(name) + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ExprVars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

BigExp parse_bigexp(std::string_view text, const ExprVars& vars) {
  return ExprParser(text, vars).parse();
}

std::uint64_t mod_u64(const BigExp& value, std::uint64_t modulus) {
  BigExp r = value % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t to_u64(const BigExp& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::kBadParams, "integer out of range: " + value.str());
  return value.convert_to<std::uint64_t>();
}

std::string to_string(const BigExp& value) { return value.str(); }

}  // namespace ncycle
