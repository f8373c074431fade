/*
   Copyright 2026 The symlat Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "symlat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace symlat {

Exponent Exponent::unit(std::size_t n, std::size_t i) {
  Exponent e = zero(n);
  e[i] = 1;
  return e;
}

bool Exponent::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t v) { return v == 0; });
}

std::int64_t Exponent::l1_norm() const {
  std::int64_t s = 0;
  for (auto v : coords_) s += std::llabs(v);
  return s;
}

std::int64_t Exponent::linf_norm() const {
  std::int64_t s = 0;
  for (auto v : coords_) s = std::max<std::int64_t>(s, std::llabs(v));
  return s;
}

Exponent Exponent::operator+(const Exponent& o) const {
  if (o.size() != size())
    throw Error(ErrorKind::DimensionMismatch, "exponent lengths differ");
  Exponent r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const { return *this + (-o); }

Exponent Exponent::operator-() const {
  Exponent r = *this;
  for (auto& v : r.coords_) v = -v;
  return r;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::monomial(const Exponent& x, const Cyclotomic& c) {
  LaurentPoly p(x.size(), c.conductor());
  p.add_term(x, c);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t n, const Cyclotomic& c) {
  return monomial(Exponent::zero(n), c);
}

Cyclotomic LaurentPoly::coefficient(const Exponent& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Cyclotomic::zero(conductor_) : it->second;
}

void LaurentPoly::add_term(const Exponent& x, const Cyclotomic& c) {
  if (x.size() != n_)
    throw Error(ErrorKind::DimensionMismatch,
                "exponent " + x.to_string() + " in a polynomial over Z^" +
                    std::to_string(n_));
  if (c.conductor() != conductor_)
    throw Error(ErrorKind::ConductorMismatch, "coefficient field differs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (n_ != o.n_)
    throw Error(ErrorKind::DimensionMismatch,
                "polynomials over Z^" + std::to_string(n_) + " and Z^" +
                    std::to_string(o.n_));
  if (conductor_ != o.conductor_)
    throw Error(ErrorKind::ConductorMismatch, "polynomial coefficient fields differ");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [x, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.n_, a.conductor_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) r.add_term(x + y, c * d);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& x, const Cyclotomic& c) const {
  LaurentPoly r(n_, conductor_);
  if (c.is_zero()) return r;
  for (const auto& [y, d] : terms_) r.terms_.emplace(x + y, c * d);
  return r;
}

namespace {

std::string monomial_text(const Exponent& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "s" + std::to_string(i + 1) + "^" + std::to_string(x[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : terms_) {
    std::string mono = monomial_text(x);
    auto rat = c.as_rational();
    bool negative = rat && rat->sign() < 0;
    std::string coeff;
    if (rat) {
      Rational mag = negative ? -*rat : *rat;
      if (!(mag.is_one() && !mono.empty())) coeff = mag.to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string term = coeff;
    if (!mono.empty()) term += (coeff.empty() ? "" : "*") + mono;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::size_t n, int conductor, std::string_view text)
      : n_(n), conductor_(conductor), text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result(n_, conductor_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [x, c] = term();
      result.add_term(x, negative ? -c : c);
      skip();
    }
    return result;
  }

 private:
  std::pair<Exponent, Cyclotomic> term() {
    Exponent x = Exponent::zero(n_);
    Cyclotomic c = Cyclotomic::one(conductor_);
    bool any = false;
    while (!at_end()) {
      skip();
      if (at_end()) break;
      char ch = peek();
      if (ch == '+' || ch == '-') {
        // A sign directly after '*' belongs to the next factor.
        if (!any || text_[pos_ - 1] != '*') break;
        if (ch == '-') c = -c;
        ++pos_;
        continue;
      }
      if (ch == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= Cyclotomic::from_rational(conductor_, rational());
      } else if (ch == 'z') {
        ++pos_;
        std::int64_t e = caret_integer(1);
        c *= scalar_power("z^" + std::to_string(e));
      } else if (ch == 's') {
        ++pos_;
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected variable index after 's'");
        std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (index < 1 || index > n_)
          throw Error(ErrorKind::Parse, "variable s" + std::to_string(index) +
                                            " out of range for n=" + std::to_string(n_));
        x[index - 1] += caret_integer(1);
      } else if (ch == '(') {
        std::size_t depth = 0, start = pos_ + 1;
        for (; pos_ < text_.size(); ++pos_) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')' && --depth == 0) break;
        }
        if (at_end()) fail("unbalanced parenthesis");
        c *= Cyclotomic::parse(conductor_, text_.substr(start, pos_ - start));
        ++pos_;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
    }
    if (!any) fail("empty term");
    return {x, c};
  }

  Cyclotomic scalar_power(const std::string& text) {
    return Cyclotomic::parse(conductor_, text);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
      ++pos_;
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  std::int64_t caret_integer(std::int64_t fallback) {
    if (at_end() || peek() != '^') return fallback;
    ++pos_;
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected exponent");
    return std::stoll(digits);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) +
                                      " in '" + std::string(text_) + "'");
  }

  std::size_t n_;
  int conductor_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::size_t n, int conductor, std::string_view text) {
  return PolyParser(n, conductor, text).parse();
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// ---------------------------------------------------------------------------

ModuleVector::ModuleVector(std::size_t n, std::size_t k, int conductor)
    : n_(n), conductor_(conductor), entries_(k, LaurentPoly(n, conductor)) {}

ModuleVector::ModuleVector(std::vector<LaurentPoly> entries)
    : n_(entries.empty() ? 0 : entries.front().dimension()),
      conductor_(entries.empty() ? 1 : entries.front().conductor()),
      entries_(std::move(entries)) {
  for (const auto& p : entries_) {
    if (p.dimension() != n_)
      throw Error(ErrorKind::DimensionMismatch, "module vector entries over different Z^n");
    if (p.conductor() != conductor_)
      throw Error(ErrorKind::ConductorMismatch, "module vector entries over different fields");
  }
}

bool ModuleVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPoly& p) { return p.is_zero(); });
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (o.rank() != rank())
    throw Error(ErrorKind::DimensionMismatch, "module vectors of different rank");
  for (std::size_t j = 0; j < rank(); ++j) entries_[j] += o.entries_[j];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (o.rank() != rank())
    throw Error(ErrorKind::DimensionMismatch, "module vectors of different rank");
  for (std::size_t j = 0; j < rank(); ++j) entries_[j] -= o.entries_[j];
  return *this;
}

std::string ModuleVector::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < rank(); ++j) {
    if (j) s += ", ";
    s += entries_[j].to_string();
  }
  return s + "]";
}

ModuleVector monomial_shift(const Exponent& x, const Cyclotomic& c,
                            const ModuleVector& v) {
  std::vector<LaurentPoly> out;
  out.reserve(v.rank());
  for (const auto& p : v.entries()) out.push_back(p.shifted(x, c));
  ModuleVector r(v.dimension(), 0, v.conductor());
  return out.empty() ? r : ModuleVector(std::move(out));
}

std::set<ModuleCoord> support(const ModuleVector& v) {
  std::set<ModuleCoord> s;
  for (std::size_t j = 0; j < v.rank(); ++j)
    for (const auto& [x, c] : v[j].terms()) s.emplace(j, x);
  return s;
}

void ModulePresentation::validate() const {
  if (generators.empty())
    throw Error(ErrorKind::Validation, "module presentation needs at least one generator");
  if (n == 0) throw Error(ErrorKind::Validation, "lattice dimension must be positive");
  if (k == 0) throw Error(ErrorKind::Validation, "module rank must be positive");
  for (const auto& g : generators) {
    if (g.rank() != k)
      throw Error(ErrorKind::Validation, "generator " + g.to_string() + " has " +
                                             std::to_string(g.rank()) + " entries, expected " +
                                             std::to_string(k));
    if (g.dimension() != n)
      throw Error(ErrorKind::Validation, "generator over the wrong lattice dimension");
    if (g.conductor() != conductor)
      throw Error(ErrorKind::ConductorMismatch, "generator over the wrong field");
  }
}

std::vector<ModuleVector> ModulePresentation::nonzero_generators() const {
  std::vector<ModuleVector> out;
  for (const auto& g : generators)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

}  // namespace symlat
