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

#include "symlat/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace symlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NonIntegralCharacterSum: return "NonIntegralCharacterSum";
    case ErrorKind::NonTorsionCoefficient: return "NonTorsionCoefficient";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : value_(num, den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(mpz_class(num), d);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, constant term first. Only used internally for
// reduction and the extended gcd.

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational());
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

std::vector<std::int64_t> int_poly_exact_div(std::vector<std::int64_t> a,
                                             const std::vector<std::int64_t>& b) {
  // b is monic, exact division over Z.
  std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
  for (std::size_t s = q.size(); s-- > 0;) {
    std::int64_t c = a[s + b.size() - 1];
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int conductor) {
  if (conductor < 1)
    throw Error(ErrorKind::Validation, "conductor must be positive");
  std::vector<std::int64_t> p(static_cast<std::size_t>(conductor) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(conductor)] = 1;
  for (int d = 1; d < conductor; ++d)
    if (conductor % d == 0) p = int_poly_exact_div(p, cyclotomic_polynomial(d));
  return p;
}

int totient(int conductor) {
  int result = 0;
  for (int k = 1; k <= conductor; ++k)
    if (std::gcd(k, conductor) == 1) ++result;
  return result;
}

int roots_of_unity_order(int conductor) {
  return conductor % 2 == 0 ? conductor : 2 * conductor;
}

// ---------------------------------------------------------------------------
// Field contexts are interned once per conductor and never freed, so elements
// can hold a plain pointer and compare conductors by address.

struct CyclotomicField {
  int conductor;
  int degree;
  std::vector<Rational> modulus;  // Phi_N, monic, degree+1 entries
  std::vector<std::vector<Rational>> powers;  // zeta^j reduced, j in [0, N)
};

namespace {

void reduce_in_place(const CyclotomicField& f, std::vector<Rational>& c) {
  const auto deg = static_cast<std::size_t>(f.degree);
  for (std::size_t top = c.size(); top-- > deg;) {
    if (c[top].is_zero()) continue;
    Rational lead = c[top];
    for (std::size_t i = 0; i <= deg; ++i)
      if (!f.modulus[i].is_zero()) c[top - deg + i] -= lead * f.modulus[i];
  }
  c.resize(deg);
}

const CyclotomicField* field_for(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  if (conductor < 1)
    throw Error(ErrorKind::Validation, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto& slot = fields[conductor];
  if (!slot) {
    auto f = std::make_unique<CyclotomicField>();
    f->conductor = conductor;
    auto phi = cyclotomic_polynomial(conductor);
    f->degree = static_cast<int>(phi.size()) - 1;
    for (auto v : phi) f->modulus.emplace_back(v);
    for (int j = 0; j < conductor; ++j) {
      std::vector<Rational> c(static_cast<std::size_t>(j) + 1);
      c[static_cast<std::size_t>(j)] = 1;
      if (c.size() < static_cast<std::size_t>(f->degree))
        c.resize(static_cast<std::size_t>(f->degree));
      reduce_in_place(*f, c);
      f->powers.push_back(std::move(c));
    }
    slot = std::move(f);
  }
  return slot.get();
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(zero(1)) {}

Cyclotomic Cyclotomic::zero(int conductor) {
  const auto* f = field_for(conductor);
  return Cyclotomic(f, std::vector<Rational>(static_cast<std::size_t>(f->degree)));
}

Cyclotomic Cyclotomic::one(int conductor) {
  return from_rational(conductor, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(int conductor, const Rational& value) {
  Cyclotomic z = zero(conductor);
  z.coeffs_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, std::int64_t j) {
  const auto* f = field_for(conductor);
  std::int64_t r = ((j % conductor) + conductor) % conductor;
  return Cyclotomic(f, f->powers[static_cast<std::size_t>(r)]);
}

Cyclotomic Cyclotomic::from_power_coeffs(int conductor,
                                         std::vector<Rational> coeffs) {
  const auto* f = field_for(conductor);
  if (coeffs.size() < static_cast<std::size_t>(f->degree))
    coeffs.resize(static_cast<std::size_t>(f->degree));
  reduce_in_place(*f, coeffs);
  return Cyclotomic(f, std::move(coeffs));
}

int Cyclotomic::conductor() const { return field_->conductor; }
int Cyclotomic::degree() const { return field_->degree; }

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return std::nullopt;
  return coeffs_[0];
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
  if (field_ != o.field_)
    throw Error(ErrorKind::ConductorMismatch,
                "Q(zeta_" + std::to_string(conductor()) + ") vs Q(zeta_" +
                    std::to_string(o.conductor()) + ")");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_same_field(o);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (auto r = o.as_rational()) return *this *= *r;
  if (auto r = as_rational()) {
    Rational s = *r;
    coeffs_ = o.coeffs_;
    return *this *= s;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_in_place(*field_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  check_same_field(o);
  return *this *= o.inv();
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (auto r = as_rational()) return from_rational(conductor(), Rational(1) / *r);
  // Extended Euclid on (Phi_N, a): track s with s*a = r (mod Phi_N).
  QPoly r0 = field_->modulus, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return from_power_coeffs(conductor(), std::move(s1));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  Cyclotomic base = e < 0 ? inv() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Cyclotomic result = one(conductor());
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::normalized() const {
  return from_power_coeffs(conductor(), coeffs_);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.coeffs_ < b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (auto r = as_rational()) return r->to_string();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].to_string();
    if (i > 0) out += "*z^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

Cyclotomic Cyclotomic::parse(int conductor, std::string_view text) {
  // Split on top-level '+' signs; a leading '-' belongs to the term.
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  Cyclotomic total = zero(conductor);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = pos + 1;
    while (next < s.size() &&
           !(s[next] == '+' || (s[next] == '-' && s[next - 1] != '+' &&
                                s[next - 1] != '^' && s[next - 1] != '*')))
      ++next;
    std::string term = s.substr(pos, next - pos);
    if (!term.empty() && term[0] == '+') term.erase(0, 1);
    if (term.empty())
      throw Error(ErrorKind::Parse, "dangling sign in '" + std::string(text) + "'");
    pos = next;

    Rational coeff(1);
    std::int64_t power = 0;
    auto zpos = term.find('z');
    std::string cpart = zpos == std::string::npos ? term : term.substr(0, zpos);
    if (zpos != std::string::npos) {
      std::string zpart = term.substr(zpos + 1);
      if (zpart.empty()) {
        power = 1;
      } else if (zpart[0] == '^' && zpart.size() > 1) {
        try {
          std::size_t used = 0;
          power = std::stoll(zpart.substr(1), &used);
          if (used != zpart.size() - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(ErrorKind::Parse, "bad exponent in '" + term + "'");
        }
      } else {
        throw Error(ErrorKind::Parse, "bad term '" + term + "'");
      }
      if (conductor == 1)
        throw Error(ErrorKind::ConductorMismatch,
                    "'" + term + "' uses z but the conductor is 1");
      if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
      if (cpart == "-") cpart = "-1";
      if (cpart.empty()) cpart = "1";
    }
    coeff = Rational::parse(cpart);
    total += from_rational(conductor, coeff) * root_of_unity(conductor, power);
  }
  return total;
}

std::int64_t as_integer(const Cyclotomic& a) {
  auto r = a.as_rational();
  if (!r) throw Error(ErrorKind::NotRational, a.to_string() + " is not rational");
  if (!r->is_integer())
    throw Error(ErrorKind::NotIntegral, r->to_string() + " is not an integer");
  const mpz_class& n = r->value().get_num();
  if (!n.fits_slong_p())
    throw Error(ErrorKind::NotIntegral, "integer out of range");
  return n.get_si();
}

std::optional<std::int64_t> root_of_unity_exponent(const Cyclotomic& a) {
  const int n = a.conductor();
  const int order = roots_of_unity_order(n);
  for (int j = 0; j < n; ++j) {
    Cyclotomic z = Cyclotomic::root_of_unity(n, j);
    // zeta_N^j = zeta_L^(j*L/N), and -1 = zeta_L^(L/2).
    std::int64_t e = static_cast<std::int64_t>(j) * (order / n);
    if (a == z) return e % order;
    if (a == -z) return (e + order / 2) % order;
  }
  return std::nullopt;
}

}  // namespace symlat
