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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "symlat/errors.hpp"

namespace symlat {

/// Canonical rational number: positive denominator, reduced, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Coefficient sequence of the N-th cyclotomic polynomial, constant term
/// first. Phi_N is obtained by dividing x^N - 1 by Phi_d for every proper
/// divisor d of N.
std::vector<std::int64_t> cyclotomic_polynomial(int conductor);

/// Euler's totient, i.e. deg Phi_N.
int totient(int conductor);

struct CyclotomicField;

/// Element of Q(zeta_N) stored as its residue modulo Phi_N in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1). The representation is canonical, so
/// coefficientwise equality is field equality.
class Cyclotomic {
 public:
  /// Zero of Q(zeta_1) = Q.
  Cyclotomic();

  static Cyclotomic zero(int conductor);
  static Cyclotomic one(int conductor);
  static Cyclotomic from_rational(int conductor, const Rational& value);
  /// zeta_N^j with j reduced mod N.
  static Cyclotomic root_of_unity(int conductor, std::int64_t j);
  /// Builds the element from power-basis coefficients of arbitrary length,
  /// reducing modulo Phi_N.
  static Cyclotomic from_power_coeffs(int conductor,
                                      std::vector<Rational> coeffs);

  /// Textual syntax: a sum of terms "c*z^j", "c*z", "z^j", "c" where c is a
  /// rational; "z" denotes zeta_N.
  static Cyclotomic parse(int conductor, std::string_view text);

  int conductor() const;
  int degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) {
    return a += b;
  }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) {
    return a -= b;
  }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) {
    return a *= b;
  }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) {
    return a /= b;
  }

  Cyclotomic inv() const;
  /// Integer power; negative exponents go through inv().
  Cyclotomic pow(std::int64_t e) const;

  /// Re-reduces the coefficient vector. A no-op on canonical values.
  Cyclotomic normalized() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on canonical forms (conductor, then coefficients); only
  /// used for deterministic containers, it has no arithmetic meaning.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void check_same_field(const Cyclotomic& o) const;

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline Cyclotomic inv(const Cyclotomic& a) { return a.inv(); }

/// The integer value of a rational-integer element. Throws NotRational or
/// NotIntegral otherwise.
std::int64_t as_integer(const Cyclotomic& a);

/// If a = ±zeta_N^j, returns the exponent of a as a power of zeta_L with
/// L = lcm(2, N), in [0, L).
std::optional<std::int64_t> root_of_unity_exponent(const Cyclotomic& a);

/// lcm(2, N): the order of the group of roots of unity inside Q(zeta_N).
int roots_of_unity_order(int conductor);

}  // namespace symlat
