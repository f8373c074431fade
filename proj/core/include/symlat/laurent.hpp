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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symlat/scalars.hpp"

namespace symlat {

/// A lattice point x in Z^n, identified with the monomial s^x.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  Exponent(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Exponent zero(std::size_t n) {
    return Exponent(std::vector<std::int64_t>(n, 0));
  }
  static Exponent unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  std::int64_t l1_norm() const;
  std::int64_t linf_norm() const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;

  /// Lexicographic on coordinates.
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  /// "(x1,...,xn)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// Element of A = Q(zeta_N)[s1^±1, ..., sn^±1]. No stored coefficient is
/// zero, so structural equality is ring equality.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Cyclotomic>;

  LaurentPoly(std::size_t n, int conductor) : n_(n), conductor_(conductor) {}

  static LaurentPoly monomial(const Exponent& x, const Cyclotomic& c);
  static LaurentPoly constant(std::size_t n, const Cyclotomic& c);

  /// Syntax: terms joined by '+'/'-'; a term is a product of factors
  /// separated by '*' or blanks. Factors: a rational "p/q", "z" or "z^j"
  /// (zeta_N), "si" or "si^e" (shift i, 1-based, e may be negative), or a
  /// parenthesized scalar "(1/2*z^1 + -1*z^3)".
  static LaurentPoly parse(std::size_t n, int conductor, std::string_view text);

  std::size_t dimension() const { return n_; }
  int conductor() const { return conductor_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Cyclotomic coefficient(const Exponent& x) const;
  /// Adds c*s^x, dropping the term if it cancels.
  void add_term(const Exponent& x, const Cyclotomic& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// c * s^x * this
  LaurentPoly shifted(const Exponent& x, const Cyclotomic& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }

  /// Deterministic rendering in lexicographic exponent order; parse()
  /// accepts the output.
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPoly& o) const;

  std::size_t n_;
  int conductor_;
  Terms terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Element (q1, ..., qk) of A^k.
class ModuleVector {
 public:
  ModuleVector(std::size_t n, std::size_t k, int conductor);
  explicit ModuleVector(std::vector<LaurentPoly> entries);

  std::size_t rank() const { return entries_.size(); }
  std::size_t dimension() const { return n_; }
  int conductor() const { return conductor_; }
  const LaurentPoly& operator[](std::size_t j) const { return entries_[j]; }
  LaurentPoly& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  bool is_zero() const;

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  /// "[p1, p2, ...]"
  std::string to_string() const;

 private:
  std::size_t n_;
  int conductor_;
  std::vector<LaurentPoly> entries_;
};

/// A coordinate of A^k: (component index, exponent).
using ModuleCoord = std::pair<std::size_t, Exponent>;

/// Multiplies every entry of v by c * s^x.
ModuleVector monomial_shift(const Exponent& x, const Cyclotomic& c,
                            const ModuleVector& v);

/// All (j, x) with a nonzero coefficient in entry j at exponent x, ordered by
/// component then exponent.
std::set<ModuleCoord> support(const ModuleVector& v);

/// Submodule P of A^k generated by the listed vectors (the rows of P(s, 1/s)).
struct ModulePresentation {
  std::size_t n = 0;
  std::size_t k = 0;
  int conductor = 1;
  std::vector<ModuleVector> generators;

  /// Throws Validation if the generator list is empty or shapes disagree.
  void validate() const;
  /// Generators with the zero vectors dropped.
  std::vector<ModuleVector> nonzero_generators() const;
};

}  // namespace symlat
