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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symlat/laurent.hpp"
#include "symlat/scalars.hpp"

namespace symlat {

/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Algebra automorphism of A given on generators by
///   s_i  |->  r_i * s_1^{m_i1} ... s_n^{m_in},
/// i.e. a pair (R, M) in (C*)^n x| GL_n(Z). M is unimodular and every r_i
/// is nonzero.
class AutElement {
 public:
  AutElement(std::vector<Cyclotomic> homothety, IntMatrix monomial);

  static AutElement identity(std::size_t n, int conductor);
  /// s_i |-> r_i s_i
  static AutElement homothety(std::vector<Cyclotomic> r);
  /// s_i |-> s^{row i of M}
  static AutElement monomial_map(IntMatrix m, int conductor);

  std::size_t dimension() const { return m_.size(); }
  int conductor() const { return r_.front().conductor(); }
  const std::vector<Cyclotomic>& homothety_part() const { return r_; }
  const IntMatrix& monomial_part() const { return m_; }

  bool is_identity() const;
  /// True when every r_i = 1, i.e. g lies in GL_n(Z).
  bool is_pure_monomial() const;

  friend bool operator==(const AutElement& a, const AutElement& b) {
    return a.m_ == b.m_ && a.r_ == b.r_;
  }
  /// Arbitrary but fixed total order (M entries, then R canonical forms).
  friend bool operator<(const AutElement& a, const AutElement& b);

  /// "{R: [r1, ...], M: [[...], ...]}"
  std::string to_string() const;

 private:
  std::vector<Cyclotomic> r_;
  IntMatrix m_;
};

struct MonomialImage {
  Cyclotomic coeff;
  Exponent image;
};

/// g(s^x) = coeff * s^image with coeff = prod_i r_i^{x_i} and image = M^T x.
MonomialImage apply_to_monomial(const AutElement& g, const Exponent& x);

/// The coefficient part of apply_to_monomial.
Cyclotomic coefficient_character(const AutElement& g, const Exponent& x);

/// g o h: apply h first, then g.
AutElement compose(const AutElement& g, const AutElement& h);
AutElement inverse(const AutElement& g);

/// phi(M)(R) = (prod_i r_i^{m_1i}, ..., prod_i r_i^{m_ni}), the twist that
/// makes psi1(R) o psi2(M) = psi2(M) o psi1(phi(M)(R)).
std::vector<Cyclotomic> twist_homothety(const IntMatrix& m,
                                        const std::vector<Cyclotomic>& r);

LaurentPoly apply_to_poly(const AutElement& g, const LaurentPoly& p);
ModuleVector apply_to_vector(const AutElement& g, const ModuleVector& v);

/// A finite subgroup G of Aut(A), fully enumerated.
class GroupTable {
 public:
  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return n_; }
  int conductor() const { return conductor_; }
  const std::vector<AutElement>& elements() const { return elements_; }
  const AutElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_index_; }

  std::optional<std::size_t> index_of(const AutElement& g) const;
  bool is_trivial() const { return elements_.size() == 1; }
  /// True when every element has trivial homothety part.
  bool is_pure_monomial() const;

  /// Breadth-first closure of the generators under composition; elements
  /// appear in discovery order starting from the identity.
  friend GroupTable generate_group(std::size_t n, int conductor,
                                   const std::vector<AutElement>& gens,
                                   std::size_t max_order);

 private:
  std::size_t n_ = 0;
  int conductor_ = 1;
  std::vector<AutElement> elements_;
  std::size_t identity_index_ = 0;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 10000;

/// Throws OrderExceeded when the closure grows beyond max_order.
GroupTable generate_group(std::size_t n, int conductor,
                          const std::vector<AutElement>& gens,
                          std::size_t max_order = kDefaultMaxGroupOrder);

/// Convenience overload; gens must be nonempty.
GroupTable generate_group(const std::vector<AutElement>& gens,
                          std::size_t max_order = kDefaultMaxGroupOrder);

/// Smallest e > 0 with g^e = id, searched up to bound.
std::optional<std::size_t> element_order(const AutElement& g, std::size_t bound);

}  // namespace symlat
