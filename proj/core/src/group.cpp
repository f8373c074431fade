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

#include "symlat/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace symlat {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMatrix c(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner)
      throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    for (std::size_t l = 0; l < inner; ++l)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][l] * b[l][j];
  }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a.front().size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

void check_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
}

}  // namespace

std::int64_t determinant(const IntMatrix& m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss elimination on bignums.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  mpz_class d = a[n - 1][n - 1] * sign;
  return d.get_si();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  check_square(m);
  const std::size_t n = m.size();
  std::int64_t det = determinant(m);
  if (det != 1 && det != -1)
    throw Error(ErrorKind::NotUnimodular, "det = " + std::to_string(det));
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = a[i][n + j].numerator().get_si();  // integral by unimodularity
  return inv;
}

// ---------------------------------------------------------------------------

AutElement::AutElement(std::vector<Cyclotomic> homothety, IntMatrix monomial)
    : r_(std::move(homothety)), m_(std::move(monomial)) {
  if (r_.empty()) throw Error(ErrorKind::Validation, "automorphism of Z^0");
  if (m_.size() != r_.size())
    throw Error(ErrorKind::DimensionMismatch,
                "R has " + std::to_string(r_.size()) + " entries but M has " +
                    std::to_string(m_.size()) + " rows");
  check_square(m_);
  for (const auto& r : r_) {
    if (r.is_zero()) throw Error(ErrorKind::Validation, "homothety entry is zero");
    if (r.conductor() != r_.front().conductor())
      throw Error(ErrorKind::ConductorMismatch, "homothety entries over different fields");
  }
  std::int64_t det = determinant(m_);
  if (det != 1 && det != -1)
    throw Error(ErrorKind::NotUnimodular,
                "matrix " + to_string() + " is not unimodular (det " + std::to_string(det) + ")");
}

AutElement AutElement::identity(std::size_t n, int conductor) {
  return AutElement(std::vector<Cyclotomic>(n, Cyclotomic::one(conductor)), identity_matrix(n));
}

AutElement AutElement::homothety(std::vector<Cyclotomic> r) {
  std::size_t n = r.size();
  return AutElement(std::move(r), identity_matrix(n));
}

AutElement AutElement::monomial_map(IntMatrix m, int conductor) {
  std::size_t n = m.size();
  return AutElement(std::vector<Cyclotomic>(n, Cyclotomic::one(conductor)), std::move(m));
}

bool AutElement::is_identity() const {
  return is_pure_monomial() && m_ == identity_matrix(m_.size());
}

bool AutElement::is_pure_monomial() const {
  return std::all_of(r_.begin(), r_.end(), [](const Cyclotomic& c) { return c.is_one(); });
}

bool operator<(const AutElement& a, const AutElement& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return std::lexicographical_compare(a.r_.begin(), a.r_.end(), b.r_.begin(), b.r_.end());
}

std::string AutElement::to_string() const {
  std::string s = "{R: [";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) s += ", ";
    s += "\"" + r_[i].to_string() + "\"";
  }
  s += "], M: [";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m_[i].size(); ++j) {
      if (j) s += ", ";
      s += std::to_string(m_[i][j]);
    }
    s += "]";
  }
  return s + "]}";
}

Cyclotomic coefficient_character(const AutElement& g, const Exponent& x) {
  if (x.size() != g.dimension())
    throw Error(ErrorKind::DimensionMismatch, "exponent and automorphism dimensions differ");
  Cyclotomic c = Cyclotomic::one(g.conductor());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && !g.homothety_part()[i].is_one()) c *= g.homothety_part()[i].pow(x[i]);
  return c;
}

MonomialImage apply_to_monomial(const AutElement& g, const Exponent& x) {
  const auto& m = g.monomial_part();
  Exponent image = Exponent::zero(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) image[j] += m[i][j] * x[i];
  }
  return {coefficient_character(g, x), std::move(image)};
}

AutElement compose(const AutElement& g, const AutElement& h) {
  if (g.dimension() != h.dimension())
    throw Error(ErrorKind::DimensionMismatch, "composing automorphisms of different Z^n");
  if (g.conductor() != h.conductor())
    throw Error(ErrorKind::ConductorMismatch, "composing automorphisms over different fields");
  // (g o h)(s_i) = r^h_i * g(s^{row i of M_h}).
  const std::size_t n = g.dimension();
  std::vector<Cyclotomic> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent row(h.monomial_part()[i]);
    r.push_back(h.homothety_part()[i] * coefficient_character(g, row));
  }
  return AutElement(std::move(r), multiply(h.monomial_part(), g.monomial_part()));
}

AutElement inverse(const AutElement& g) {
  IntMatrix minv = unimodular_inverse(g.monomial_part());
  const std::size_t n = g.dimension();
  std::vector<Cyclotomic> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.push_back(coefficient_character(g, Exponent(minv[i])).inv());
  return AutElement(std::move(r), std::move(minv));
}

std::vector<Cyclotomic> twist_homothety(const IntMatrix& m, const std::vector<Cyclotomic>& r) {
  std::vector<Cyclotomic> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Cyclotomic c = Cyclotomic::one(r.front().conductor());
    for (std::size_t i = 0; i < r.size(); ++i) c *= r[i].pow(m[k][i]);
    out.push_back(std::move(c));
  }
  return out;
}

LaurentPoly apply_to_poly(const AutElement& g, const LaurentPoly& p) {
  LaurentPoly out(p.dimension(), p.conductor());
  for (const auto& [x, c] : p.terms()) {
    auto img = apply_to_monomial(g, x);
    out.add_term(img.image, c * img.coeff);
  }
  return out;
}

ModuleVector apply_to_vector(const AutElement& g, const ModuleVector& v) {
  std::vector<LaurentPoly> entries;
  entries.reserve(v.rank());
  for (const auto& p : v.entries()) entries.push_back(apply_to_poly(g, p));
  return ModuleVector(std::move(entries));
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> GroupTable::index_of(const AutElement& g) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == g) return i;
  return std::nullopt;
}

bool GroupTable::is_pure_monomial() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const AutElement& g) { return g.is_pure_monomial(); });
}

GroupTable generate_group(std::size_t n, int conductor, const std::vector<AutElement>& gens,
                          std::size_t max_order) {
  for (const auto& g : gens) {
    if (g.dimension() != n)
      throw Error(ErrorKind::DimensionMismatch, "generator " + g.to_string() + " acts on the wrong Z^n");
    if (g.conductor() != conductor)
      throw Error(ErrorKind::ConductorMismatch, "generator " + g.to_string() + " over the wrong field");
  }
  GroupTable table;
  table.n_ = n;
  table.conductor_ = conductor;
  std::map<AutElement, std::size_t> seen;
  auto id = AutElement::identity(n, conductor);
  table.elements_.push_back(id);
  seen.emplace(id, 0);
  for (std::size_t head = 0; head < table.elements_.size(); ++head) {
    for (const auto& s : gens) {
      AutElement next = compose(s, table.elements_[head]);
      if (seen.count(next)) continue;
      if (table.elements_.size() >= max_order)
        throw Error(ErrorKind::OrderExceeded,
                    "group closure exceeds " + std::to_string(max_order) + " elements");
      seen.emplace(next, table.elements_.size());
      table.elements_.push_back(std::move(next));
    }
  }
  table.identity_index_ = 0;
  return table;
}

GroupTable generate_group(const std::vector<AutElement>& gens, std::size_t max_order) {
  if (gens.empty())
    throw Error(ErrorKind::Validation, "generate_group needs the dimension when there are no generators");
  return generate_group(gens.front().dimension(), gens.front().conductor(), gens, max_order);
}

std::optional<std::size_t> element_order(const AutElement& g, std::size_t bound) {
  AutElement p = g;
  for (std::size_t e = 1; e <= bound; ++e) {
    if (p.is_identity()) return e;
    p = compose(g, p);
  }
  return std::nullopt;
}

}  // namespace symlat
