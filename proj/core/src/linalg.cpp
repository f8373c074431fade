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

#include "symlat/linalg.hpp"

#include <algorithm>

namespace symlat {

SparseVector sparse_axpy(const SparseVector& a, const Cyclotomic& c, const SparseVector& b) {
  if (c.is_zero()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Cyclotomic v = ia->second + c * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVector sparse_add(const SparseVector& a, const SparseVector& b) {
  if (b.empty()) return a;
  return sparse_axpy(a, Cyclotomic::one(b.front().second.conductor()), b);
}

SparseVector sparse_scale(const SparseVector& a, const Cyclotomic& c) {
  SparseVector out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, v * c);
  return out;
}

Cyclotomic sparse_at(const SparseVector& v, std::size_t index, int conductor) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  return (it != v.end() && it->first == index) ? it->second : Cyclotomic::zero(conductor);
}

Cyclotomic sparse_dot(const SparseVector& a, const SparseVector& b, int conductor) {
  Cyclotomic s = Cyclotomic::zero(conductor);
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

SparseVector sparse_from_pairs(std::vector<std::pair<std::size_t, Cyclotomic>> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second += v;
    else
      out.emplace_back(i, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<SparseVector> EchelonForm::row_list() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

SparseVector EchelonForm::reduce(const SparseVector& v) const {
  // Rows are fully reduced, so eliminating the entry at pivot p only touches
  // non-pivot columns beyond p; a single left-to-right sweep suffices.
  std::map<std::size_t, Cyclotomic> acc(v.begin(), v.end());
  auto it = acc.begin();
  while (it != acc.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    Cyclotomic c = it->second;
    for (const auto& [j, a] : row->second) {
      auto [slot, inserted] = acc.try_emplace(j, Cyclotomic::zero(conductor_));
      slot->second -= c * a;
      if (slot->second.is_zero()) acc.erase(slot);
    }
    it = acc.upper_bound(col);
  }
  return SparseVector(acc.begin(), acc.end());
}

bool EchelonForm::insert(const SparseVector& v) {
  for (const auto& [i, c] : v)
    if (i >= columns_) throw Error(ErrorKind::DimensionMismatch, "vector index beyond column count");
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().first;
  r = sparse_scale(r, r.front().second.inv());
  for (auto& [p, row] : rows_) {
    Cyclotomic c = sparse_at(row, pivot, conductor_);
    if (!c.is_zero()) row = sparse_axpy(row, -c, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVector> EchelonForm::nullspace() const {
  // For a free column c: f = e_c - sum_{rows with pivot p} row[c] * e_p.
  // Re-inserting into a fresh form yields the canonical RREF.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Cyclotomic>>> by_free;
  for (std::size_t c = 0; c < columns_; ++c)
    if (!rows_.count(c)) by_free[c].emplace_back(c, Cyclotomic::one(conductor_));
  for (const auto& [p, row] : rows_)
    for (const auto& [c, a] : row)
      if (c != p) by_free[c].emplace_back(p, -a);
  EchelonForm basis(columns_, conductor_);
  for (auto& [c, entries] : by_free) basis.insert(sparse_from_pairs(std::move(entries)));
  return basis.row_list();
}

std::vector<Cyclotomic> EchelonForm::coordinates(const SparseVector& v) const {
  std::vector<Cyclotomic> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(sparse_at(v, p, conductor_));
  return out;
}

EchelonForm echelon_of(std::size_t columns, int conductor, const std::vector<SparseVector>& vs) {
  EchelonForm e(columns, conductor);
  for (const auto& v : vs) e.insert(v);
  return e;
}

}  // namespace symlat
