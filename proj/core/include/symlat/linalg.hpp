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
#include <map>
#include <utility>
#include <vector>

#include "symlat/scalars.hpp"

namespace symlat {

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Cyclotomic>>;

SparseVector sparse_add(const SparseVector& a, const SparseVector& b);
SparseVector sparse_scale(const SparseVector& a, const Cyclotomic& c);
/// a + c*b
SparseVector sparse_axpy(const SparseVector& a, const Cyclotomic& c, const SparseVector& b);
Cyclotomic sparse_at(const SparseVector& v, std::size_t index, int conductor);
Cyclotomic sparse_dot(const SparseVector& a, const SparseVector& b, int conductor);
/// Drops zero entries and sorts; accepts duplicate indices (summed).
SparseVector sparse_from_pairs(std::vector<std::pair<std::size_t, Cyclotomic>> entries);

/// Incrementally maintained reduced row echelon form over Q(zeta_N).
///
/// Columns are ordered by index; the pivot of a row is its first nonzero
/// column and is scaled to 1; every pivot column is zero in all other rows.
/// The RREF of a subspace is unique, so two forms spanning the same space
/// have identical rows.
class EchelonForm {
 public:
  EchelonForm(std::size_t columns, int conductor)
      : columns_(columns), conductor_(conductor) {}

  std::size_t columns() const { return columns_; }
  int conductor() const { return conductor_; }
  std::size_t rank() const { return rows_.size(); }

  /// pivot column -> row
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }
  std::vector<SparseVector> row_list() const;

  /// v minus its projection along the rows, i.e. zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(const SparseVector& v);

  /// Basis of { f : <row, f> = 0 for every row } in RREF, one vector per
  /// free column.
  std::vector<SparseVector> nullspace() const;

  /// Coordinates of a member of the span with respect to the rows (ordered
  /// by pivot): the entries of v at the pivot columns.
  std::vector<Cyclotomic> coordinates(const SparseVector& v) const;

 private:
  std::size_t columns_;
  int conductor_;
  std::map<std::size_t, SparseVector> rows_;
};

/// RREF of the span of the given vectors.
EchelonForm echelon_of(std::size_t columns, int conductor, const std::vector<SparseVector>& vs);

}  // namespace symlat
