#pragma once

// Exact sparse row echelon form over the rationals.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "bca/rational.hpp"

namespace bca {

/// Incremental echelon basis of a subspace. The pivot of a row is its
/// largest coordinate; rows are normalized to a pivot coefficient of 1.
class RowEchelon {
 public:
  /// Reduces `v` against the basis; returns true and keeps the remainder if
  /// it is nonzero (i.e. `v` was independent).
  bool insert(SparseVector v);

  /// Remainder of `v` after eliminating every pivot coordinate.
  SparseVector reduce(SparseVector v) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t coordinate) const { return rows_.count(coordinate) != 0; }

 private:
  std::unordered_map<std::size_t, SparseVector> rows_;
};

/// v + factor * w, both sorted sparse vectors.
SparseVector axpy(const SparseVector& v, const Rational& factor, const SparseVector& w);

/// Sorts, merges duplicate coordinates and drops zeros.
SparseVector normalized(SparseVector v);

std::size_t rank(const std::vector<SparseVector>& rows);

/// Rank of a dense integer matrix.
std::size_t rank(const std::vector<std::vector<long>>& matrix);

}  // namespace bca
