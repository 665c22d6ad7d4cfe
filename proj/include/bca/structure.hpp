#pragma once

// Finite-dimensional algebras given by a basis and structure constants, and
// the checks that only need that data: symmetry of a trace form, radical
// series, associativity, unit law.
//
// Kernels come in pairs: an OpenMP version and a serial reference that the
// tests hold it to.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bca/rational.hpp"

namespace bca {

struct StructureTable {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> idempotents;  // vertex idempotents; they sum to 1
  std::vector<std::size_t> arrows;       // classes of arrows; they generate the radical
  std::vector<Rational> trace;           // symmetrizing form on basis elements
  std::vector<SparseVector> products;    // products[i * dim + j] = b_i * b_j

  const SparseVector& product(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  Rational form(const SparseVector& x) const;
  SparseVector unit() const;
  bool is_idempotent_basis(std::size_t i) const;
};

using BasisProduct = std::function<SparseVector(std::size_t, std::size_t)>;

namespace kernels {

std::vector<SparseVector> tabulate(std::size_t dim, const BasisProduct& product);
std::vector<SparseVector> tabulate_serial(std::size_t dim, const BasisProduct& product);

/// G[i][j] = trace(b_i * b_j).
std::vector<std::vector<Rational>> gram(const StructureTable& table);
std::vector<std::vector<Rational>> gram_serial(const StructureTable& table);

/// Number of basis triples (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
std::size_t associativity_failures(const StructureTable& table,
                                   const std::vector<std::array<std::size_t, 3>>& triples);
std::size_t associativity_failures_serial(const StructureTable& table,
                                          const std::vector<std::array<std::size_t, 3>>& triples);

}  // namespace kernels

struct SymmetryReport {
  bool symmetric = true;
  bool nondegenerate = true;
  std::size_t gram_rank = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // asymmetric pair

  bool ok() const { return symmetric && nondegenerate; }
};

/// trace(b_i b_j) == trace(b_j b_i) for all pairs and the Gram matrix has
/// full rank.
SymmetryReport check_symmetric(const StructureTable& table);

/// dim rad^0, dim rad^1, ..., ending with 0. rad is spanned by the
/// non-idempotent basis elements; rad^(k+1) is spanned by x * a for x in
/// rad^k and a an arrow.
std::vector<std::size_t> radical_series(const StructureTable& table);

/// 1 * b = b * 1 = b for every basis element.
bool satisfies_unit_law(const StructureTable& table);

/// Every basis triple.
std::vector<std::array<std::size_t, 3>> all_triples(std::size_t dim);

}  // namespace bca
