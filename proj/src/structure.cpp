#include "bca/structure.hpp"

#include <algorithm>

#include "bca/linalg.hpp"

namespace bca {

SparseVector StructureTable::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y)
      for (const auto& [k, ck] : product(i, j)) acc.emplace_back(k, ci * cj * ck);
  return normalized(std::move(acc));
}

Rational StructureTable::form(const SparseVector& x) const {
  Rational sum = 0;
  for (const auto& [i, c] : x) sum += c * trace[i];
  return sum;
}

SparseVector StructureTable::unit() const {
  SparseVector u;
  for (std::size_t i : idempotents) u.emplace_back(i, Rational(1));
  return normalized(std::move(u));
}

bool StructureTable::is_idempotent_basis(std::size_t i) const {
  return std::find(idempotents.begin(), idempotents.end(), i) != idempotents.end();
}

namespace kernels {

std::vector<SparseVector> tabulate(std::size_t dim, const BasisProduct& product) {
  std::vector<SparseVector> out(dim * dim);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] = product(i, j);
  return out;
}

std::vector<SparseVector> tabulate_serial(std::size_t dim, const BasisProduct& product) {
  std::vector<SparseVector> out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] = product(i, j);
  return out;
}

namespace {

Rational gram_entry(const StructureTable& t, std::size_t i, std::size_t j) {
  Rational sum = 0;
  for (const auto& [k, c] : t.product(i, j)) sum += c * t.trace[k];
  return sum;
}

bool associates(const StructureTable& t, const std::array<std::size_t, 3>& ijk) {
  const auto [i, j, k] = ijk;
  const SparseVector bi{{i, Rational(1)}}, bk{{k, Rational(1)}};
  return t.multiply(t.product(i, j), bk) == t.multiply(bi, t.product(j, k));
}

}  // namespace

std::vector<std::vector<Rational>> gram(const StructureTable& table) {
  std::vector<std::vector<Rational>> g(table.dim, std::vector<Rational>(table.dim));
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < table.dim; ++i)
    for (std::size_t j = 0; j < table.dim; ++j) g[i][j] = gram_entry(table, i, j);
  return g;
}

std::vector<std::vector<Rational>> gram_serial(const StructureTable& table) {
  std::vector<std::vector<Rational>> g(table.dim, std::vector<Rational>(table.dim));
  for (std::size_t i = 0; i < table.dim; ++i)
    for (std::size_t j = 0; j < table.dim; ++j) g[i][j] = gram_entry(table, i, j);
  return g;
}

std::size_t associativity_failures(const StructureTable& table,
                                   const std::vector<std::array<std::size_t, 3>>& triples) {
  std::size_t failures = 0;
#pragma omp parallel for schedule(static) reduction(+ : failures)
  for (std::size_t n = 0; n < triples.size(); ++n)
    if (!associates(table, triples[n])) ++failures;
  return failures;
}

std::size_t associativity_failures_serial(const StructureTable& table,
                                          const std::vector<std::array<std::size_t, 3>>& triples) {
  std::size_t failures = 0;
  for (const auto& t : triples)
    if (!associates(table, t)) ++failures;
  return failures;
}

}  // namespace kernels

SymmetryReport check_symmetric(const StructureTable& table) {
  SymmetryReport report;
  const auto g = kernels::gram(table);
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < table.dim; ++i) {
    SparseVector row;
    for (std::size_t j = 0; j < table.dim; ++j) {
      if (report.symmetric && g[i][j] != g[j][i]) {
        report.symmetric = false;
        report.witness = {i, j};
      }
      if (g[i][j] != 0) row.emplace_back(j, g[i][j]);
    }
    rows.push_back(std::move(row));
  }
  report.gram_rank = rank(rows);
  report.nondegenerate = report.gram_rank == table.dim;
  return report;
}

std::vector<std::size_t> radical_series(const StructureTable& table) {
  std::vector<std::size_t> dims{table.dim};
  std::vector<SparseVector> layer;
  {
    RowEchelon echelon;
    for (std::size_t i = 0; i < table.dim; ++i) {
      if (table.is_idempotent_basis(i)) continue;
      SparseVector b{{i, Rational(1)}};
      if (echelon.insert(b)) layer.push_back(std::move(b));
    }
  }
  while (!layer.empty()) {
    dims.push_back(layer.size());
    RowEchelon echelon;
    std::vector<SparseVector> next;
    for (const auto& x : layer)
      for (std::size_t a : table.arrows) {
        auto y = table.multiply(x, SparseVector{{a, Rational(1)}});
        if (!y.empty() && echelon.insert(y)) next.push_back(std::move(y));
      }
    layer = std::move(next);
    if (dims.size() > table.dim + 2) break;  // rad is not nilpotent on this basis
  }
  dims.push_back(0);
  return dims;
}

bool satisfies_unit_law(const StructureTable& table) {
  const auto one = table.unit();
  for (std::size_t i = 0; i < table.dim; ++i) {
    const SparseVector b{{i, Rational(1)}};
    if (table.multiply(one, b) != b || table.multiply(b, one) != b) return false;
  }
  return true;
}

std::vector<std::array<std::size_t, 3>> all_triples(std::size_t dim) {
  std::vector<std::array<std::size_t, 3>> out;
  out.reserve(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace bca
