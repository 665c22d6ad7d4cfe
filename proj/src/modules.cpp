#include "bca/modules.hpp"

#include <algorithm>

#include "bca/error.hpp"
#include "bca/linalg.hpp"

namespace bca {

namespace {

SparseVector unit_vector(std::size_t i) { return {{i, Rational(1)}}; }

std::size_t span_rank(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b = {}) {
  RowEchelon e;
  for (std::size_t i : a) e.insert(unit_vector(i));
  for (std::size_t i : b) e.insert(unit_vector(i));
  return e.rank();
}

/// x A as an echelon basis.
RowEchelon right_ideal(const Algebra& alg, std::size_t x) {
  RowEchelon e;
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    auto y = alg.multiply_basis(x, b);
    if (!y.empty()) e.insert(std::move(y));
  }
  return e;
}

}  // namespace

UniserialChain uniserial_chain(const Algebra& alg, std::size_t first_arrow) {
  if (first_arrow >= alg.quiver().arrow_count()) throw DomainError("arrow index out of range");
  const std::size_t full = alg.power_length(first_arrow);
  const std::size_t v = alg.quiver().arrows[first_arrow].source;
  UniserialChain c{first_arrow, {}, {}, {}};
  for (std::size_t j = 1; j <= full; ++j) {
    const std::size_t gen = j < full ? alg.prefix(first_arrow, j) : alg.socle(v);
    c.generators.push_back(gen);
    c.layers.push_back(alg.target(gen));
    std::vector<std::size_t> basis;
    for (std::size_t k = j; k < full; ++k) basis.push_back(alg.prefix(first_arrow, k));
    basis.push_back(alg.socle(v));
    c.bases.push_back(std::move(basis));
  }
  return c;
}

ProjectiveStructure projective_structure(const Algebra& alg, std::size_t polygon) {
  const auto& cfg = alg.configuration();
  const auto& q = alg.quiver();
  if (polygon >= q.vertex_count()) throw DomainError("polygon index out of range");

  ProjectiveStructure p;
  p.vertex = polygon;
  p.polygon = q.vertices[polygon];
  for (std::size_t m : cfg.members(polygon)) p.expected_r += cfg.active(m) ? 1 : 0;
  if (cfg.polygon_size(polygon) == 2)
    for (std::size_t m : cfg.members(polygon)) p.truncated_two_gon = p.truncated_two_gon || cfg.truncated(m);

  for (const auto& rot : cycles_at(q, polygon)) p.chains.push_back(uniserial_chain(alg, rot.first()));
  p.r = p.chains.size();
  p.uniserial = p.r == 1;

  for (std::size_t i = 0; i < alg.dim(); ++i) p.dim += alg.source(i) == polygon ? 1 : 0;
  p.dim_from_chains = 2;
  for (const auto& c : p.chains) p.dim_from_chains += c.length() - 1;

  for (const auto& c : p.chains) {
    for (std::size_t j = 0; j < c.length(); ++j) {
      const auto ideal = right_ideal(alg, c.generators[j]);
      bool same = ideal.rank() == c.bases[j].size();
      for (std::size_t b : c.bases[j]) same = same && ideal.contains(unit_vector(b));
      p.chains_generated = p.chains_generated && same;
    }
    std::vector<std::size_t> heart(c.layers.begin(), c.layers.end() - 1);
    p.heart.push_back(std::move(heart));
  }

  std::vector<std::size_t> all;
  std::size_t sum = 0;
  for (const auto& c : p.chains) {
    all.insert(all.end(), c.bases.front().begin(), c.bases.front().end());
    sum += c.bases.front().size();
  }
  const std::size_t rad_dim = p.dim - 1;
  p.chains_span_radical = span_rank(all) == rad_dim;
  p.sequence_dimension = p.r >= 1 && sum - (p.r - 1) == rad_dim;

  const std::size_t soc = alg.socle(polygon);
  for (std::size_t i = 0; i < p.r; ++i)
    for (std::size_t j = i + 1; j < p.r; ++j) {
      const auto& a = p.chains[i].bases.front();
      const auto& b = p.chains[j].bases.front();
      const std::size_t meet = span_rank(a) + span_rank(b) - span_rank(a, b);
      const bool has_soc = std::find(a.begin(), a.end(), soc) != a.end() &&
                           std::find(b.begin(), b.end(), soc) != b.end();
      p.socle_intersections = p.socle_intersections && meet == 1 && has_soc;
    }
  return p;
}

std::vector<ProjectiveStructure> projective_structures(const Algebra& alg) {
  std::vector<ProjectiveStructure> out;
  for (std::size_t v = 0; v < alg.quiver().vertex_count(); ++v) out.push_back(projective_structure(alg, v));
  return out;
}

std::size_t heart_summand_count(const Algebra& alg, std::size_t polygon) {
  const auto p = projective_structure(alg, polygon);
  std::size_t longest = 0;
  for (const auto& c : p.chains) longest = std::max(longest, c.length());
  if (longest < 2) throw DomainError("rad^2 of the projective at " + p.polygon + " is zero");
  return p.r;
}

}  // namespace bca
