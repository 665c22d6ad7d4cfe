#pragma once

// Test-side oracles and generators. Nothing here calls the library's
// relation, basis or oracle code: relations are rebuilt from the successor
// sequences and the quotient is computed with a dense exact elimination.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bca/config.hpp"
#include "bca/fixtures.hpp"
#include "bca/rad3.hpp"
#include "bca/rational.hpp"

namespace testing_support {

using bca::Rational;

inline bca::Configuration fixture(const std::string& name) { return bca::load_fixture_configuration(name); }

/// Copy with every vertex name and polygon label suffixed, for disjoint unions.
inline bca::Configuration renamed(const bca::Configuration& cfg, const std::string& suffix) {
  bca::BrauerConfiguration raw = cfg.data();
  for (auto& v : raw.vertices) v.name += suffix;
  for (auto& p : raw.polygons) {
    p.label += suffix;
    for (auto& m : p.members) m += suffix;
  }
  bca::Orientation o;
  for (auto [v, refs] : raw.orientation) {
    for (auto& r : refs) r.polygon += suffix;
    o[v + suffix] = refs;
  }
  raw.orientation = o;
  return bca::validated(raw, cfg.options());
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct RawArrow {
  std::size_t source, target, origin, position;
};

struct RawPresentation {
  std::size_t vertices = 0;
  std::vector<RawArrow> arrows;
  std::vector<std::vector<std::size_t>> cycle;  // arrows per configuration vertex
  std::vector<int> mu;
  std::size_t bound = 1;
  std::vector<std::vector<std::size_t>> monomials;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> binomials;  // p - q
};

inline RawPresentation raw_presentation(const bca::Configuration& cfg) {
  RawPresentation r;
  r.vertices = cfg.polygon_count();
  r.cycle.resize(cfg.vertex_count());
  r.mu.resize(cfg.vertex_count());
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    if (!cfg.active(v)) continue;
    const auto& seq = cfg.successors(v);
    r.mu[v] = cfg.multiplicity(v);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      r.cycle[v].push_back(r.arrows.size());
      r.arrows.push_back({seq[i].polygon, seq[(i + 1) % seq.size()].polygon, v, i});
    }
    r.bound = std::max(r.bound, seq.size() * static_cast<std::size_t>(r.mu[v]) + 1);
  }
  auto power = [&](std::size_t a) {
    const auto& c = r.cycle[r.arrows[a].origin];
    std::vector<std::size_t> p;
    const std::size_t len = c.size() * static_cast<std::size_t>(r.mu[r.arrows[a].origin]);
    for (std::size_t k = 0; k < len; ++k) p.push_back(c[(r.arrows[a].position + k) % c.size()]);
    return p;
  };
  auto next = [&](std::size_t a) {
    const auto& c = r.cycle[r.arrows[a].origin];
    return c[(r.arrows[a].position + 1) % c.size()];
  };
  for (std::size_t a = 0; a < r.arrows.size(); ++a) {
    auto p = power(a);
    p.push_back(a);
    r.monomials.push_back(p);
    for (std::size_t b = 0; b < r.arrows.size(); ++b)
      if (r.arrows[b].source == r.arrows[a].target && b != next(a)) r.monomials.push_back({a, b});
    for (std::size_t b = a + 1; b < r.arrows.size(); ++b)
      if (r.arrows[b].source == r.arrows[a].source) r.binomials.push_back({power(a), power(b)});
  }
  return r;
}

struct IndependentQuotient {
  std::size_t dimension = 0;
  bool top_vanishes = false;
};

/// dim KQ / (I + paths of length > bound) for the reduced configuration.
inline IndependentQuotient independent_quotient(const bca::Configuration& input) {
  const auto cfg = bca::reduce(input);
  const auto r = raw_presentation(cfg);
  const std::size_t n_len = r.bound;

  std::vector<std::vector<std::size_t>> paths;
  for (std::size_t a = 0; a < r.arrows.size(); ++a) paths.push_back({a});
  for (std::size_t begin = 0; begin < paths.size(); ++begin) {
    if (paths[begin].size() >= n_len) continue;
    for (std::size_t a = 0; a < r.arrows.size(); ++a)
      if (r.arrows[a].source == r.arrows[paths[begin].back()].target) {
        auto p = paths[begin];
        p.push_back(a);
        paths.push_back(std::move(p));
      }
  }
  auto contains = [](const std::vector<std::size_t>& hay, const std::vector<std::size_t>& needle) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
  };
  std::map<std::vector<std::size_t>, std::size_t> alive;
  for (const auto& p : paths) {
    bool dead = false;
    for (const auto& m : r.monomials) dead = dead || contains(p, m);
    if (!dead) alive.emplace(p, 0);
  }
  std::size_t col = 0;
  for (auto& [p, c] : alive) c = col++;

  std::vector<std::vector<Rational>> rows;
  for (const auto& [p, q] : r.binomials) {
    const std::size_t s = r.arrows[p.front()].source;
    std::vector<std::vector<std::size_t>> lefts{{}}, rights{{}};
    for (const auto& u : paths)
      if (r.arrows[u.back()].target == s && u.size() + p.size() <= n_len) lefts.push_back(u);
    for (const auto& w : paths)
      if (r.arrows[w.front()].source == s && w.size() + p.size() <= n_len) rights.push_back(w);
    for (const auto& u : lefts)
      for (const auto& w : rights) {
        std::vector<Rational> row(col);
        bool any = false;
        for (int sign : {1, -1}) {
          std::vector<std::size_t> t = u;
          const auto& mid = sign == 1 ? p : q;
          t.insert(t.end(), mid.begin(), mid.end());
          t.insert(t.end(), w.begin(), w.end());
          auto it = alive.find(t);
          if (t.size() <= n_len && it != alive.end()) {
            row[it->second] += sign;
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  IndependentQuotient out;
  const std::size_t rank = dense_rank(rows);
  out.dimension = r.vertices + col - rank;

  // Every surviving top-length path must be a combination of the relation rows.
  out.top_vanishes = true;
  for (const auto& [p, c] : alive) {
    if (p.size() != n_len) continue;
    auto extended = rows;
    std::vector<Rational> e(col);
    e[c] = 1;
    extended.push_back(e);
    if (dense_rank(extended) != rank) out.top_vanishes = false;
  }
  return out;
}

struct RandomShape {
  std::size_t max_polygons = 6;
  std::size_t max_vertices = 8;
  int max_mu = 3;
  std::size_t max_polygon_size = 4;
};

/// A valid configuration with a random orientation. Retries until C1-C3 hold.
inline bca::Configuration random_configuration(std::mt19937& rng, const RandomShape& shape = {}) {
  while (true) {
    const std::size_t np = std::uniform_int_distribution<std::size_t>(1, shape.max_polygons)(rng);
    const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, shape.max_vertices)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::uniform_int_distribution<std::size_t> size(2, shape.max_polygon_size);
    std::uniform_int_distribution<int> mu(1, shape.max_mu);

    bca::BrauerConfiguration raw;
    std::set<std::size_t> used;
    for (std::size_t p = 0; p < np; ++p) {
      bca::Polygon poly{"P" + std::to_string(p + 1), {}};
      const std::size_t d = size(rng);
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t v = pick(rng);
        used.insert(v);
        poly.members.push_back("x" + std::to_string(v + 1));
      }
      raw.polygons.push_back(std::move(poly));
    }
    for (std::size_t v : used) raw.vertices.push_back({"x" + std::to_string(v + 1), mu(rng)});
    for (const auto& v : raw.vertices) {
      std::vector<bca::OccurrenceRef> occ;
      for (const auto& p : raw.polygons) {
        int k = 0;
        for (const auto& m : p.members)
          if (m == v.name) occ.push_back({p.label, ++k});
      }
      const bool trunc = occ.size() == 1 && v.multiplicity == 1;
      if (trunc) continue;
      std::shuffle(occ.begin(), occ.end(), rng);
      raw.orientation[v.name] = occ;
    }
    auto r = bca::validate(raw);
    if (r.ok()) return *r.config;
  }
}

/// Graphs counted through their matrices: symmetric non-negative matrices
/// (a loop adds 1 to the diagonal) with 1..max_edges edges and no zero row.
inline std::size_t count_graphs_by_matrix(std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::vector<std::size_t> entry(cells.size(), 0);
  std::size_t count = 0;
  auto walk = [&](auto&& self, std::size_t k, std::size_t budget) -> void {
    if (k == cells.size()) {
      if (budget == max_edges) return;
      std::vector<bool> touched(n, false);
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (entry[c]) touched[cells[c].first] = touched[cells[c].second] = true;
      if (std::all_of(touched.begin(), touched.end(), [](bool b) { return b; })) ++count;
      return;
    }
    for (std::size_t e = 0; e <= budget; ++e) {
      entry[k] = e;
      self(self, k + 1, budget - e);
    }
    entry[k] = 0;
  };
  walk(walk, 0, max_edges);
  return count;
}

}  // namespace testing_support
