#include "bca/rad3.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "bca/error.hpp"
#include "bca/quiver.hpp"

namespace bca {

std::string Graph::name(std::size_t edge) const {
  if (edge < names.size() && !names[edge].empty()) return names[edge];
  return "e" + std::to_string(edge + 1);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_multiset() const {
  auto out = edges;
  for (auto& [i, j] : out)
    if (i > j) std::swap(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Graph::valency() const {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [i, j] : edges) {
    if (i >= 1 && i <= n) ++deg[i - 1];
    if (j >= 1 && j <= n) ++deg[j - 1];
  }
  return deg;
}

std::string Graph::encoding() const {
  std::ostringstream out;
  out << n << ":";
  bool first = true;
  for (const auto& [i, j] : edge_multiset()) {
    out << (first ? "" : ",") << i << "-" << j;
    first = false;
  }
  return out.str();
}

bool equivalent(const Graph& a, const Graph& b) { return a.n == b.n && a.edge_multiset() == b.edge_multiset(); }

void check_graph(const Graph& g) {
  if (g.n == 0) throw DomainError("graph has no vertices");
  for (const auto& [i, j] : g.edges)
    if (i < 1 || i > g.n || j < 1 || j > g.n)
      throw DomainError("edge endpoint out of range 1.." + std::to_string(g.n));
  const auto deg = g.valency();
  for (std::size_t v = 0; v < g.n; ++v)
    if (deg[v] == 0) throw DomainError("vertex " + std::to_string(v + 1) + " is isolated");
}

void check_matrix(const SymMatrix& m) {
  if (m.empty()) throw DomainError("empty matrix");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw DomainError("matrix is not square");
    bool nonzero = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] < 0) throw DomainError("negative matrix entry");
      nonzero = nonzero || m[i][j] != 0;
    }
    if (!nonzero) throw DomainError("row " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("matrix is not symmetric");
}

SymMatrix matrix_from_graph(const Graph& g) {
  check_graph(g);
  SymMatrix m(g.n, std::vector<long>(g.n, 0));
  for (const auto& [i, j] : g.edges) {
    ++m[i - 1][j - 1];
    if (i != j) ++m[j - 1][i - 1];
  }
  return m;
}

Graph graph_from_matrix(const SymMatrix& m) {
  check_matrix(m);
  Graph g;
  g.n = m.size();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i; j < g.n; ++j)
      for (long k = 0; k < m[i][j]; ++k) g.edges.emplace_back(i + 1, j + 1);
  return g;
}

bool is_rad_cubed_zero(const Configuration& cfg) {
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v)
    if (cfg.active(v) && cfg.val(v) * cfg.multiplicity(v) != 2) return false;
  return true;
}

Configuration config_from_graph(const Graph& g) {
  check_graph(g);
  const auto deg = g.valency();
  BrauerConfiguration raw;
  std::vector<std::vector<std::size_t>> incident(g.n);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [i, j] = g.edges[k];
    raw.vertices.push_back({g.name(k), i == j ? 2 : 1});
    incident[i - 1].push_back(k);
    if (i != j) incident[j - 1].push_back(k);
  }
  std::vector<ConfigVertex> markers;
  for (std::size_t v = 0; v < g.n; ++v) {
    Polygon p{"V" + std::to_string(v + 1), {}};
    const auto& inc = incident[v];
    const bool lone_loop = inc.size() == 1 && g.edges[inc[0]].first == g.edges[inc[0]].second;
    if (deg[v] == 1 || lone_loop) {
      const std::string e = g.name(inc[0]);
      const std::string marker = "(" + e + "," + std::to_string(v + 1) + ")";
      markers.push_back({marker, 1});
      p.members = lone_loop ? std::vector<std::string>{marker, e} : std::vector<std::string>{e, marker};
    } else {
      for (std::size_t k : inc) p.members.push_back(g.name(k));
    }
    raw.polygons.push_back(std::move(p));
  }
  raw.vertices.insert(raw.vertices.end(), markers.begin(), markers.end());
  return validated(raw);
}

Graph graph_from_config(const Configuration& cfg) {
  if (!in_ordered_class(cfg)) throw DomainError("configuration is outside the ordered class");
  Graph g;
  g.n = cfg.polygon_count();
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    if (cfg.truncated(v)) continue;
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p < cfg.polygon_count(); ++p)
      if (cfg.occ(v, p) > 0) at.push_back(p + 1);
    if (at.size() == 2) g.edges.emplace_back(at[0], at[1]);
    else if (cfg.multiplicity(v) == 2) g.edges.emplace_back(at[0], at[0]);
    else continue;
    g.names.push_back(cfg.vertices()[v].name);
  }
  return g;
}

CanonicalAlgebra canonical_algebra(const Graph& g) {
  check_graph(g);
  CanonicalAlgebra ca;
  ca.graph = g;
  ca.shape.vertex_count = g.n;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [i, j] = g.edges[k];
    const std::size_t here = ca.arrow_names.size();
    ca.arrow_names.push_back(g.name(k));
    ca.arrow_edge.push_back(k);
    ca.shape.sources.push_back(i - 1);
    ca.shape.targets.push_back(j - 1);
    if (i == j) {
      ca.partner.push_back(here);
      continue;
    }
    ca.arrow_names.push_back(g.name(k) + "'");
    ca.arrow_edge.push_back(k);
    ca.shape.sources.push_back(j - 1);
    ca.shape.targets.push_back(i - 1);
    ca.partner.push_back(here + 1);
    ca.partner.push_back(here);
  }
  const std::size_t m = ca.arrow_names.size();

  std::vector<std::vector<Path>> distinguished(g.n);
  for (std::size_t a = 0; a < m; ++a) distinguished[ca.shape.sources[a]].push_back({a, ca.partner[a]});
  for (const auto& at : distinguished)
    for (std::size_t x = 0; x < at.size(); ++x)
      for (std::size_t y = x + 1; y < at.size(); ++y) ca.relations.push_back({{at[x], 1}, {at[y], -1}});
  for (std::size_t a = 0; a < m; ++a) ca.relations.push_back({{{a, ca.partner[a], a}, 1}});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (ca.shape.sources[b] == ca.shape.targets[a] && b != ca.partner[a])
        ca.relations.push_back({{{a, b}, 1}});

  auto& t = ca.table;
  t.dim = 2 * g.n + m;
  for (std::size_t v = 0; v < g.n; ++v) {
    t.labels.push_back("e_" + std::to_string(v + 1));
    t.idempotents.push_back(v);
  }
  for (std::size_t a = 0; a < m; ++a) {
    t.labels.push_back(ca.arrow_names[a]);
    t.arrows.push_back(ca.arrow(a));
  }
  for (std::size_t v = 0; v < g.n; ++v) t.labels.push_back("s_" + std::to_string(v + 1));
  t.trace.assign(t.dim, 0);
  for (std::size_t v = 0; v < g.n; ++v) t.trace[ca.socle(v)] = 1;

  auto kind = [&](std::size_t i) { return i < g.n ? 0 : i < g.n + m ? 1 : 2; };
  auto src = [&](std::size_t i) {
    return kind(i) == 1 ? ca.shape.sources[i - g.n] : kind(i) == 0 ? i : i - g.n - m;
  };
  auto tgt = [&](std::size_t i) {
    return kind(i) == 1 ? ca.shape.targets[i - g.n] : kind(i) == 0 ? i : i - g.n - m;
  };
  t.products = kernels::tabulate(t.dim, [&](std::size_t i, std::size_t j) -> SparseVector {
    if (kind(i) == 0) return src(j) == i ? SparseVector{{j, Rational(1)}} : SparseVector{};
    if (kind(j) == 0) return tgt(i) == j ? SparseVector{{i, Rational(1)}} : SparseVector{};
    if (kind(i) == 1 && kind(j) == 1 && ca.partner[i - g.n] == j - g.n)
      return {{ca.socle(src(i)), Rational(1)}};
    return {};
  });
  return ca;
}

bool verify_canonical_presentation(const CanonicalAlgebra& ca, OracleLimits limits) {
  PathOracle oracle(ca.shape, ca.relations, 3, limits);
  if (!oracle.top_degree_vanishes() || oracle.quotient_dimension() != ca.table.dim) return false;
  const std::size_t n = ca.graph.n;
  const std::size_t m = ca.arrow_names.size();
  std::vector<Path> socle_rep(n);
  for (std::size_t a = m; a-- > 0;) socle_rep[ca.shape.sources[a]] = {a, ca.partner[a]};
  for (const auto& p : oracle.paths()) {
    if (p.size() == 1) {
      if (oracle.in_ideal(p)) return false;
      continue;
    }
    if (p.size() != 2) continue;
    const auto& cls = ca.table.product(ca.arrow(p[0]), ca.arrow(p[1]));
    if (cls.empty()) {
      if (!oracle.in_ideal(p)) return false;
      continue;
    }
    const Path& rep = socle_rep[ca.shape.sources[p[0]]];
    if (cls.size() != 1 || cls[0].first != ca.socle(ca.shape.sources[p[0]]) || cls[0].second != 1) return false;
    if (oracle.in_ideal(rep) || !oracle.in_ideal(PathPolynomial{{p, 1}, {rep, -1}})) return false;
  }
  return true;
}

IsoResult verify_iso(const Algebra& brauer, const CanonicalAlgebra& canonical) {
  IsoResult r;
  const auto& q = brauer.quiver();
  const std::size_t n = canonical.graph.n;
  const std::size_t m = canonical.arrow_names.size();
  if (q.vertex_count() != n || q.arrow_count() != m) {
    r.message = "quivers differ in size";
    return r;
  }
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::size_t> by_key;
  for (std::size_t a = 0; a < m; ++a)
    by_key[{canonical.graph.name(canonical.arrow_edge[a]), canonical.shape.sources[a], canonical.shape.targets[a]}] = a;
  std::vector<bool> hit(m, false);
  for (const auto& arrow : q.arrows) {
    const auto& name = brauer.configuration().vertices()[arrow.origin].name;
    auto it = by_key.find({name, arrow.source, arrow.target});
    if (it == by_key.end() || hit[it->second]) {
      r.message = "no matching arrow for " + arrow.id;
      return r;
    }
    hit[it->second] = true;
    r.arrow_map.push_back(it->second);
  }

  const auto& bt = brauer.structure_table();
  const auto& ct = canonical.table;
  if (bt.dim != ct.dim) {
    r.message = "dimensions differ";
    return r;
  }
  r.basis_map.assign(bt.dim, ct.dim);
  for (std::size_t v = 0; v < n; ++v) {
    r.basis_map[brauer.idempotent(v)] = canonical.idempotent(v);
    r.basis_map[brauer.socle(v)] = canonical.socle(v);
  }
  for (std::size_t a = 0; a < m; ++a) r.basis_map[bt.arrows[a]] = canonical.arrow(r.arrow_map[a]);
  for (std::size_t i = 0; i < bt.dim; ++i)
    if (r.basis_map[i] == ct.dim) {
      r.message = "basis element " + bt.labels[i] + " has no image";
      return r;
    }

  for (std::size_t i = 0; i < bt.dim; ++i) {
    if (bt.trace[i] != ct.trace[r.basis_map[i]]) {
      r.mismatch = {i, i};
      r.message = "trace differs on " + bt.labels[i];
      return r;
    }
    for (std::size_t j = 0; j < bt.dim; ++j) {
      SparseVector image;
      for (const auto& [k, c] : bt.product(i, j)) image.emplace_back(r.basis_map[k], c);
      std::sort(image.begin(), image.end());
      if (image != ct.product(r.basis_map[i], r.basis_map[j])) {
        r.mismatch = {i, j};
        r.message = "product " + bt.labels[i] + " * " + bt.labels[j] + " differs";
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) pairs.emplace_back(i, j);

  std::vector<Graph> out;
  std::vector<std::size_t> pick;
  for (std::size_t count = 1; count <= max_edges && !pairs.empty(); ++count) {
    pick.assign(count, 0);  // nondecreasing indices into pairs
    while (true) {
      Graph g;
      g.n = n;
      for (std::size_t k : pick) g.edges.push_back(pairs[k]);
      const auto deg = g.valency();
      if (std::none_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 0; })) out.push_back(std::move(g));
      std::size_t pos = count;
      while (pos > 0 && pick[pos - 1] == pairs.size() - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < count; ++k) pick[k] = pick[pos - 1];
    }
  }
  return out;
}

Rad3Case verify_rad3_case(const Graph& g) {
  Rad3Case c;
  c.graph = g;
  try {
    const Configuration cfg = config_from_graph(g);
    const Algebra alg = build_algebra(cfg);
    const CanonicalAlgebra ca = canonical_algebra(g);
    c.brauer_dim = alg.dim();
    c.canonical_dim = ca.table.dim;

    const auto iso = verify_iso(alg, ca);
    c.iso = iso.ok;
    if (!iso.ok) c.failure = iso.message;

    const auto sym = check_symmetric(ca.table);
    const auto series = radical_series(ca.table);
    const std::vector<std::size_t> expected{ca.table.dim, ca.table.dim - g.n, g.n, 0};
    c.canonical_ok = sym.ok() && series == expected && verify_canonical_presentation(ca);
    if (!c.canonical_ok && c.failure.empty()) c.failure = "canonical presentation check failed";

    const auto m = matrix_from_graph(g);
    const bool matrix_trip = matrix_from_graph(graph_from_matrix(m)) == m &&
                             equivalent(graph_from_matrix(m), g);
    const Graph back = graph_from_config(cfg);
    const bool config_trip = equivalent(back, g) && is_equivalent_ordered(config_from_graph(back), cfg);
    c.round_trips = matrix_trip && config_trip;
    if (!c.round_trips && c.failure.empty()) c.failure = "round trip did not close";
  } catch (const std::exception& e) {
    c.failure = e.what();
  }
  return c;
}

namespace {

std::vector<Graph> sweep_graphs(std::size_t max_n, std::size_t max_edges) {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto gs = enumerate_graphs(n, max_edges);
    all.insert(all.end(), gs.begin(), gs.end());
  }
  return all;
}

}  // namespace

std::size_t Rad3Report::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const Rad3Case& c) { return !c.ok(); }));
}

Rad3Report verify_rad3_exhaustive(std::size_t max_n, std::size_t max_edges) {
  const auto graphs = sweep_graphs(max_n, max_edges);
  Rad3Report report;
  report.cases.resize(graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < graphs.size(); ++k) report.cases[k] = verify_rad3_case(graphs[k]);
  return report;
}

Rad3Report verify_rad3_exhaustive_serial(std::size_t max_n, std::size_t max_edges) {
  Rad3Report report;
  for (const auto& g : sweep_graphs(max_n, max_edges)) report.cases.push_back(verify_rad3_case(g));
  return report;
}

}  // namespace bca
