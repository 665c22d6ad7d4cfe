#include "bca/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bca/error.hpp"

namespace bca {

namespace {

Path cycle_power(const Quiver& q, std::size_t first, int power) {
  const auto rot = q.rotation(first);
  Path p;
  for (int k = 0; k < power; ++k) p.insert(p.end(), rot.arrows.begin(), rot.arrows.end());
  return p;
}

}  // namespace

PathPolynomial Relation::polynomial(const Quiver& quiver) const {
  switch (kind) {
    case RelationKind::One:
      return {{cycle_power(quiver, first, power), 1}, {cycle_power(quiver, second, second_power), -1}};
    case RelationKind::Two: {
      Path p = cycle_power(quiver, first, power);
      p.push_back(first);
      return {{std::move(p), 1}};
    }
    case RelationKind::Three:
      return {{{first, second}, 1}};
  }
  return {};
}

std::vector<Relation> relations(const Quiver& quiver) {
  std::vector<Relation> out;
  const auto& mu = quiver.multiplicities();
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    const auto at = cycles_at(quiver, v);
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j)
        out.push_back({RelationKind::One, at[i].first(), at[j].first(), at[i].multiplicity, at[j].multiplicity});
  }
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a)
    out.push_back({RelationKind::Two, a, a, mu[quiver.arrows[a].origin], 0});
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a)
    for (std::size_t b = 0; b < quiver.arrow_count(); ++b)
      if (quiver.arrows[b].source == quiver.arrows[a].target && b != quiver.next(a))
        out.push_back({RelationKind::Three, a, b, 0, 0});
  return out;
}

Algebra::Algebra(Configuration cfg, BuildOptions options)
    : cfg_(options.reduce ? reduce(cfg) : std::move(cfg)),
      quiver_(build_quiver(cfg_)),
      cycles_(special_cycles(cfg_, quiver_)),
      relations_(bca::relations(quiver_)) {
  const std::size_t n = quiver_.vertex_count();
  const std::size_t m = quiver_.arrow_count();

  for (std::size_t v = 0; v < n; ++v) basis_.push_back({BasisKind::Idempotent, v, 0, 0});
  prefix_offset_.resize(m);
  power_length_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& arrow = quiver_.arrows[a];
    power_length_[a] = quiver_.cycles()[arrow.origin].size() *
                       static_cast<std::size_t>(quiver_.multiplicities()[arrow.origin]);
    bound_ = std::max(bound_, power_length_[a] + 1);
    prefix_offset_[a] = basis_.size();
    for (std::size_t len = 1; len < power_length_[a]; ++len)
      basis_.push_back({BasisKind::Prefix, arrow.source, a, len});
  }
  socle_offset_ = basis_.size();
  for (std::size_t v = 0; v < n; ++v) basis_.push_back({BasisKind::Socle, v, 0, 0});

  // Socle representative: least configuration vertex at v, then least position.
  socle_arrow_.assign(n, m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& arrow = quiver_.arrows[a];
    std::size_t& best = socle_arrow_[arrow.source];
    if (best == m) {
      best = a;
      continue;
    }
    const auto& cur = quiver_.arrows[best];
    const auto& an = cfg_.vertices()[arrow.origin].name;
    const auto& cn = cfg_.vertices()[cur.origin].name;
    if (name_less(an, cn) || (an == cn && arrow.position < cur.position)) best = a;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (socle_arrow_[v] == m) throw DomainError("polygon " + quiver_.vertices[v] + " has no active vertex");

  table_.dim = basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    switch (b.kind) {
      case BasisKind::Idempotent:
        table_.labels.push_back("e_" + quiver_.vertices[b.vertex]);
        table_.idempotents.push_back(i);
        table_.trace.push_back(0);
        break;
      case BasisKind::Prefix:
        table_.labels.push_back(quiver_.describe(representative(i)));
        table_.trace.push_back(0);
        break;
      case BasisKind::Socle:
        table_.labels.push_back("s_" + quiver_.vertices[b.vertex]);
        table_.trace.push_back(1);
        break;
    }
  }
  for (std::size_t a = 0; a < m; ++a) table_.arrows.push_back(*normal_form_index({a}));
  table_.products = kernels::tabulate(table_.dim, basis_product());
}

std::size_t Algebra::prefix(std::size_t arrow, std::size_t length) const {
  if (arrow >= power_length_.size() || length == 0 || length >= power_length_[arrow])
    throw DomainError("no prefix basis element of that length");
  return prefix_offset_[arrow] + length - 1;
}

std::size_t Algebra::source(std::size_t i) const { return basis_[i].vertex; }

std::size_t Algebra::target(std::size_t i) const {
  const auto& b = basis_[i];
  if (b.kind != BasisKind::Prefix) return b.vertex;
  const auto& cyc = quiver_.cycles()[quiver_.arrows[b.arrow].origin];
  const std::size_t last = cyc[(quiver_.arrows[b.arrow].position + b.length - 1) % cyc.size()];
  return quiver_.arrows[last].target;
}

Path Algebra::representative(std::size_t i) const {
  const auto& b = basis_[i];
  if (b.kind == BasisKind::Idempotent) return {};
  const std::size_t first = b.kind == BasisKind::Prefix ? b.arrow : socle_arrow_[b.vertex];
  const std::size_t len = b.kind == BasisKind::Prefix ? b.length : power_length_[first];
  const auto& cyc = quiver_.cycles()[quiver_.arrows[first].origin];
  const std::size_t pos = quiver_.arrows[first].position;
  Path p;
  for (std::size_t k = 0; k < len; ++k) p.push_back(cyc[(pos + k) % cyc.size()]);
  return p;
}

std::optional<std::size_t> Algebra::find_basis(const std::string& label) const {
  for (std::size_t i = 0; i < table_.labels.size(); ++i)
    if (table_.labels[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Algebra::normal_form_index(const Path& path) const {
  if (path.empty()) throw DomainError("empty path");
  if (!quiver_.composable(path)) throw DomainError("path is not composable");
  const std::size_t a = path.front();
  if (path.size() > power_length_[a]) return std::nullopt;
  const auto& cyc = quiver_.cycles()[quiver_.arrows[a].origin];
  const std::size_t pos = quiver_.arrows[a].position;
  for (std::size_t k = 0; k < path.size(); ++k)
    if (path[k] != cyc[(pos + k) % cyc.size()]) return std::nullopt;
  if (path.size() == power_length_[a]) return socle(quiver_.arrows[a].source);
  return prefix(a, path.size());
}

AlgebraElement Algebra::normal_form(const Path& path) const {
  if (const auto i = normal_form_index(path)) return {{*i, Rational(1)}};
  return {};
}

AlgebraElement Algebra::multiply_basis(std::size_t i, std::size_t j) const {
  const auto& x = basis_[i];
  const auto& y = basis_[j];
  const AlgebraElement bi{{i, Rational(1)}}, bj{{j, Rational(1)}};
  if (x.kind == BasisKind::Idempotent) return source(j) == x.vertex ? bj : AlgebraElement{};
  if (y.kind == BasisKind::Idempotent) return target(i) == y.vertex ? bi : AlgebraElement{};
  if (x.kind == BasisKind::Socle || y.kind == BasisKind::Socle) return {};

  const auto& arrow = quiver_.arrows[x.arrow];
  const auto& cyc = quiver_.cycles()[arrow.origin];
  if (y.arrow != cyc[(arrow.position + x.length) % cyc.size()]) return {};
  const std::size_t len = x.length + y.length;
  const std::size_t full = power_length_[x.arrow];
  if (len > full) return {};
  if (len == full) return {{socle(arrow.source), Rational(1)}};
  return {{prefix(x.arrow, len), Rational(1)}};
}

BasisProduct Algebra::basis_product() const {
  return [this](std::size_t i, std::size_t j) { return multiply_basis(i, j); };
}

Algebra build_algebra(const Configuration& cfg, BuildOptions options) { return Algebra(cfg, options); }

AlgebraElement normal_form_path(const Algebra& alg, const Path& path) { return alg.normal_form(path); }

AlgebraElement multiply(const Algebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  return alg.multiply(x, y);
}

DimensionReport dimension(const Algebra& alg) {
  DimensionReport r;
  const auto& q = alg.quiver();
  r.vertices = q.vertex_count();
  r.formula = 2 * q.vertex_count();
  for (std::size_t c : alg.cycles().canonical) {
    const auto& cyc = alg.cycles().rotations[c];
    const std::size_t len = cyc.length();
    const std::size_t contribution = len * (static_cast<std::size_t>(cyc.multiplicity) * len - 1);
    r.terms.push_back({alg.configuration().vertices()[cyc.origin].name, len, cyc.multiplicity, contribution});
    r.formula += contribution;
  }
  r.basis_count = alg.dim();
  return r;
}

std::size_t brute_force_dimension(const Configuration& cfg, OracleLimits limits) {
  const Configuration reduced = reduce(cfg);
  const Quiver q = build_quiver(reduced);
  std::size_t top = 0;
  for (std::size_t v = 0; v < reduced.vertex_count(); ++v)
    if (reduced.active(v)) top = std::max<std::size_t>(top, reduced.val(v) * reduced.multiplicity(v));
  std::vector<PathPolynomial> polys;
  for (const auto& r : relations(q)) polys.push_back(r.polynomial(q));
  PathOracle oracle(QuiverShape::of(q), polys, top + 1, limits);
  if (!oracle.top_degree_vanishes())
    throw DomainError("paths of length " + std::to_string(top + 1) + " survive the relations");
  return oracle.quotient_dimension();
}

PathOracle make_oracle(const Algebra& alg, OracleLimits limits) {
  std::vector<PathPolynomial> polys;
  for (const auto& r : alg.relations()) polys.push_back(r.polynomial(alg.quiver()));
  return PathOracle(QuiverShape::of(alg.quiver()), polys, alg.bound(), limits);
}

Rational symmetric_form(const Algebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  return alg.structure_table().form(alg.multiply(x, y));
}

SymmetryReport check_symmetric(const Algebra& alg) { return check_symmetric(alg.structure_table()); }

std::vector<std::size_t> radical_series(const Algebra& alg) { return radical_series(alg.structure_table()); }

std::size_t loewy_length(const Algebra& alg) { return radical_series(alg).size() - 1; }

std::size_t expected_loewy_length(const Configuration& cfg) {
  std::size_t top = 0;
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v)
    if (cfg.active(v)) top = std::max<std::size_t>(top, cfg.val(v) * cfg.multiplicity(v));
  return top + 1;
}

GradingResult is_length_graded(const Configuration& cfg) {
  if (!is_connected(cfg)) throw DomainError("grading criterion needs a connected configuration");
  GradingResult r{true, std::nullopt};
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    if (!cfg.active(v)) continue;
    const int value = cfg.val(v) * cfg.multiplicity(v);
    if (!r.degree) r.degree = value;
    else if (*r.degree != value) return {false, std::nullopt};
  }
  return r;
}

bool type_one_homogeneous(const Algebra& alg) {
  for (const auto& r : alg.relations()) {
    if (r.kind != RelationKind::One) continue;
    const auto p = r.polynomial(alg.quiver());
    if (p[0].path.size() != p[1].path.size()) return false;
  }
  return true;
}

bool quiver_connected(const Quiver& quiver) {
  const std::size_t n = quiver.vertex_count();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& a : quiver.arrows) {
    const auto s = find(a.source), t = find(a.target);
    if (s != t) {
      parent[s] = t;
      --components;
    }
  }
  return components == 1;
}

bool is_indecomposable(const Algebra& alg) {
  const bool connected = is_connected(alg.configuration());
  if (connected != quiver_connected(alg.quiver()))
    throw std::logic_error("configuration and quiver connectivity disagree");
  return connected;
}

std::vector<std::vector<long>> cartan_matrix(const Algebra& alg) {
  const std::size_t n = alg.quiver().vertex_count();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < alg.dim(); ++i) ++c[alg.source(i)][alg.target(i)];
  return c;
}

std::optional<bool> path2_bijections(const Algebra& alg) {
  if (alg.configuration().has_degenerate()) return std::nullopt;
  const auto& q = alg.quiver();
  std::vector<int> as_first(q.arrow_count(), 0), as_second(q.arrow_count(), 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      if (alg.normal_form_index({a, b})) {
        ++as_first[a];
        ++as_second[b];
      }
    }
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (as_first[a] != 1 || as_second[a] != 1) return false;
  return true;
}

}  // namespace bca
