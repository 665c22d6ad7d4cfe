#include "bca/config.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bca/error.hpp"

namespace bca {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

std::string describe(const OccurrenceRef& ref) {
  return ref.polygon + "#" + std::to_string(ref.index);
}

}  // namespace

bool name_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    auto sa = strip_zeros(a);
    auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

bool same_cyclic_order(const std::vector<OccurrenceRef>& a, const std::vector<OccurrenceRef>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i)
      match = a[i] == b[(i + shift) % b.size()];
    if (match) return true;
  }
  return false;
}

std::string_view code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::Empty: return "empty";
    case ValidationCode::DuplicateVertex: return "duplicate-vertex";
    case ValidationCode::DuplicatePolygon: return "duplicate-polygon";
    case ValidationCode::BadMultiplicity: return "bad-multiplicity";
    case ValidationCode::UnknownMember: return "unknown-member";
    case ValidationCode::UnusedVertex: return "C1";
    case ValidationCode::TooFewMembers: return "C2";
    case ValidationCode::NoNontruncatedVertex: return "C3";
    case ValidationCode::UnknownOrientationVertex: return "orientation-unknown-vertex";
    case ValidationCode::MissingOrientation: return "orientation-missing";
    case ValidationCode::OrientationUnknownPolygon: return "orientation-unknown-polygon";
    case ValidationCode::OrientationBadOccurrence: return "orientation-bad-occurrence";
    case ValidationCode::OrientationLength: return "orientation-length";
    case ValidationCode::OrientationRepeated: return "orientation-repeated";
  }
  return "unknown";
}

bool Configuration::has_degenerate() const {
  return std::find(degenerate_.begin(), degenerate_.end(), true) != degenerate_.end();
}

std::optional<std::size_t> Configuration::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Configuration::find_polygon(std::string_view label) const {
  auto it = polygon_lookup_.find(std::string(label));
  if (it == polygon_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Configuration::vertex_index(std::string_view name) const {
  if (auto i = find_vertex(name)) return *i;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

std::size_t Configuration::polygon_index(std::string_view label) const {
  if (auto i = find_polygon(label)) return *i;
  throw DomainError("unknown polygon '" + std::string(label) + "'");
}

ValidationResult validate(const BrauerConfiguration& raw, const ValidateOptions& options) {
  ValidationResult result;
  auto& errors = result.errors;
  auto fail = [&](ValidationCode code, std::string subject, std::string message) {
    errors.push_back({code, std::move(subject), std::move(message)});
  };

  if (raw.vertices.empty() || raw.polygons.empty()) {
    fail(ValidationCode::Empty, "", "a configuration needs at least one vertex and one polygon");
    return result;
  }

  Configuration cfg;
  cfg.data_ = raw;
  cfg.options_ = options;
  const std::size_t nv = raw.vertices.size();
  const std::size_t np = raw.polygons.size();

  for (std::size_t i = 0; i < nv; ++i) {
    const auto& v = raw.vertices[i];
    if (!cfg.vertex_lookup_.emplace(v.name, i).second)
      fail(ValidationCode::DuplicateVertex, v.name, "vertex name '" + v.name + "' is used twice");
    if (v.multiplicity < 1)
      fail(ValidationCode::BadMultiplicity, v.name,
           "multiplicity of '" + v.name + "' must be a positive integer");
  }
  for (std::size_t p = 0; p < np; ++p) {
    const auto& poly = raw.polygons[p];
    if (!cfg.polygon_lookup_.emplace(poly.label, p).second)
      fail(ValidationCode::DuplicatePolygon, poly.label,
           "polygon label '" + poly.label + "' is used twice");
  }
  if (!errors.empty()) return result;

  cfg.occ_.assign(nv * np, 0);
  cfg.val_.assign(nv, 0);
  cfg.members_.assign(np, {});
  for (std::size_t p = 0; p < np; ++p) {
    const auto& poly = raw.polygons[p];
    if (poly.members.size() < 2)
      fail(ValidationCode::TooFewMembers, poly.label,
           "polygon '" + poly.label + "' has fewer than two vertices");
    for (const auto& m : poly.members) {
      auto v = cfg.find_vertex(m);
      if (!v) {
        fail(ValidationCode::UnknownMember, poly.label,
             "polygon '" + poly.label + "' names unknown vertex '" + m + "'");
        continue;
      }
      cfg.members_[p].push_back(*v);
      ++cfg.occ_[*v * np + p];
      ++cfg.val_[*v];
    }
  }
  for (std::size_t i = 0; i < nv; ++i)
    if (cfg.val_[i] == 0)
      fail(ValidationCode::UnusedVertex, raw.vertices[i].name,
           "vertex '" + raw.vertices[i].name + "' lies in no polygon");
  if (!errors.empty()) return result;

  cfg.degenerate_.assign(np, false);
  cfg.active_.assign(nv, false);
  for (std::size_t i = 0; i < nv; ++i) cfg.active_[i] = !cfg.truncated(i);
  for (std::size_t p = 0; p < np; ++p) {
    const auto& mem = cfg.members_[p];
    const bool c3 = std::any_of(mem.begin(), mem.end(), [&](std::size_t v) { return !cfg.truncated(v); });
    if (c3) continue;
    if (options.allow_degenerate && mem.size() == 2) {
      cfg.degenerate_[p] = true;
      const std::size_t pick =
          name_less(raw.vertices[mem[1]].name, raw.vertices[mem[0]].name) ? mem[1] : mem[0];
      cfg.active_[pick] = true;
      continue;
    }
    fail(ValidationCode::NoNontruncatedVertex, raw.polygons[p].label,
         "polygon '" + raw.polygons[p].label + "' has no vertex with val*mu > 1");
  }

  // Orientation: resolve, check, fill forced cases, drop truncated entries.
  Orientation oriented;
  for (const auto& [name, seq] : raw.orientation) {
    auto v = cfg.find_vertex(name);
    if (!v) {
      fail(ValidationCode::UnknownOrientationVertex, name,
           "orientation given for unknown vertex '" + name + "'");
      continue;
    }
    std::set<std::pair<std::size_t, int>> seen;
    bool ok = true;
    for (const auto& ref : seq) {
      auto p = cfg.find_polygon(ref.polygon);
      if (!p) {
        fail(ValidationCode::OrientationUnknownPolygon, name,
             "orientation at '" + name + "' names unknown polygon '" + ref.polygon + "'");
        ok = false;
        continue;
      }
      if (ref.index < 1 || ref.index > cfg.occ(*v, *p)) {
        fail(ValidationCode::OrientationBadOccurrence, name,
             "orientation at '" + name + "' refers to " + describe(ref) + " but '" + name +
                 "' occurs " + std::to_string(cfg.occ(*v, *p)) + " time(s) in '" + ref.polygon +
                 "'");
        ok = false;
        continue;
      }
      if (!seen.emplace(*p, ref.index).second) {
        fail(ValidationCode::OrientationRepeated, name,
             "orientation at '" + name + "' repeats " + describe(ref));
        ok = false;
      }
    }
    if (ok && static_cast<int>(seq.size()) != cfg.val_[*v]) {
      fail(ValidationCode::OrientationLength, name,
           "orientation at '" + name + "' has " + std::to_string(seq.size()) +
               " entries but val = " + std::to_string(cfg.val_[*v]));
      ok = false;
    }
    if (ok && !cfg.truncated(*v)) oriented[name] = seq;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    const auto& name = raw.vertices[i].name;
    if (cfg.truncated(i) || oriented.count(name) || raw.orientation.count(name)) continue;
    if (cfg.val_[i] > 2) {
      fail(ValidationCode::MissingOrientation, name,
           "vertex '" + name + "' has valence " + std::to_string(cfg.val_[i]) +
               " and needs an explicit cyclic order");
      continue;
    }
    std::vector<OccurrenceRef> seq;
    for (std::size_t p = 0; p < np; ++p)
      for (int k = 1; k <= cfg.occ(i, p); ++k) seq.push_back({raw.polygons[p].label, k});
    oriented[name] = std::move(seq);
  }
  if (!errors.empty()) return result;

  cfg.data_.orientation = oriented;
  cfg.successors_.assign(nv, {});
  for (std::size_t i = 0; i < nv; ++i) {
    if (!cfg.active_[i]) continue;
    if (cfg.truncated(i)) {
      // designated vertex of a degenerate 2-gon
      for (std::size_t p = 0; p < np; ++p)
        if (cfg.occ(i, p) > 0) cfg.successors_[i].push_back({p, 1});
      continue;
    }
    for (const auto& ref : oriented.at(raw.vertices[i].name))
      cfg.successors_[i].push_back({cfg.polygon_lookup_.at(ref.polygon), ref.index});
  }
  result.config = std::move(cfg);
  return result;
}

Configuration validated(const BrauerConfiguration& raw, const ValidateOptions& options) {
  auto result = validate(raw, options);
  if (result.ok()) return std::move(*result.config);
  std::ostringstream msg;
  msg << "invalid Brauer configuration:";
  for (const auto& e : result.errors) msg << "\n  [" << code_name(e.code) << "] " << e.message;
  throw DomainError(msg.str());
}

int occ(const Configuration& cfg, std::string_view vertex, std::string_view polygon) {
  return cfg.occ(cfg.vertex_index(vertex), cfg.polygon_index(polygon));
}

int val(const Configuration& cfg, std::string_view vertex) { return cfg.val(cfg.vertex_index(vertex)); }

bool is_truncated(const Configuration& cfg, std::string_view vertex) {
  return cfg.truncated(cfg.vertex_index(vertex));
}

std::vector<OccurrenceRef> successor_sequence(const Configuration& cfg, std::string_view vertex) {
  const std::size_t v = cfg.vertex_index(vertex);
  if (cfg.truncated(v))
    throw DomainError("vertex '" + std::string(vertex) + "' is truncated and has no successor sequence");
  std::vector<OccurrenceRef> out;
  for (const auto& o : cfg.successors(v)) out.push_back({cfg.polygons()[o.polygon].label, o.index});
  return out;
}

bool is_reduced(const Configuration& cfg) {
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p) {
    if (cfg.degenerate(p)) continue;
    const auto& mem = cfg.members(p);
    const auto t = std::count_if(mem.begin(), mem.end(), [&](std::size_t v) { return cfg.truncated(v); });
    if (t == 0) continue;
    if (mem.size() == 2 && t == 1) continue;
    return false;
  }
  return true;
}

Configuration reduce(const Configuration& cfg) {
  BrauerConfiguration raw = cfg.data();
  std::vector<bool> removed(cfg.vertex_count(), false);

  std::vector<std::size_t> order(cfg.polygon_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return name_less(cfg.polygons()[a].label, cfg.polygons()[b].label);
  });

  for (std::size_t p : order) {
    if (cfg.degenerate(p)) continue;
    auto& members = raw.polygons[p].members;
    std::vector<std::size_t> candidates;
    for (std::size_t v : cfg.members(p))
      if (cfg.truncated(v)) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return name_less(cfg.vertices()[a].name, cfg.vertices()[b].name);
    });
    for (std::size_t v : candidates) {
      if (members.size() < 3) break;
      members.erase(std::find(members.begin(), members.end(), cfg.vertices()[v].name));
      removed[v] = true;
    }
  }

  std::vector<ConfigVertex> kept;
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v)
    if (!removed[v]) kept.push_back(cfg.vertices()[v]);
  raw.vertices = std::move(kept);
  return validated(raw, cfg.options());
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Component id per polygon, numbered by first polygon appearance.
std::vector<std::size_t> polygon_components(const Configuration& cfg, std::size_t& count) {
  DisjointSets sets(cfg.vertex_count());
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p)
    for (std::size_t v : cfg.members(p)) sets.unite(v, cfg.members(p).front());
  std::vector<std::size_t> comp(cfg.polygon_count());
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p) {
    auto root = sets.find(cfg.members(p).front());
    comp[p] = ids.emplace(root, ids.size()).first->second;
  }
  count = ids.size();
  return comp;
}

}  // namespace

bool is_connected(const Configuration& cfg) {
  std::size_t count = 0;
  polygon_components(cfg, count);
  return count == 1;
}

std::vector<Configuration> connected_components(const Configuration& cfg) {
  std::size_t count = 0;
  const auto comp = polygon_components(cfg, count);
  std::vector<std::size_t> vertex_comp(cfg.vertex_count());
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p)
    for (std::size_t v : cfg.members(p)) vertex_comp[v] = comp[p];

  std::vector<BrauerConfiguration> parts(count);
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    const auto& vert = cfg.vertices()[v];
    auto& part = parts[vertex_comp[v]];
    part.vertices.push_back(vert);
    if (auto it = cfg.data().orientation.find(vert.name); it != cfg.data().orientation.end())
      part.orientation.insert(*it);
  }
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p) parts[comp[p]].polygons.push_back(cfg.polygons()[p]);

  std::vector<Configuration> out;
  for (const auto& part : parts) out.push_back(validated(part, cfg.options()));
  return out;
}

Configuration disjoint_union(const Configuration& a, const Configuration& b) {
  BrauerConfiguration raw = a.data();
  const auto& other = b.data();
  raw.vertices.insert(raw.vertices.end(), other.vertices.begin(), other.vertices.end());
  raw.polygons.insert(raw.polygons.end(), other.polygons.begin(), other.polygons.end());
  for (const auto& [name, seq] : other.orientation)
    if (!raw.orientation.emplace(name, seq).second)
      throw DomainError("disjoint_union: vertex '" + name + "' occurs in both configurations");
  ValidateOptions opts;
  opts.allow_degenerate = a.options().allow_degenerate || b.options().allow_degenerate;
  return validated(raw, opts);
}

bool has_self_folding(const Configuration& cfg) {
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p)
    for (std::size_t v : cfg.members(p))
      if (cfg.occ(v, p) > 1) return true;
  return false;
}

bool in_ordered_class(const Configuration& cfg) {
  if (cfg.has_degenerate() || !is_reduced(cfg) || has_self_folding(cfg)) return false;
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    const int vm = cfg.val(v) * cfg.multiplicity(v);
    if (vm < 1 || vm > 2) return false;
  }
  return true;
}

std::optional<std::map<std::string, std::string>> ordered_equivalence(const Configuration& a,
                                                                      const Configuration& b) {
  if (!in_ordered_class(a) || !in_ordered_class(b))
    throw DomainError("ordered equivalence needs reduced configurations without self-foldings "
                      "and with val*mu <= 2 everywhere");
  if (a.polygon_count() != b.polygon_count() || a.vertex_count() != b.vertex_count())
    return std::nullopt;

  // With no self-foldings a vertex is pinned down, up to renaming, by the set
  // of polygon positions containing it and its multiplicity.
  using Signature = std::pair<std::vector<std::size_t>, int>;
  auto signature = [](const Configuration& c, std::size_t v) {
    Signature s{{}, c.multiplicity(v)};
    for (std::size_t p = 0; p < c.polygon_count(); ++p)
      if (c.occ(v, p) > 0) s.first.push_back(p);
    return s;
  };
  std::map<Signature, std::vector<std::size_t>> pool;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) pool[signature(b, v)].push_back(v);

  std::map<std::string, std::string> witness;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    auto it = pool.find(signature(a, v));
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    witness[a.vertices()[v].name] = b.vertices()[it->second.back()].name;
    it->second.pop_back();
  }
  return witness;
}

bool is_equivalent_ordered(const Configuration& a, const Configuration& b) {
  return ordered_equivalence(a, b).has_value();
}

}  // namespace bca
