#include "bca/quiver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "bca/error.hpp"

namespace bca {

namespace {

std::string letter_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "x" + std::to_string(k - 25) + "_";
}

}  // namespace

Quiver build_quiver(const Configuration& cfg) {
  Quiver q;
  for (const auto& p : cfg.polygons()) q.vertices.push_back(p.label);
  q.cycles_.assign(cfg.vertex_count(), {});
  q.multiplicities_.assign(cfg.vertex_count(), 0);

  std::size_t letter = 0;
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    if (!cfg.active(v)) continue;
    const auto& seq = cfg.successors(v);
    const auto& name = cfg.vertices()[v].name;
    const std::string stem = letter_name(letter++);
    q.multiplicities_[v] = cfg.multiplicity(v);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      Arrow a;
      a.id = name + ":" + std::to_string(i + 1);
      a.alias = seq.size() == 1 ? stem : stem + std::to_string(i + 1);
      a.source = seq[i].polygon;
      a.target = seq[(i + 1) % seq.size()].polygon;
      a.origin = v;
      a.position = i;
      q.cycles_[v].push_back(q.arrows.size());
      q.arrows.push_back(std::move(a));
    }
  }
  return q;
}

std::size_t Quiver::next(std::size_t arrow) const {
  const auto& a = arrows[arrow];
  const auto& cyc = cycles_[a.origin];
  return cyc[(a.position + 1) % cyc.size()];
}

std::size_t Quiver::previous(std::size_t arrow) const {
  const auto& a = arrows[arrow];
  const auto& cyc = cycles_[a.origin];
  return cyc[(a.position + cyc.size() - 1) % cyc.size()];
}

SpecialCycle Quiver::rotation(std::size_t arrow) const {
  const auto& a = arrows[arrow];
  const auto& cyc = cycles_[a.origin];
  SpecialCycle c{a.origin, a.position, multiplicities_[a.origin], {}};
  for (std::size_t k = 0; k < cyc.size(); ++k) c.arrows.push_back(cyc[(a.position + k) % cyc.size()]);
  return c;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == name) return i;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].alias == name) return i;
  return std::nullopt;
}

bool Quiver::composable(const Path& path) const {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= arrows.size()) return false;
    if (i > 0 && arrows[path[i - 1]].target != arrows[path[i]].source) return false;
  }
  return true;
}

std::string Quiver::describe(const Path& path) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << arrows[path[i]].alias;
  return out.str();
}

SpecialCycles special_cycles(const Configuration& cfg, const Quiver& quiver) {
  SpecialCycles out;
  for (std::size_t v = 0; v < cfg.vertex_count(); ++v) {
    const auto& cyc = quiver.cycles()[v];
    if (cyc.empty()) continue;
    const auto least = std::min_element(cyc.begin(), cyc.end(), [&](std::size_t x, std::size_t y) {
      return quiver.arrows[x].id < quiver.arrows[y].id;
    });
    for (std::size_t arrow : cyc) {
      if (arrow == *least) out.canonical.push_back(out.rotations.size());
      out.rotations.push_back(quiver.rotation(arrow));
    }
  }
  return out;
}

std::vector<SpecialCycle> cycles_at(const Quiver& quiver, std::size_t v) {
  std::vector<SpecialCycle> out;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a)
    if (quiver.arrows[a].source == v) out.push_back(quiver.rotation(a));
  return out;
}

ArrowCycle cycle_of_arrow(const Quiver& quiver, std::size_t arrow) {
  if (arrow >= quiver.arrow_count()) throw DomainError("arrow index out of range");
  const auto& cyc = quiver.cycles()[quiver.arrows[arrow].origin];
  const auto least = std::min_element(cyc.begin(), cyc.end(), [&](std::size_t x, std::size_t y) {
    return quiver.arrows[x].id < quiver.arrows[y].id;
  });
  const std::size_t base = quiver.arrows[*least].position;
  const std::size_t pos = quiver.arrows[arrow].position;
  return {quiver.rotation(arrow), (pos + cyc.size() - base) % cyc.size()};
}

std::vector<std::vector<long>> adjacency_matrix(const Quiver& quiver) {
  std::vector<std::vector<long>> m(quiver.vertex_count(), std::vector<long>(quiver.vertex_count(), 0));
  for (const auto& a : quiver.arrows) ++m[a.source][a.target];
  return m;
}

std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& a, const Quiver& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.arrow_count() != b.arrow_count()) return std::nullopt;
  const auto ma = adjacency_matrix(a);
  const auto mb = adjacency_matrix(b);

  auto profile = [n](const std::vector<std::vector<long>>& m, std::size_t v) {
    long in = 0, out = 0;
    for (std::size_t u = 0; u < n; ++u) {
      out += m[v][u];
      in += m[u][v];
    }
    return std::array<long, 3>{in, out, m[v][v]};
  };

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    const auto pv = profile(ma, v);
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || profile(mb, w) != pv) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u)
        consistent = ma[v][u] == mb[w][map[u]] && ma[u][v] == mb[map[u]][w];
      if (!consistent) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace bca
