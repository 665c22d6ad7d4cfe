#include "bca/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bca/error.hpp"

namespace bca {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t positive_of(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

int count_in(const Polygon& p, const std::string& vertex) {
  return static_cast<int>(std::count(p.members.begin(), p.members.end(), vertex));
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what(), line,
                     column);
  }
}

BrauerConfiguration configuration_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("configuration: expected an object");
  BrauerConfiguration cfg;

  const auto& vs = field(j, "vertices", "configuration");
  if (!vs.is_array()) throw ParseError("vertices: expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    ConfigVertex v;
    if (vs[i].is_string()) {
      v.name = vs[i].get<std::string>();
    } else {
      v.name = string_of(field(vs[i], "name", where), where + ".name");
      if (vs[i].contains("multiplicity"))
        v.multiplicity = static_cast<int>(positive_of(vs[i].at("multiplicity"), where + ".multiplicity"));
    }
    cfg.vertices.push_back(std::move(v));
  }

  const auto& ps = field(j, "polygons", "configuration");
  if (!ps.is_array()) throw ParseError("polygons: expected an array");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string where = "polygons[" + std::to_string(i) + "]";
    Polygon p;
    p.label = string_of(field(ps[i], "label", where), where + ".label");
    const auto& ms = field(ps[i], "members", where);
    if (!ms.is_array()) throw ParseError(where + ".members: expected an array");
    for (const auto& m : ms) {
      auto name = string_of(m, where + ".members");
      if (std::none_of(cfg.vertices.begin(), cfg.vertices.end(), [&](const ConfigVertex& v) { return v.name == name; }))
        throw ParseError(where + ": unknown vertex \"" + name + "\"");
      p.members.push_back(std::move(name));
    }
    cfg.polygons.push_back(std::move(p));
  }

  if (j.contains("orientation")) {
    const auto& os = j.at("orientation");
    if (!os.is_object()) throw ParseError("orientation: expected an object");
    for (const auto& [vertex, seq] : os.items()) {
      const std::string where = "orientation[" + vertex + "]";
      if (std::none_of(cfg.vertices.begin(), cfg.vertices.end(), [&](const ConfigVertex& v) { return v.name == vertex; }))
        throw ParseError(where + ": unknown vertex \"" + vertex + "\"");
      if (!seq.is_array()) throw ParseError(where + ": expected an array");
      std::vector<OccurrenceRef> refs;
      for (const auto& r : seq) {
        const std::string text = string_of(r, where);
        OccurrenceRef ref;
        const auto hash = text.find('#');
        ref.polygon = text.substr(0, hash);
        if (hash != std::string::npos) {
          const std::string idx = text.substr(hash + 1);
          if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); }) ||
              idx.size() > 9 || std::stoi(idx) < 1)
            throw ParseError(where + ": bad occurrence index in \"" + text + "\"");
          ref.index = std::stoi(idx);
        }
        const auto poly = std::find_if(cfg.polygons.begin(), cfg.polygons.end(),
                                       [&](const Polygon& p) { return p.label == ref.polygon; });
        if (poly == cfg.polygons.end()) throw ParseError(where + ": unknown polygon \"" + ref.polygon + "\"");
        if (ref.index > count_in(*poly, vertex))
          throw ParseError(where + ": \"" + text + "\" exceeds the " + std::to_string(count_in(*poly, vertex)) +
                           " occurrence(s) of " + vertex + " in " + ref.polygon);
        refs.push_back(std::move(ref));
      }
      cfg.orientation[vertex] = std::move(refs);
    }
  }
  return cfg;
}

BrauerConfiguration parse_configuration(std::string_view text) { return configuration_from_json(parse_json(text)); }

json to_json(const BrauerConfiguration& cfg) {
  json out = json::object();
  out["vertices"] = json::array();
  for (const auto& v : cfg.vertices) out["vertices"].push_back({{"name", v.name}, {"multiplicity", v.multiplicity}});
  out["polygons"] = json::array();
  for (const auto& p : cfg.polygons) out["polygons"].push_back({{"label", p.label}, {"members", p.members}});
  json orientation = json::object();
  for (const auto& [vertex, refs] : cfg.orientation) {
    json seq = json::array();
    for (const auto& r : refs) {
      const auto poly = std::find_if(cfg.polygons.begin(), cfg.polygons.end(),
                                     [&](const Polygon& p) { return p.label == r.polygon; });
      const bool repeated = poly != cfg.polygons.end() && count_in(*poly, vertex) > 1;
      seq.push_back(repeated ? r.polygon + "#" + std::to_string(r.index) : r.polygon);
    }
    orientation[vertex] = std::move(seq);
  }
  out["orientation"] = std::move(orientation);
  return out;
}

std::string serialize_configuration(const BrauerConfiguration& cfg, bool pretty) {
  return to_json(cfg).dump(pretty ? 2 : -1) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Configuration& cfg, const Quiver& quiver) {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (const auto& v : quiver.vertices) out << "  " << dot_quote(v) << ";\n";
  for (const auto& a : quiver.arrows) {
    const std::string label =
        a.alias + " (" + cfg.vertices()[a.origin].name + ", " + std::to_string(a.position + 1) + ")";
    out << "  " << dot_quote(quiver.vertices[a.source]) << " -> " << dot_quote(quiver.vertices[a.target])
        << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.n = positive_of(field(j, "n", "graph"), "graph.n");
  const auto& es = field(j, "edges", "graph");
  if (!es.is_array()) throw ParseError("graph.edges: expected an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph.edges: expected [i, j] pairs");
    g.edges.emplace_back(positive_of(e[0], "graph.edges"), positive_of(e[1], "graph.edges"));
  }
  if (j.contains("names")) {
    const auto& ns = j.at("names");
    if (!ns.is_array() || ns.size() != g.edges.size())
      throw ParseError("graph.names: expected one name per edge");
    for (const auto& n : ns) g.names.push_back(string_of(n, "graph.names"));
  }
  return g;
}

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

json to_json(const Graph& g) {
  json edges = json::array();
  json names = json::array();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    edges.push_back({g.edges[k].first, g.edges[k].second});
    names.push_back(g.name(k));
  }
  return {{"n", g.n}, {"edges", edges}, {"names", names}};
}

SymMatrix parse_matrix_csv(std::string_view text) {
  SymMatrix m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<long> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cell = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size())
        throw ParseError("matrix line " + std::to_string(line_no) + ": bad integer \"" + cell + "\"", line_no,
                         start + 1);
      row.push_back(value);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::string matrix_to_csv(const SymMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bca
