#pragma once

// Text formats: configuration JSON, graph JSON, matrix CSV, quiver DOT.

#include <string>
#include <string_view>

#include <json.hpp>

#include "bca/config.hpp"
#include "bca/quiver.hpp"
#include "bca/rad3.hpp"

namespace bca {

/// Throws ParseError (with 1-based line/column for malformed JSON) on bad
/// syntax, wrong types, unknown polygon or vertex references and occurrence
/// indices past occ(vertex, polygon).
BrauerConfiguration parse_configuration(std::string_view text);
BrauerConfiguration configuration_from_json(const nlohmann::json& j);

/// Orientation references print as "LABEL" when the vertex occurs once in the
/// polygon and "LABEL#k" otherwise.
nlohmann::json to_json(const BrauerConfiguration& cfg);
std::string serialize_configuration(const BrauerConfiguration& cfg, bool pretty = true);

/// Nodes in polygon order, edges in arrow order, labeled "alias (vertex, i)".
std::string emit_dot(const Configuration& cfg, const Quiver& quiver);

/// {"n": 3, "edges": [[1, 2], [2, 2]], "names": ["a", "b"]}; names optional.
Graph parse_graph(std::string_view text);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);

/// Comma-separated integer rows.
SymMatrix parse_matrix_csv(std::string_view text);
std::string matrix_to_csv(const SymMatrix& m);

/// Parses JSON text, mapping syntax errors to ParseError with line/column.
nlohmann::json parse_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace bca
