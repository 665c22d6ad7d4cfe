#pragma once

// Graphs, symmetric matrices and ordered configurations with val * mu <= 2,
// the canonical radical-cube-zero algebra of a graph, and the check that it
// agrees with the Brauer configuration algebra of the graph's configuration.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bca/algebra.hpp"
#include "bca/config.hpp"
#include "bca/oracle.hpp"
#include "bca/structure.hpp"

namespace bca {

/// Vertices 1..n. Loops are {i, i}. Edge names default to e1, e2, ...
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> names;

  std::string name(std::size_t edge) const;
  /// Endpoint pairs with i <= j, sorted: equality of these is graph equivalence.
  std::vector<std::pair<std::size_t, std::size_t>> edge_multiset() const;
  /// Edge ends at each vertex, loops counting twice.
  std::vector<std::size_t> valency() const;
  std::string encoding() const;
};

bool equivalent(const Graph& a, const Graph& b);

using SymMatrix = std::vector<std::vector<long>>;

/// Throws DomainError for out-of-range endpoints or isolated vertices.
void check_graph(const Graph& g);
/// Throws DomainError unless square, symmetric, non-negative, no zero row.
void check_matrix(const SymMatrix& m);

SymMatrix matrix_from_graph(const Graph& g);
Graph graph_from_matrix(const SymMatrix& m);

/// val * mu == 2 at every active vertex.
bool is_rad_cubed_zero(const Configuration& cfg);

/// Polygons V1..Vn. Edges become vertices (mu = 2 for loops), a leaf i with
/// leaf edge e contributes the truncated vertex "(e,i)", and a lone vertex
/// with a single loop e becomes the 2-gon {(e,i), e}.
Configuration config_from_graph(const Graph& g);

/// Inverse direction; throws DomainError outside the ordered class.
Graph graph_from_config(const Configuration& cfg);

struct CanonicalAlgebra {
  Graph graph;
  QuiverShape shape;                 // vertices 0..n-1
  std::vector<std::string> arrow_names;
  std::vector<std::size_t> arrow_edge;
  std::vector<std::size_t> partner;  // arrow completing the distinguished path
  std::vector<PathPolynomial> relations;
  StructureTable table;              // idempotents, arrows, one socle per vertex

  std::size_t idempotent(std::size_t v) const { return v; }
  std::size_t arrow(std::size_t k) const { return graph.n + k; }
  std::size_t socle(std::size_t v) const { return graph.n + arrow_names.size() + v; }
};

CanonicalAlgebra canonical_algebra(const Graph& g);

/// The presentation's structure table against the path oracle: dimensions
/// agree and every path of length <= 2 has the class the table says.
bool verify_canonical_presentation(const CanonicalAlgebra& ca, OracleLimits limits = OracleLimits::from_env());

struct IsoResult {
  bool ok = false;
  std::vector<std::size_t> arrow_map;  // Brauer arrow -> canonical arrow
  std::vector<std::size_t> basis_map;  // Brauer basis -> canonical basis
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;  // Brauer basis pair
  std::string message;
};

/// Sends v_i to i and each arrow to the canonical arrow with the same
/// endpoints and edge name, then compares every structure constant and the
/// trace.
IsoResult verify_iso(const Algebra& brauer, const CanonicalAlgebra& canonical);

/// Graphs on vertices 1..n with 1..max_edges edges and no isolated vertex,
/// one per edge multiset, ordered by edge count then endpoint list.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_edges);

struct Rad3Case {
  Graph graph;
  bool iso = false;
  bool round_trips = false;
  bool canonical_ok = false;
  std::size_t brauer_dim = 0;
  std::size_t canonical_dim = 0;
  std::string failure;

  bool ok() const { return iso && round_trips && canonical_ok && brauer_dim == canonical_dim; }
};

struct Rad3Report {
  std::vector<Rad3Case> cases;
  std::size_t failures() const;
};

/// Every graph with 1..max_n vertices and at most max_edges edges.
Rad3Report verify_rad3_exhaustive(std::size_t max_n, std::size_t max_edges);
Rad3Report verify_rad3_exhaustive_serial(std::size_t max_n, std::size_t max_edges);

Rad3Case verify_rad3_case(const Graph& g);

}  // namespace bca
