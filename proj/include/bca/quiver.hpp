#pragma once

// The quiver of a configuration and its special cycles.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bca/config.hpp"

namespace bca {

/// Arrow indices into Quiver::arrows.
using Path = std::vector<std::size_t>;

struct Arrow {
  std::string id;      // "<vertex>:<position>", position 1-based
  std::string alias;   // presentation name, e.g. "a1", "e"
  std::size_t source;  // quiver vertex (= polygon index)
  std::size_t target;
  std::size_t origin;  // configuration vertex index
  std::size_t position;  // 0-based position in the successor sequence
};

/// A rotation of the special cycle of one active configuration vertex.
struct SpecialCycle {
  std::size_t origin;        // configuration vertex
  std::size_t start;         // 0-based rotation start in the successor sequence
  int multiplicity;          // mu(origin)
  std::vector<std::size_t> arrows;

  std::size_t first() const { return arrows.front(); }
  std::size_t length() const { return arrows.size(); }
  /// Length of C^mu.
  std::size_t power_length() const { return arrows.size() * static_cast<std::size_t>(multiplicity); }
};

class Quiver {
 public:
  std::vector<std::string> vertices;  // polygon labels, v_i <-> V_i
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t arrow_count() const { return arrows.size(); }

  /// Arrows generated by each configuration vertex in sequence order (empty
  /// for inactive vertices).
  const std::vector<std::vector<std::size_t>>& cycles() const { return cycles_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }

  /// The arrow following `arrow` in its special cycle.
  std::size_t next(std::size_t arrow) const;
  /// The arrow preceding `arrow` in its special cycle.
  std::size_t previous(std::size_t arrow) const;

  /// The unique rotation whose first arrow is `arrow`.
  SpecialCycle rotation(std::size_t arrow) const;

  /// Arrow index by id or alias; nullopt if neither matches.
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  bool composable(const Path& path) const;
  std::size_t path_source(const Path& path) const { return arrows[path.front()].source; }
  std::size_t path_target(const Path& path) const { return arrows[path.back()].target; }
  std::string describe(const Path& path) const;

 private:
  friend Quiver build_quiver(const Configuration& cfg);
  std::vector<std::vector<std::size_t>> cycles_;
  std::vector<int> multiplicities_;
};

Quiver build_quiver(const Configuration& cfg);

struct SpecialCycles {
  std::vector<SpecialCycle> rotations;   // every rotation, grouped by origin
  std::vector<std::size_t> canonical;    // index into rotations, one per class
};

/// All rotations of all special cycles, and one representative per rotation
/// class: the rotation starting at the least arrow id.
SpecialCycles special_cycles(const Configuration& cfg, const Quiver& quiver);

/// Special cycles at quiver vertex v, in successor-sequence order of their
/// origin vertices (one per active occurrence in the polygon).
std::vector<SpecialCycle> cycles_at(const Quiver& quiver, std::size_t v);

struct ArrowCycle {
  SpecialCycle rotation;             // starts with the arrow
  std::size_t canonical_position;    // position of the arrow in the class representative
};
ArrowCycle cycle_of_arrow(const Quiver& quiver, std::size_t arrow);

/// Directed multigraph isomorphism by backtracking over vertex bijections
/// that preserve in/out degrees and loop counts. Returns the vertex map.
std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& a, const Quiver& b);

/// (i, j) entry = number of arrows from v_i to v_j.
std::vector<std::vector<long>> adjacency_matrix(const Quiver& quiver);

}  // namespace bca
