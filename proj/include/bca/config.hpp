#pragma once

// Brauer configurations: data model, validation, reduction and components.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bca {

struct ConfigVertex {
  std::string name;
  int multiplicity = 1;

  bool operator==(const ConfigVertex&) const = default;
};

/// A labeled multiset of vertex names. Member order is storage order only;
/// it fixes which repetition of a vertex is its k-th occurrence.
struct Polygon {
  std::string label;
  std::vector<std::string> members;

  bool operator==(const Polygon&) const = default;
};

/// The k-th (1-based) occurrence of some vertex inside a polygon.
struct OccurrenceRef {
  std::string polygon;
  int index = 1;

  auto operator<=>(const OccurrenceRef&) const = default;
};

/// Per vertex, a cyclic sequence of occurrences. Stored linearly; compare
/// with `same_cyclic_order`.
using Orientation = std::map<std::string, std::vector<OccurrenceRef>>;

/// Unvalidated configuration as read from input.
struct BrauerConfiguration {
  std::vector<ConfigVertex> vertices;
  std::vector<Polygon> polygons;
  Orientation orientation;
};

/// Name ordering used wherever a deterministic choice is needed: numeric
/// names compare numerically and sort before non-numeric ones.
bool name_less(std::string_view a, std::string_view b);

/// True iff `b` is a cyclic rotation of `a`.
bool same_cyclic_order(const std::vector<OccurrenceRef>& a,
                       const std::vector<OccurrenceRef>& b);

enum class ValidationCode {
  Empty,
  DuplicateVertex,
  DuplicatePolygon,
  BadMultiplicity,
  UnknownMember,
  UnusedVertex,         // C1
  TooFewMembers,        // C2
  NoNontruncatedVertex, // C3
  UnknownOrientationVertex,
  MissingOrientation,
  OrientationUnknownPolygon,
  OrientationBadOccurrence,
  OrientationLength,
  OrientationRepeated,
};

std::string_view code_name(ValidationCode code);

struct ValidationError {
  ValidationCode code;
  std::string subject;
  std::string message;
};

struct ValidateOptions {
  /// Accept 2-gons whose two vertices are both truncated and treat them as
  /// the local algebra K[x]/(x^2): one vertex, one loop x, x^2 = 0.
  bool allow_degenerate = false;
};

struct ValidationResult;

/// A configuration that satisfied C1-C3 (or the degenerate override) and
/// carries a complete orientation on every nontruncated vertex. Immutable.
class Configuration {
 public:
  const BrauerConfiguration& data() const { return data_; }
  const std::vector<ConfigVertex>& vertices() const { return data_.vertices; }
  const std::vector<Polygon>& polygons() const { return data_.polygons; }

  std::size_t vertex_count() const { return data_.vertices.size(); }
  std::size_t polygon_count() const { return data_.polygons.size(); }

  /// Throws DomainError on unknown names.
  std::size_t vertex_index(std::string_view name) const;
  std::size_t polygon_index(std::string_view label) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_polygon(std::string_view label) const;

  int occ(std::size_t vertex, std::size_t polygon) const {
    return occ_[vertex * data_.polygons.size() + polygon];
  }
  int val(std::size_t vertex) const { return val_[vertex]; }
  int multiplicity(std::size_t vertex) const { return data_.vertices[vertex].multiplicity; }
  bool truncated(std::size_t vertex) const { return val_[vertex] * multiplicity(vertex) == 1; }

  /// Vertices that generate a special cycle: the nontruncated ones plus the
  /// designated vertex of each degenerate 2-gon.
  bool active(std::size_t vertex) const { return active_[vertex]; }
  bool degenerate(std::size_t polygon) const { return degenerate_[polygon]; }
  bool has_degenerate() const;
  const ValidateOptions& options() const { return options_; }

  /// Successor sequence at an active vertex as (polygon index, occurrence).
  struct Occurrence {
    std::size_t polygon;
    int index;
  };
  const std::vector<Occurrence>& successors(std::size_t vertex) const {
    return successors_[vertex];
  }

  /// d of the d-gon, counting repetitions.
  std::size_t polygon_size(std::size_t polygon) const {
    return data_.polygons[polygon].members.size();
  }
  /// Member vertex indices of a polygon in storage order.
  const std::vector<std::size_t>& members(std::size_t polygon) const {
    return members_[polygon];
  }

 private:
  friend ValidationResult validate(const BrauerConfiguration&, const ValidateOptions&);
  Configuration() = default;

  BrauerConfiguration data_;
  ValidateOptions options_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> polygon_lookup_;
  std::vector<int> occ_;
  std::vector<int> val_;
  std::vector<bool> active_;
  std::vector<bool> degenerate_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<Occurrence>> successors_;
};

struct ValidationResult {
  std::optional<Configuration> config;
  std::vector<ValidationError> errors;

  bool ok() const { return errors.empty(); }
};

/// Checks C1-C3, name resolution and the orientation. Orientation entries may
/// be omitted for vertices of valence at most 2; they are filled in. Entries
/// given for truncated vertices are checked and then dropped.
ValidationResult validate(const BrauerConfiguration& raw, const ValidateOptions& options = {});

/// validate() or throw DomainError listing every error.
Configuration validated(const BrauerConfiguration& raw, const ValidateOptions& options = {});

int occ(const Configuration& cfg, std::string_view vertex, std::string_view polygon);
int val(const Configuration& cfg, std::string_view vertex);
bool is_truncated(const Configuration& cfg, std::string_view vertex);

/// Successor sequence at a nontruncated vertex. Throws DomainError for a
/// truncated vertex.
std::vector<OccurrenceRef> successor_sequence(const Configuration& cfg, std::string_view vertex);

/// Every polygon has no truncated vertex or is a 2-gon with one truncated
/// vertex (degenerate 2-gons are left alone).
bool is_reduced(const Configuration& cfg);

/// Removes truncated vertices from d-gons with d >= 3, smallest polygon label
/// first and, within a polygon, smallest vertex name first.
Configuration reduce(const Configuration& cfg);

bool is_connected(const Configuration& cfg);

/// Components under "share a vertex", ordered by their first polygon.
std::vector<Configuration> connected_components(const Configuration& cfg);

/// Disjoint union; names must not clash.
Configuration disjoint_union(const Configuration& a, const Configuration& b);

bool has_self_folding(const Configuration& cfg);

/// Membership in the ordered class used for the graph correspondence:
/// reduced, no self-foldings, 1 <= val * mu <= 2 at every vertex.
bool in_ordered_class(const Configuration& cfg);

/// Vertex renaming carrying the i-th polygon of `a` onto the i-th polygon of
/// `b` and preserving multiplicities, if one exists. Both inputs must be in
/// the ordered class (DomainError otherwise).
std::optional<std::map<std::string, std::string>> ordered_equivalence(const Configuration& a,
                                                                      const Configuration& b);
bool is_equivalent_ordered(const Configuration& a, const Configuration& b);

}  // namespace bca
