#pragma once

// The Brauer configuration algebra KQ/I over the rationals: relations,
// canonical basis, multiplication, symmetrizing form and the structural
// queries built on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bca/config.hpp"
#include "bca/oracle.hpp"
#include "bca/quiver.hpp"
#include "bca/rational.hpp"
#include "bca/structure.hpp"

namespace bca {

enum class RelationKind { One, Two, Three };

struct Relation {
  RelationKind kind;
  // One: C^p - C'^q with C, C' the rotations starting at `first`, `second`.
  // Two: C^p * first, C the rotation starting at `first`.
  // Three: the path (first, second).
  std::size_t first = 0;
  std::size_t second = 0;
  int power = 0;
  int second_power = 0;

  PathPolynomial polynomial(const Quiver& quiver) const;
};

/// Relations of types one, two and three, redundancies included.
std::vector<Relation> relations(const Quiver& quiver);

enum class BasisKind { Idempotent, Prefix, Socle };

struct BasisElement {
  BasisKind kind;
  std::size_t vertex = 0;  // quiver vertex for Idempotent/Socle, source for Prefix
  std::size_t arrow = 0;   // Prefix: first arrow
  std::size_t length = 0;  // Prefix: path length
};

/// Finitely supported combination of basis elements, indexed by basis position.
using AlgebraElement = SparseVector;

struct BuildOptions {
  /// Reduce the configuration before building. Off only for checking that
  /// reduction does not change the algebra.
  bool reduce = true;
};

class Algebra {
 public:
  Algebra(Configuration cfg, BuildOptions options = {});

  const Configuration& configuration() const { return cfg_; }
  const Quiver& quiver() const { return quiver_; }
  const SpecialCycles& cycles() const { return cycles_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// max length of C^mu over all rotations, plus one: J^N lies in I.
  std::size_t bound() const { return bound_; }

  std::size_t idempotent(std::size_t vertex) const { return vertex; }
  std::size_t prefix(std::size_t arrow, std::size_t length) const;
  std::size_t socle(std::size_t vertex) const { return socle_offset_ + vertex; }

  /// Length of C^mu for the rotation starting at `arrow`.
  std::size_t power_length(std::size_t arrow) const { return power_length_[arrow]; }

  std::size_t source(std::size_t basis_index) const;
  std::size_t target(std::size_t basis_index) const;
  /// Path representing a basis element (empty for idempotents). Socles use
  /// the chosen cycle power at their vertex.
  Path representative(std::size_t basis_index) const;
  const std::string& label(std::size_t basis_index) const { return table_.labels[basis_index]; }
  std::optional<std::size_t> find_basis(const std::string& label) const;

  /// Basis index of the class of a path, or nullopt when the class is zero.
  /// Throws DomainError for empty or non-composable paths.
  std::optional<std::size_t> normal_form_index(const Path& path) const;
  AlgebraElement normal_form(const Path& path) const;

  /// Product of basis elements by the prefix rule.
  AlgebraElement multiply_basis(std::size_t i, std::size_t j) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    return table_.multiply(x, y);
  }
  AlgebraElement unit() const { return table_.unit(); }

  BasisProduct basis_product() const;
  const StructureTable& structure_table() const { return table_; }

 private:
  Configuration cfg_;
  Quiver quiver_;
  SpecialCycles cycles_;
  std::vector<Relation> relations_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> prefix_offset_;
  std::vector<std::size_t> power_length_;
  std::vector<std::size_t> socle_arrow_;
  std::size_t socle_offset_ = 0;
  std::size_t bound_ = 1;
  StructureTable table_;
};

Algebra build_algebra(const Configuration& cfg, BuildOptions options = {});

/// Throws DomainError when the path is empty or not composable.
AlgebraElement normal_form_path(const Algebra& alg, const Path& path);
AlgebraElement multiply(const Algebra& alg, const AlgebraElement& x, const AlgebraElement& y);

struct DimensionTerm {
  std::string vertex;       // configuration vertex of the cycle class
  std::size_t cycle_length;
  int multiplicity;
  std::size_t contribution;  // |C| (mu |C| - 1)
};

struct DimensionReport {
  std::size_t formula = 0;
  std::size_t basis_count = 0;
  std::size_t vertices = 0;
  std::vector<DimensionTerm> terms;

  bool agrees() const { return formula == basis_count; }
};

DimensionReport dimension(const Algebra& alg);

/// Quotient dimension by path enumeration and exact rank, using only the
/// quiver and the relation list.
std::size_t brute_force_dimension(const Configuration& cfg, OracleLimits limits = OracleLimits::from_env());

/// The oracle for a built algebra, truncated at the admissibility bound.
PathOracle make_oracle(const Algebra& alg, OracleLimits limits = OracleLimits::from_env());

/// phi(x * y), phi = 1 on socle elements and 0 on the rest of the basis.
Rational symmetric_form(const Algebra& alg, const AlgebraElement& x, const AlgebraElement& y);
SymmetryReport check_symmetric(const Algebra& alg);
std::vector<std::size_t> radical_series(const Algebra& alg);
std::size_t loewy_length(const Algebra& alg);

/// 1 + max val * mu over active vertices.
std::size_t expected_loewy_length(const Configuration& cfg);

struct GradingResult {
  bool graded = false;
  std::optional<int> degree;  // the common val * mu
};

/// val * mu constant over active vertices. Throws DomainError for
/// disconnected input.
GradingResult is_length_graded(const Configuration& cfg);

/// Every type-one relation has terms of equal length.
bool type_one_homogeneous(const Algebra& alg);

/// Connectivity of the configuration; throws std::logic_error if the
/// quiver's connectivity disagrees.
bool is_indecomposable(const Algebra& alg);
bool quiver_connected(const Quiver& quiver);

/// (i, j) = number of basis elements that are paths from v_i to v_j.
std::vector<std::vector<long>> cartan_matrix(const Algebra& alg);

/// Length-2 paths with nonzero class: first and second arrow maps onto the
/// arrow set are both bijections. nullopt when some component has rad^2 = 0.
std::optional<bool> path2_bijections(const Algebra& alg);

}  // namespace bca
