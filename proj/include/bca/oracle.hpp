#pragma once

// Brute-force quotient of a truncated path algebra by a relation ideal.
//
// Paths up to a length bound are enumerated explicitly. Monomial relations
// kill every path containing them as a subpath; the remaining relations are
// multiplied on both sides by paths (u * rho * w) and fed into an exact
// echelon basis. The quotient dimension and ideal membership then follow by
// linear algebra alone, without using any normal-form rule.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bca/linalg.hpp"
#include "bca/quiver.hpp"
#include "bca/rational.hpp"

namespace bca {

struct PathTerm {
  Path path;
  Rational coeff;
};
using PathPolynomial = std::vector<PathTerm>;

/// Bare directed multigraph: enough structure for the oracle.
struct QuiverShape {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> targets;

  std::size_t arrow_count() const { return sources.size(); }
  static QuiverShape of(const Quiver& quiver);
};

struct OracleLimits {
  std::size_t max_paths = 1'000'000;

  /// Reads BCA_ORACLE_PATH_LIMIT if set.
  static OracleLimits from_env();
};

class PathOracle {
 public:
  /// Relations must be uniform: all terms of a relation share source and
  /// target, and every term has length >= 1. Throws ResourceLimitError when
  /// more than `limits.max_paths` paths would be enumerated.
  PathOracle(QuiverShape shape, const std::vector<PathPolynomial>& relations, std::size_t max_length,
             OracleLimits limits = OracleLimits::from_env());

  std::size_t max_length() const { return max_length_; }
  std::size_t path_count() const { return paths_.size(); }
  const std::vector<Path>& paths() const { return paths_; }

  /// dim of KQ / (I + J^(max_length+1)), vertex idempotents included.
  std::size_t quotient_dimension() const;

  /// Membership of a polynomial (terms longer than max_length are dropped).
  bool in_ideal(const PathPolynomial& p) const;
  bool in_ideal(const Path& p) const { return in_ideal(PathPolynomial{{p, 1}}); }

  /// True iff every path of length max_length lies in the ideal, i.e. the
  /// truncation bound was large enough to see the whole quotient.
  bool top_degree_vanishes() const;

 private:
  SparseVector coordinates(const PathPolynomial& p) const;

  QuiverShape shape_;
  std::size_t max_length_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
  std::vector<bool> monomial_zero_;
  RowEchelon echelon_;
};

}  // namespace bca
