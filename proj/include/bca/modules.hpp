#pragma once

// Indecomposable projectives P_V = e_v A as composition data: the uniserial
// chains of the special cycles at v and how they assemble rad(P_V).

#include <cstddef>
#include <string>
#include <vector>

#include "bca/algebra.hpp"

namespace bca {

/// (0) < U_{n mu} < ... < U_1 for one rotation C^mu at v. U_j is generated by
/// the length-j prefix of C^mu.
struct UniserialChain {
  std::size_t first_arrow;                      // C starts here
  std::vector<std::size_t> generators;          // basis index of the generator of U_j
  std::vector<std::size_t> layers;              // quiver vertex of U_j / U_(j+1)
  std::vector<std::vector<std::size_t>> bases;  // basis indices spanning U_j

  std::size_t length() const { return layers.size(); }
};

/// Throws DomainError unless `first_arrow` is an arrow of the algebra's quiver.
UniserialChain uniserial_chain(const Algebra& alg, std::size_t first_arrow);

struct ProjectiveStructure {
  std::size_t vertex = 0;
  std::string polygon;
  std::size_t r = 0;           // chains found in rad(P)
  std::size_t expected_r = 0;  // active occurrences in the polygon
  std::vector<UniserialChain> chains;
  std::size_t dim = 0;              // basis elements starting at v
  std::size_t dim_from_chains = 0;  // 1 + sum (len - 1) + 1
  bool uniserial = false;
  bool truncated_two_gon = false;
  std::vector<std::vector<std::size_t>> heart;  // each chain without its socle layer

  // Checks carried out by multiplication and rank.
  bool chains_generated = true;    // U_j = (generator) A for every j
  bool chains_span_radical = true;  // sum of the U_1 is rad(P)
  bool socle_intersections = true;  // U_1(C) meet U_1(C') is the socle
  bool sequence_dimension = true;   // dim rad P = sum dim U_1 - (r - 1)

  bool ok() const {
    return r == expected_r && dim == dim_from_chains && uniserial == truncated_two_gon &&
           chains_generated && chains_span_radical && socle_intersections && sequence_dimension;
  }
};

ProjectiveStructure projective_structure(const Algebra& alg, std::size_t polygon);
std::vector<ProjectiveStructure> projective_structures(const Algebra& alg);

/// Number of uniserial summands of the heart. Throws DomainError when
/// rad^2(P_V) = 0.
std::size_t heart_summand_count(const Algebra& alg, std::size_t polygon);

}  // namespace bca
