#include <doctest.h>

#include <random>

#include "bca/algebra.hpp"
#include "bca/modules.hpp"
#include "bca/rad3.hpp"
#include "support.hpp"

using namespace bca;

// Seeded random configurations; every check is exact.

TEST_CASE("random configurations build symmetric algebras of the predicted size") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cfg = testing_support::random_configuration(rng);
    CAPTURE(trial);
    const auto alg = build_algebra(cfg);
    CHECK(dimension(alg).agrees());
    CHECK(check_symmetric(alg).ok());
    CHECK(satisfies_unit_law(alg.structure_table()));

    std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
    std::vector<std::array<std::size_t, 3>> triples;
    for (int k = 0; k < 1500; ++k) triples.push_back({pick(rng), pick(rng), pick(rng)});
    CHECK(kernels::associativity_failures(alg.structure_table(), triples) == 0);

    const auto series = radical_series(alg);
    CHECK(series.back() == 0);
    CHECK(loewy_length(alg) == expected_loewy_length(alg.configuration()));
    CHECK(is_rad_cubed_zero(alg.configuration()) == (series.size() <= 4));

    for (const auto& p : projective_structures(alg)) CHECK(p.ok());
    for (const auto& part : connected_components(alg.configuration()))
      CHECK(is_length_graded(part).graded == type_one_homogeneous(build_algebra(part)));
  }
}

TEST_CASE("random small configurations agree with the test-side quotient") {
  std::mt19937 rng(99);
  testing_support::RandomShape small{.max_polygons = 3, .max_vertices = 4, .max_mu = 2, .max_polygon_size = 3};
  int checked = 0;
  while (checked < 25) {
    const auto cfg = testing_support::random_configuration(rng, small);
    const auto alg = build_algebra(cfg);
    if (alg.bound() > 7 || alg.quiver().arrow_count() > 8) continue;
    ++checked;
    const auto q = testing_support::independent_quotient(cfg);
    CHECK(q.top_vanishes);
    CHECK(alg.dim() == q.dimension);
  }
}

TEST_CASE("unreduced and reduced builds agree on random input") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cfg = testing_support::random_configuration(rng);
    const auto a = build_algebra(cfg);
    const auto b = build_algebra(cfg, {.reduce = false});
    CHECK(a.dim() == b.dim());
    CHECK(a.structure_table().products == b.structure_table().products);
  }
}
