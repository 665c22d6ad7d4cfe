#include <doctest.h>

#include <random>

#include "bca/linalg.hpp"
#include "support.hpp"

using namespace bca;

namespace {

SparseVector sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  return v;
}

}  // namespace

TEST_CASE("normalized merges and drops zeros") {
  SparseVector v{{3, 1}, {1, 2}, {3, -1}, {0, 0}};
  CHECK(normalized(v) == SparseVector{{1, 2}});
}

TEST_CASE("axpy") {
  SparseVector v{{0, 1}, {2, 3}};
  SparseVector w{{2, 1}, {5, 4}};
  CHECK(axpy(v, -3, w) == SparseVector{{0, 1}, {5, -12}});
  CHECK(axpy(v, 0, w) == v);
}

TEST_CASE("echelon membership") {
  RowEchelon e;
  CHECK(e.insert({{0, 1}, {1, 1}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert({{0, 1}, {2, -1}}));  // difference of the first two
  CHECK(e.rank() == 2);
  CHECK(e.contains({{0, 2}, {1, 4}, {2, 2}}));
  CHECK_FALSE(e.contains({{2, 1}}));
  CHECK(e.reduce({}).empty());
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> shape(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = shape(rng), cols = shape(rng);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
    std::vector<std::vector<long>> ints(rows, std::vector<long>(cols));
    std::vector<SparseVector> sparse_rows;
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        // Mostly zero, and sometimes a copy of an earlier row to force dependence.
        ints[i][j] = (entry(rng) == 0) ? entry(rng) : 0;
        if (i > 0 && trial % 3 == 0) ints[i][j] = ints[i - 1][j] * 2;
        dense[i][j] = ints[i][j];
      }
      sparse_rows.push_back(sparse(dense[i]));
    }
    const auto want = testing_support::dense_rank(dense);
    CHECK(rank(sparse_rows) == want);
    CHECK(rank(ints) == want);
  }
}
