#include "bca/linalg.hpp"

#include <algorithm>

namespace bca {

SparseVector normalized(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, std::move(c));
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

SparseVector axpy(const SparseVector& v, const Rational& factor, const SparseVector& w) {
  if (factor == 0) return v;
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, factor * w[j].second);
      ++j;
    } else {
      Rational c = v[i].second + factor * w[j].second;
      if (c != 0) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector RowEchelon::reduce(SparseVector v) const {
  // Walk coordinates downward; eliminating a pivot only touches smaller ones.
  std::size_t k = v.size();
  while (k > 0) {
    const std::size_t coord = v[k - 1].first;
    auto it = rows_.find(coord);
    if (it == rows_.end()) {
      --k;
      continue;
    }
    const Rational factor = -v[k - 1].second;
    v = axpy(v, factor, it->second);
    k = std::upper_bound(v.begin(), v.end(), coord,
                         [](std::size_t c, const auto& e) { return c < e.first; }) -
        v.begin();
  }
  return v;
}

bool RowEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.back().second;
  for (auto& e : v) e.second /= lead;
  const std::size_t pivot = v.back().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::size_t rank(const std::vector<SparseVector>& rows) {
  RowEchelon echelon;
  for (const auto& r : rows) echelon.insert(normalized(r));
  return echelon.rank();
}

std::size_t rank(const std::vector<std::vector<long>>& matrix) {
  std::vector<SparseVector> rows;
  for (const auto& row : matrix) {
    SparseVector r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) r.emplace_back(j, Rational(row[j]));
    rows.push_back(std::move(r));
  }
  return rank(rows);
}

}  // namespace bca
