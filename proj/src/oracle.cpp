#include "bca/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "bca/error.hpp"

namespace bca {

QuiverShape QuiverShape::of(const Quiver& quiver) {
  QuiverShape s;
  s.vertex_count = quiver.vertex_count();
  for (const auto& a : quiver.arrows) {
    s.sources.push_back(a.source);
    s.targets.push_back(a.target);
  }
  return s;
}

OracleLimits OracleLimits::from_env() {
  OracleLimits limits;
  if (const char* env = std::getenv("BCA_ORACLE_PATH_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_paths = static_cast<std::size_t>(v);
  }
  return limits;
}

PathOracle::PathOracle(QuiverShape shape, const std::vector<PathPolynomial>& relations,
                       std::size_t max_length, OracleLimits limits)
    : shape_(std::move(shape)), max_length_(max_length) {
  const std::size_t n_arrows = shape_.arrow_count();

  // Paths by increasing length.
  std::vector<std::size_t> frontier_begin{0};
  for (std::size_t a = 0; a < n_arrows; ++a) paths_.push_back({a});
  for (std::size_t len = 2; len <= max_length_; ++len) {
    const std::size_t begin = frontier_begin.back();
    const std::size_t end = paths_.size();
    frontier_begin.push_back(end);
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t tail = shape_.targets[paths_[i].back()];
      for (std::size_t a = 0; a < n_arrows; ++a) {
        if (shape_.sources[a] != tail) continue;
        if (paths_.size() >= limits.max_paths)
          throw ResourceLimitError("path enumeration exceeded " + std::to_string(limits.max_paths) +
                                   " paths (raise BCA_ORACLE_PATH_LIMIT)");
        Path p = paths_[i];
        p.push_back(a);
        paths_.push_back(std::move(p));
      }
    }
  }
  if (max_length_ == 0) paths_.clear();
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);

  // Monomial part of the ideal: any path with a monomial relation inside it.
  std::set<Path> monomials;
  for (const auto& rel : relations)
    if (rel.size() == 1 && rel.front().coeff != 0) monomials.insert(rel.front().path);
  monomial_zero_.assign(paths_.size(), false);
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const Path& p = paths_[i];
    bool zero = monomials.count(p) != 0;
    if (!zero && p.size() > 1) {
      zero = monomial_zero_[index_.at(Path(p.begin(), p.end() - 1))] ||
             monomial_zero_[index_.at(Path(p.begin() + 1, p.end()))];
    }
    monomial_zero_[i] = zero;
  }

  // Two-sided consequences of the remaining relations.
  std::vector<std::vector<Path>> ending_at(shape_.vertex_count), starting_at(shape_.vertex_count);
  for (const auto& p : paths_) {
    ending_at[shape_.targets[p.back()]].push_back(p);
    starting_at[shape_.sources[p.front()]].push_back(p);
  }
  std::vector<const PathPolynomial*> binomials;
  for (const auto& rel : relations)
    if (rel.size() > 1) binomials.push_back(&rel);

  std::vector<std::vector<SparseVector>> generated(binomials.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < binomials.size(); ++r) {
    const auto& rel = *binomials[r];
    const std::size_t s = shape_.sources[rel.front().path.front()];
    const std::size_t t = shape_.targets[rel.front().path.back()];
    std::size_t min_len = rel.front().path.size();
    for (const auto& term : rel) min_len = std::min(min_len, term.path.size());
    if (min_len > max_length_) continue;
    const std::size_t budget = max_length_ - min_len;

    std::vector<const Path*> lefts{nullptr}, rights{nullptr};
    for (const auto& u : ending_at[s])
      if (u.size() <= budget) lefts.push_back(&u);
    for (const auto& w : starting_at[t])
      if (w.size() <= budget) rights.push_back(&w);

    for (const Path* u : lefts) {
      const std::size_t lu = u ? u->size() : 0;
      for (const Path* w : rights) {
        const std::size_t lw = w ? w->size() : 0;
        if (lu + lw > budget) continue;
        PathPolynomial product;
        for (const auto& term : rel) {
          Path p;
          if (u) p.insert(p.end(), u->begin(), u->end());
          p.insert(p.end(), term.path.begin(), term.path.end());
          if (w) p.insert(p.end(), w->begin(), w->end());
          product.push_back({std::move(p), term.coeff});
        }
        auto v = coordinates(product);
        if (!v.empty()) generated[r].push_back(std::move(v));
      }
    }
  }
  for (auto& batch : generated)
    for (auto& v : batch) echelon_.insert(std::move(v));
}

SparseVector PathOracle::coordinates(const PathPolynomial& p) const {
  SparseVector v;
  for (const auto& term : p) {
    if (term.path.empty() || term.path.size() > max_length_) continue;
    auto it = index_.find(term.path);
    if (it == index_.end()) continue;  // not a path of the quiver: zero
    if (monomial_zero_[it->second]) continue;
    v.emplace_back(it->second, term.coeff);
  }
  return normalized(std::move(v));
}

std::size_t PathOracle::quotient_dimension() const {
  std::size_t alive = 0;
  for (bool z : monomial_zero_) alive += z ? 0 : 1;
  return shape_.vertex_count + alive - echelon_.rank();
}

bool PathOracle::in_ideal(const PathPolynomial& p) const { return echelon_.contains(coordinates(p)); }

bool PathOracle::top_degree_vanishes() const {
  for (const auto& p : paths_)
    if (p.size() == max_length_ && !in_ideal(p)) return false;
  return true;
}

}  // namespace bca
