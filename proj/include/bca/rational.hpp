#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bca {

using Rational = mpq_class;

/// Sparse vector over the rationals: (coordinate, coefficient) pairs sorted
/// by coordinate, no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bca
