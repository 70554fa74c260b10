#pragma once

#include <vector>

#include "extremal/ints.hpp"

namespace extremal {

/// Exact rational kernel of an m x n integer matrix.  Each basis vector is
/// scaled to integers, divided by its content, with positive first nonzero
/// entry.  Fraction-free (Bareiss) forward elimination, rational
/// back-substitution.
std::vector<std::vector<Int>> nullSpace(std::vector<std::vector<Int>> rows, std::size_t cols);

/// Exact rank.
std::size_t rankOf(std::vector<std::vector<Int>> rows, std::size_t cols);

}  // namespace extremal
