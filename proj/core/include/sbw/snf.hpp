#pragma once

#include <vector>

namespace sbw {

// Diagonal of the Smith normal form of an integer matrix: nonnegative
// d_1 | d_2 | ... | d_r followed by zeros up to min(rows, cols).
// Computed with exact arbitrary-precision arithmetic internally.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

}  // namespace sbw
