#include "sbw/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>

namespace sbw {

namespace {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>;

// True when everything below and right of (s,s) except the pivot is zero.
bool pivot_isolated(const Matrix& a, std::size_t s) {
  for (std::size_t i = s + 1; i < a.size(); ++i)
    if (a[i][s] != 0) return false;
  for (std::size_t j = s + 1; j < a[s].size(); ++j)
    if (a[s][j] != 0) return false;
  return true;
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  for (const auto& r : input)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  const std::size_t nmin = std::min(rows, cols);

  Matrix a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = input[i][j];

  for (std::size_t s = 0; s < nmin; ++s) {
    while (true) {
      // Pull the smallest nonzero entry of the trailing block into (s,s).
      std::size_t pi = s, pj = s;
      Int best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          const Int mag = abs(a[i][j]);
          if (best == 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;  // trailing block is zero
      std::swap(a[s], a[pi]);
      if (pj != s)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][s], a[i][pj]);

      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a[i][s] == 0) continue;
        const Int q = a[i][s] / a[s][s];
        for (std::size_t j = s; j < cols; ++j) a[i][j] -= q * a[s][j];
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a[s][j] == 0) continue;
        const Int q = a[s][j] / a[s][s];
        for (std::size_t i = s; i < rows; ++i) a[i][j] -= q * a[i][s];
      }
      if (!pivot_isolated(a, s)) continue;

      // Enforce divisibility of later entries by the pivot.
      bool divides_all = true;
      for (std::size_t i = s + 1; i < rows && divides_all; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (a[i][j] % a[s][s] != 0) {
            // Fold the offending row into row s and restart the pivot.
            for (std::size_t k = s; k < cols; ++k) a[s][k] += a[i][k];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a[s][s] < 0) a[s][s] = -a[s][s];
  }

  std::vector<long long> diag(nmin, 0);
  for (std::size_t s = 0; s < nmin; ++s) {
    if (a[s][s] > std::numeric_limits<long long>::max())
      throw std::overflow_error("smith diagonal entry exceeds 64 bits");
    diag[s] = static_cast<long long>(a[s][s]);
  }
  return diag;
}

}  // namespace sbw
