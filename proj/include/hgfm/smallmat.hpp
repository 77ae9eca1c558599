#pragma once

#include "hgfm/rational.hpp"

#include <cstddef>
#include <vector>

namespace hgfm::detail {

/// Determinant by Laplace expansion along the first row. Intended for the
/// small matrices this library meets (n <= 8); exact for exact T.
template <class T>
T det_small(const std::vector<std::vector<T>>& M) {
  const std::size_t n = M.size();
  if (n == 0) return scalar_traits<T>::from_int(1);
  if (n == 1) return M[0][0];
  if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
  T out = scalar_traits<T>::from_int(0);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j, sign = -sign) {
    if (M[0][j] == scalar_traits<T>::from_int(0)) continue;
    std::vector<std::vector<T>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      minor[r - 1].reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(M[r][c]);
    }
    T term = M[0][j] * det_small(minor);
    if (sign < 0)
      out -= term;
    else
      out += term;
  }
  return out;
}

}  // namespace hgfm::detail
