#pragma once

#include <cstddef>
#include <vector>

#include "liederiv/matrix.hpp"

namespace liederiv {

struct RrefResult {
  Matrix reduced;                    // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan reduction. The per-pivot elimination sweep over rows runs as an
/// OpenMP parallel loop once the matrix is tall enough to pay for it.
RrefResult rref(Matrix m);

/// Serial reference: forward elimination to echelon form, then back substitution.
/// Kept for cross-checking the parallel kernel and for benchmarking.
RrefResult rref_serial(Matrix m);

std::size_t rank(const Matrix& m);

/// Rows below which rref() stays serial.
inline constexpr std::size_t kParallelRowThreshold = 48;

}  // namespace liederiv
