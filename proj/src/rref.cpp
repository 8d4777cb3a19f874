#include "liederiv/rref.hpp"

namespace liederiv {

namespace {

// row(target) -= factor * row(source), restricted to columns >= from.
void eliminate_row(Matrix& m, std::size_t target, std::size_t source, const Scalar& factor,
                   std::size_t from) {
  auto dst = m.row(target);
  auto src = m.row(source);
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (sgn(src[c]) != 0) dst[c] -= factor * src[c];
  }
}

std::size_t find_pivot_row(const Matrix& m, std::size_t col, std::size_t from) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (sgn(m(r, col)) != 0) return r;
  }
  return m.rows();
}

}  // namespace

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    const std::size_t pr = find_pivot_row(m, col, rank);
    if (pr == rows) continue;
    m.swap_rows(pr, rank);
    const Scalar inv = 1 / m(rank, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (sgn(m(rank, c)) != 0) m(rank, c) *= inv;
    }

    const bool parallel = rows >= kParallelRowThreshold;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m(r, col)) == 0) continue;
      const Scalar factor = m(r, col);
      eliminate_row(m, r, rank, factor, col);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

RrefResult rref_serial(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;

  // Forward pass: echelon form, pivots left unnormalized.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    const std::size_t pr = find_pivot_row(m, col, rank);
    if (pr == rows) continue;
    m.swap_rows(pr, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Scalar factor = m(r, col) / m(rank, col);
      eliminate_row(m, r, rank, factor, col);
    }
    pivots.push_back(col);
    ++rank;
  }

  // Backward pass: normalize each pivot row and clear the entries above it.
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t col = pivots[i];
    const Scalar inv = 1 / m(i, col);
    for (std::size_t c = col; c < cols; ++c) m(i, c) *= inv;
    for (std::size_t r = 0; r < i; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Scalar factor = m(r, col);
      eliminate_row(m, r, i, factor, col);
    }
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

}  // namespace liederiv
