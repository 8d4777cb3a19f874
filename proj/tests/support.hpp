#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "liederiv/algebra.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv::testing {

/// Fraction-free (Bareiss) elimination over the integers after clearing denominators row by row.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class scaled = m(r, c) * mpq_class(l);
      a[r][c] = scaled.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Rows of the (Lie) derivation identities over all ordered basis pairs, written
/// straight from the structure constants.
inline Matrix identity_rows(const StructureAlgebra& a, bool lie) {
  const std::size_t n = a.dim();
  Matrix out(n * n * n, n * n);
  auto var = [n](std::size_t row, std::size_t col) { return col * n + row; };  // D(e_col) coefficient of e_row
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) {
    return lie ? mpq_class(a.mul(i, j, k) - a.mul(j, i, k)) : a.mul(i, j, k);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t r = (i * n + j) * n + k;
        // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k
        for (std::size_t t = 0; t < n; ++t) {
          out(r, var(k, t)) += c(i, j, t);
          out(r, var(t, i)) -= c(t, j, k);
          out(r, var(t, j)) -= c(i, t, k);
        }
      }
  return out;
}

inline std::size_t oracle_dim_der(const StructureAlgebra& a) {
  return a.dim() * a.dim() - bareiss_rank(identity_rows(a, false));
}
inline std::size_t oracle_dim_lie_der(const StructureAlgebra& a) {
  return a.dim() * a.dim() - bareiss_rank(identity_rows(a, true));
}

inline std::size_t oracle_dim_center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix rows(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) rows(i * n + k, t) = a.mul(t, i, k) - a.mul(i, t, k);
  return n - bareiss_rank(rows);
}
inline std::size_t oracle_dim_commutators(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix rows(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) rows(i * n + j, k) = a.mul(i, j, k) - a.mul(j, i, k);
  return bareiss_rank(rows);
}

/// dim of the span of the given vectors.
inline std::size_t oracle_span_dim(std::size_t ambient, const std::vector<Vector>& vs) {
  return bareiss_rank(Matrix::from_rows(ambient, vs));
}

inline bool oracle_in_span(std::size_t ambient, std::vector<Vector> vs, const Vector& v) {
  const std::size_t before = oracle_span_dim(ambient, vs);
  vs.push_back(v);
  return oracle_span_dim(ambient, vs) == before;
}

inline Scalar small_scalar(std::mt19937_64& rng, int radius = 3) {
  const long num = static_cast<long>(rng() % (2 * radius + 1)) - radius;
  const long den = static_cast<long>(rng() % 3) + 1;
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double zero_rate = 0.3) {
  Matrix m(rows, cols);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) >= zero_rate) m(r, c) = small_scalar(rng);
  return m;
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (auto& x : v) x = small_scalar(rng);
  return v;
}

/// Unit lower times unit upper triangular with small integer entries.
inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  Matrix l = Matrix::identity(n);
  Matrix u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = static_cast<long>(rng() % 5) - 2;
      u(j, i) = static_cast<long>(rng() % 5) - 2;
    }
  return l * u;
}

}  // namespace liederiv::testing
