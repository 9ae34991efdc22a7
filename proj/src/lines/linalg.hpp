#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace lines {

template <class F>
using Mat4 = std::array<std::array<F, 4>, 4>;

template <class F>
std::array<F, 4> mat4_apply(const Mat4<F>& m, const std::array<F, 4>& x) {
  std::array<F, 4> y{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) y[i] = y[i] + m[i][j] * x[j];
  return y;
}

template <class F>
Mat4<F> mat4_mul(const Mat4<F>& a, const Mat4<F>& b) {
  Mat4<F> c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

template <class F>
Mat4<F> mat4_inverse(Mat4<F> m, const F& one) {
  Mat4<F> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = one;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!is_zero(m[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("mat4: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    F d = inv(m[col][col]);
    for (int j = 0; j < 4; ++j) {
      m[col][j] = m[col][j] * d;
      inv[col][j] = inv[col][j] * d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      F f = m[r][col];
      for (int j = 0; j < 4; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

// Gaussian elimination solve A x = b over a field; A is n x n, returns x.
// Throws std::domain_error when A is singular.
template <class F>
std::vector<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw std::domain_error("solve: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    F d = inv(a[col][col]);
    for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] * d;
    b[col] = b[col] * d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      F f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

// rank of a matrix over a field (destructive elimination on a copy)
template <class F>
int matrix_rank(std::vector<std::vector<F>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t rpos = 0;
  for (size_t col = 0; col < cols && rpos < rows; ++col) {
    size_t piv = rpos;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rpos]);
    F d = inv(a[rpos][col]);
    for (size_t j = col; j < cols; ++j) a[rpos][j] = a[rpos][j] * d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rpos || is_zero(a[r][col])) continue;
      F f = a[r][col];
      for (size_t j = col; j < cols; ++j) a[r][j] = a[r][j] - f * a[rpos][j];
    }
    ++rank;
    ++rpos;
  }
  return rank;
}

// Bareiss fraction-free determinant over an integral domain with exact_div.
template <class R>
R det_bareiss(std::vector<std::vector<R>> a, const R& one) {
  size_t n = a.size();
  if (n == 0) return one;
  R denom = one;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t piv = k + 1;
      while (piv < n && is_zero(a[piv][k])) ++piv;
      if (piv == n) return zero_like(one);
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        R t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, denom);
      }
    denom = a[k][k];
  }
  R d = a[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace lines
