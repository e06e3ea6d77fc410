#pragma once

#include <array>
#include <cstddef>

#include "bilevel/exact.hpp"

namespace bilevel {

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

/// Integer 2x2 matrix [[a, b], [c, d]].
using Mat2 = std::array<std::array<BigInt, 2>, 2>;

inline BigInt det2(const Mat2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

inline Mat2 mul2(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return r;
}

template <class T>
Mat4<T> identity4() {
  Mat4<T> m{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = T(i == j ? 1 : 0);
  }
  return m;
}

template <class T>
Mat4<T> multiply(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      T s(0);
      for (std::size_t k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  }
  return c;
}

template <class T>
Mat4<T> transpose(const Mat4<T>& a) {
  Mat4<T> t{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = a[j][i];
  }
  return t;
}

/// Gaussian elimination over a field.
template <class T>
T determinant(Mat4<T> a) {
  T det(1);
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) return T(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (a[r][col].is_zero()) continue;
      T f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

/// Gauss-Jordan inverse; throws ZeroDivisor for singular input.
template <class T>
Mat4<T> inverse(Mat4<T> a) {
  Mat4<T> inv = identity4<T>();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw Error(ErrorKind::ZeroDivisor, "singular 4x4 matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    T p = a[col][col];
    for (std::size_t k = 0; k < 4; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      T f = a[r][col];
      for (std::size_t k = 0; k < 4; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace bilevel
