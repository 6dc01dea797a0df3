#pragma once

#include <array>
#include <cstddef>

namespace pleb {

// Dense 4-vectors / 4x4 matrices over an arbitrary commutative scalar
// (double for numerics, RootTwo for the exact paths). Only the handful of
// operations the fiber algebra needs; anything heavier goes through Eigen
// on the numeric side.

template <typename T>
using Vec4 = std::array<T, 4>;

template <typename T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <typename T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <typename T>
Mat4<T> mat4_zero() {
  Mat4<T> m{};
  for (auto& row : m)
    for (auto& v : row) v = T(0);
  return m;
}

template <typename T>
Mat4<T> mat4_identity() {
  Mat4<T> m = mat4_zero<T>();
  for (int i = 0; i < 4; ++i) m[i][i] = T(1);
  return m;
}

template <typename T>
Mat4<T> mat4_mul(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> c = mat4_zero<T>();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <typename T>
Mat4<T> mat4_transpose(const Mat4<T>& a) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
  return c;
}

template <typename T>
Mat4<T> mat4_add(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

template <typename T>
Mat4<T> mat4_scale(const Mat4<T>& a, const T& s) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] * s;
  return c;
}

template <typename T>
T mat4_det(const Mat4<T>& m) {
  // cofactor expansion along the first row; fine for exact scalars
  T det = T(0);
  for (int c0 = 0; c0 < 4; ++c0) {
    std::array<std::array<T, 3>, 3> minor{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == c0) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    T d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
           minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
           minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
    T term = m[0][c0] * d3;
    det += (c0 % 2 == 0) ? term : -term;
  }
  return det;
}

template <typename T>
Mat4<T> mat4_inverse(const Mat4<T>& m) {
  const T det = mat4_det(m);
  Mat4<T> inv;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // cofactor C_{ji} / det
      std::array<std::array<T, 3>, 3> minor{};
      int rr = 0;
      for (int r = 0; r < 4; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      T d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
             minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
             minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
      T cof = ((i + j) % 2 == 0) ? d3 : -d3;
      inv[i][j] = cof / det;
    }
  }
  return inv;
}

// g-trace of a (0,2) tensor: ginv^{mu nu} X_{mu nu}
template <typename T>
T trace_g(const Mat4<T>& x, const Mat4<T>& ginv) {
  T t = T(0);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) t += ginv[m][n] * x[m][n];
  return t;
}

// full g-contraction of two (0,2) tensors: X_{mu nu} Y_{rho si} g^{mu rho} g^{nu si}
template <typename T>
T dot_g(const Mat4<T>& x, const Mat4<T>& y, const Mat4<T>& ginv) {
  T t = T(0);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) t += x[m][n] * y[r][s] * ginv[m][r] * ginv[n][s];
  return t;
}

// symmetric g-tracefree part: (X + X^T)/2 - g * tr_g(X)/4
template <typename T>
Mat4<T> sym_tracefree(const Mat4<T>& x, const Mat4<T>& g, const Mat4<T>& ginv) {
  const T tr = trace_g(x, ginv);
  Mat4<T> out;
  const T half = T(1) / T(2);
  const T quarter = T(1) / T(4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      out[m][n] = (x[m][n] + x[n][m]) * half - g[m][n] * tr * quarter;
  return out;
}

struct Perm4 {
  std::array<int, 4> p;
  int sign;
};

// the 24 permutations of {0,1,2,3} with parity, in lexicographic order
inline constexpr std::array<Perm4, 24> kPerm4 = {{
    {{0, 1, 2, 3}, +1}, {{0, 1, 3, 2}, -1}, {{0, 2, 1, 3}, -1}, {{0, 2, 3, 1}, +1},
    {{0, 3, 1, 2}, +1}, {{0, 3, 2, 1}, -1}, {{1, 0, 2, 3}, -1}, {{1, 0, 3, 2}, +1},
    {{1, 2, 0, 3}, +1}, {{1, 2, 3, 0}, -1}, {{1, 3, 0, 2}, -1}, {{1, 3, 2, 0}, +1},
    {{2, 0, 1, 3}, +1}, {{2, 0, 3, 1}, -1}, {{2, 1, 0, 3}, -1}, {{2, 1, 3, 0}, +1},
    {{2, 3, 0, 1}, +1}, {{2, 3, 1, 0}, -1}, {{3, 0, 1, 2}, -1}, {{3, 0, 2, 1}, +1},
    {{3, 1, 0, 2}, +1}, {{3, 1, 2, 0}, -1}, {{3, 2, 0, 1}, -1}, {{3, 2, 1, 0}, +1},
}};

// sign of the permutation (a,b,c,d) of {0,1,2,3}; 0 if any index repeats
inline int perm4_sign(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// antisymmetric epsilon on three internal indices, eps^{123} = +1
inline int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int sign = 1;
  int idx[3] = {i, j, k};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (idx[a] > idx[b]) sign = -sign;
  return sign;
}

}  // namespace pleb
