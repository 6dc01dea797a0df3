#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pleb/tensor.hpp"
#include "pleb/triple.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// fiber coordinate conventions (fixed across the whole code base)
//
//   TM   (dim  4)  xi_mu                       idx = mu
//   S    (dim 13)  [h, h^i (3), htilde (9)]    htilde in hbasis coordinates
//   E    (dim  3)  chi^i                       idx = i
//   EL1  (dim 12)  a^i_mu                      idx = 4*i + mu
//   ETF  (dim 18)  B^i_{mu nu}, mu < nu        idx = 6*i + pair
//   SE   (dim 16)  [S | chi]                   chi at 13..15
//   TA   (dim 16)  [xi | a]                    a at 4..15
//   SPLIT(dim 16)  [h, h+ (3), h- (3), htilde (9)]
//
// pair order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
// ---------------------------------------------------------------------------

enum class Space { TM, S, E, EL1, ETF, SE, TA, SPLIT };

int space_dim(Space s);
const char* space_name(Space s);

inline constexpr std::array<std::pair<int, int>, 6> kPair6 = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// pair index and sign for an ordered index pair (mu, nu), mu != nu
inline std::pair<int, int> pair_index(int mu, int nu) {
  const int a = mu < nu ? mu : nu;
  const int b = mu < nu ? nu : mu;
  int p = 0;
  for (; p < 6; ++p)
    if (kPair6[p].first == a && kPair6[p].second == b) break;
  return {p, mu < nu ? 1 : -1};
}

inline int el1_index(int i, int mu) { return 4 * i + mu; }
inline int etf_index(int i, int p) { return 6 * i + p; }

// ---------------------------------------------------------------------------
// minimal dense matrix over an arbitrary scalar; keeps the exact paths free
// of numeric-only library assumptions. Heavy numerics converts to Eigen.
// ---------------------------------------------------------------------------

inline bool fiber_is_zero(double v) { return v == 0.0; }
inline bool fiber_is_zero(const RootTwo& v) { return v.is_zero(); }

template <typename T>
class FiberMat {
 public:
  FiberMat() = default;
  FiberMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, T(0)) {}

  static FiberMat identity(int n) {
    FiberMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  FiberMat operator*(const FiberMat& o) const {
    FiberMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (fiber_is_zero(v)) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += v * o(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  FiberMat operator+(const FiberMat& o) const {
    FiberMat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }

  FiberMat operator-(const FiberMat& o) const {
    FiberMat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }

  FiberMat scaled(const T& s) const {
    FiberMat out = *this;
    for (auto& v : out.data_) v = v * s;
    return out;
  }

  FiberMat transpose() const {
    FiberMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using FiberMatD = FiberMat<double>;
using FiberMatQ = FiberMat<RootTwo>;

// ---------------------------------------------------------------------------
// two-form packing
// ---------------------------------------------------------------------------

template <typename T>
std::vector<T> pack_forms(const std::array<Mat4<T>, 3>& f) {
  std::vector<T> out(18, T(0));
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < 6; ++p) out[etf_index(i, p)] = f[i][kPair6[p].first][kPair6[p].second];
  return out;
}

template <typename T>
std::array<Mat4<T>, 3> unpack_forms(const std::vector<T>& v) {
  std::array<Mat4<T>, 3> f;
  for (int i = 0; i < 3; ++i) {
    f[i] = mat4_zero<T>();
    for (int p = 0; p < 6; ++p) {
      f[i][kPair6[p].first][kPair6[p].second] = v[etf_index(i, p)];
      f[i][kPair6[p].second][kPair6[p].first] = -v[etf_index(i, p)];
    }
  }
  return f;
}

// htilde <-> 9 orthonormal coordinates
template <typename T>
std::array<T, 9> ht_to_coords(const PerfectTripleT<T>& t, const Mat4<T>& x) {
  std::array<T, 9> c;
  for (int k = 0; k < 9; ++k) c[k] = dot_g(x, t.hbasis[k], t.ginv);
  return c;
}

template <typename T>
Mat4<T> ht_from_coords(const PerfectTripleT<T>& t, const T* c) {
  Mat4<T> x = mat4_zero<T>();
  for (int k = 0; k < 9; ++k) x = mat4_add(x, mat4_scale(t.hbasis[k], c[k]));
  return x;
}

// ---------------------------------------------------------------------------
// the S parametrization of E-valued 2-forms and its inverse
//
//   sigma^i_{mu nu} = 2 eps^{ijk} Sigma^j_{mu nu} h^k
//                   + h_mu{}^a Sigma^i_{a nu} - h_nu{}^a Sigma^i_{a mu},
//   h_{mu nu} = (1/4) g_{mu nu} h + htilde_{mu nu}
// ---------------------------------------------------------------------------

template <typename T>
std::array<Mat4<T>, 3> sigma_from_s(const PerfectTripleT<T>& t, const std::vector<T>& s) {
  Mat4<T> hmat = ht_from_coords(t, s.data() + 4);
  const T quarter = T(1) / T(4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) hmat[m][n] += t.g[m][n] * s[0] * quarter;
  // h_mu{}^a
  Mat4<T> h_ud = mat4_mul(hmat, t.ginv);
  std::array<Mat4<T>, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = mat4_zero<T>();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e == 0) continue;
        out[i] = mat4_add(out[i], mat4_scale(t.sigma[j], T(2 * e) * s[1 + k]));
      }
    Mat4<T> disk = mat4_mul(h_ud, t.sigma[i]);  // h_mu{}^a Sigma^i_{a nu}
    out[i] = mat4_add(out[i], mat4_add(disk, mat4_scale(mat4_transpose(disk), T(-1))));
  }
  return out;
}

// inverse on the image: h from the full trace, h^i from the antisymmetric
// 3x3 channel, htilde from the symmetric tracefree channel
template <typename T>
std::vector<T> s_from_sigma(const PerfectTripleT<T>& t, const std::array<Mat4<T>, 3>& sg) {
  std::vector<T> s(13, T(0));
  // h = (1/6) Sigma^{i mu nu} sigma^i_{mu nu}
  T h = T(0);
  for (int i = 0; i < 3; ++i)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) h += t.sigma_uu[i][m][n] * sg[i][m][n];
  s[0] = h / T(6);
  // h^i = (1/16) eps^{ijk} Sigma^{k mu nu} sigma^j_{mu nu}
  for (int i = 0; i < 3; ++i) {
    T acc = T(0);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e == 0) continue;
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) acc += T(e) * t.sigma_uu[k][m][n] * sg[j][m][n];
      }
    s[1 + i] = acc / T(16);
  }
  // htilde = -(1/2) tracefree-sym of y_{mu nu} = Sigma^i_mu{}^a sigma^i_{a nu}
  Mat4<T> y = mat4_zero<T>();
  for (int i = 0; i < 3; ++i) y = mat4_add(y, mat4_mul(t.sigma_ud[i], sg[i]));
  Mat4<T> ht = sym_tracefree(y, t.g, t.ginv);
  ht = mat4_scale(ht, T(-1) / T(2));
  const auto c = ht_to_coords(t, ht);
  for (int k = 0; k < 9; ++k) s[4 + k] = c[k];
  return s;
}

// ---------------------------------------------------------------------------
// pointwise algebra operators as fiber matrices
// ---------------------------------------------------------------------------

// J1 on EL1: (J1 a)^i_mu = eps^{ijk} Sigma^j_mu{}^a a^k_a
template <typename T>
FiberMat<T> j1_matrix(const PerfectTripleT<T>& t) {
  FiberMat<T> m(12, 12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e == 0) continue;
        for (int mu = 0; mu < 4; ++mu)
          for (int a = 0; a < 4; ++a)
            m(el1_index(i, mu), el1_index(k, a)) += T(e) * t.sigma_ud[j][mu][a];
      }
  return m;
}

// J2 on ETF: (J2 B)^i_{mu nu} = eps^{ijk} Sigma^j_{[mu}{}^a B^k_{|a| nu]}
template <typename T>
FiberMat<T> j2_matrix(const PerfectTripleT<T>& t) {
  FiberMat<T> m(18, 18);
  const T half = T(1) / T(2);
  for (int col = 0; col < 18; ++col) {
    std::vector<T> unit(18, T(0));
    unit[col] = T(1);
    const auto b = unpack_forms(unit);
    std::array<Mat4<T>, 3> out;
    for (int i = 0; i < 3; ++i) {
      out[i] = mat4_zero<T>();
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e = eps3(i, j, k);
          if (e == 0) continue;
          Mat4<T> prod = mat4_mul(t.sigma_ud[j], b[k]);
          prod = mat4_add(prod, mat4_scale(mat4_transpose(prod), T(-1)));
          out[i] = mat4_add(out[i], mat4_scale(prod, T(e) * half));
        }
    }
    const auto packed = pack_forms(out);
    for (int r = 0; r < 18; ++r) m(r, col) = packed[r];
  }
  return m;
}

// Phi: EL1 -> TM, (Phi a)_mu = Sigma^i_mu{}^a a^i_a
template <typename T>
FiberMat<T> phi_matrix(const PerfectTripleT<T>& t) {
  FiberMat<T> m(4, 12);
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a) m(mu, el1_index(i, a)) = t.sigma_ud[i][mu][a];
  return m;
}

// adjoint of Phi w.r.t. the (gamma1, gamma2) pairing on EL1 and the plain
// pairing on TM: Phi*(xi)^i_mu = Sigma^i_mu{}^a xi_a / (2 gamma2 - gamma1)
template <typename T>
FiberMat<T> phi_star_matrix(const PerfectTripleT<T>& t, const T& gamma1, const T& gamma2) {
  const T denom = T(2) * gamma2 - gamma1;
  FiberMat<T> m(12, 4);
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a) m(el1_index(i, mu), a) = t.sigma_ud[i][mu][a] / denom;
  return m;
}

// embed S into E-valued 2-forms, and extract back (left inverse)
template <typename T>
FiberMat<T> s_embed_matrix(const PerfectTripleT<T>& t) {
  FiberMat<T> m(18, 13);
  for (int col = 0; col < 13; ++col) {
    std::vector<T> unit(13, T(0));
    unit[col] = T(1);
    const auto packed = pack_forms(sigma_from_s(t, unit));
    for (int r = 0; r < 18; ++r) m(r, col) = packed[r];
  }
  return m;
}

template <typename T>
FiberMat<T> s_extract_matrix(const PerfectTripleT<T>& t) {
  FiberMat<T> m(13, 18);
  for (int col = 0; col < 18; ++col) {
    std::vector<T> unit(18, T(0));
    unit[col] = T(1);
    const auto s = s_from_sigma(t, unpack_forms(unit));
    for (int r = 0; r < 13; ++r) m(r, col) = s[r];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Gram matrices of the inner-product family
//
//   on S:   beta1 h^2 + beta2 h^i h^i + beta3 |htilde|^2   (diagonal here)
//   on EL1: gamma1 |a|^2 - gamma2 a.J1(a)
//   on TM, E: plain
// ---------------------------------------------------------------------------

template <typename T>
FiberMat<T> gram_s(const T& beta1, const T& beta2, const T& beta3) {
  FiberMat<T> m(13, 13);
  m(0, 0) = beta1;
  for (int i = 1; i < 4; ++i) m(i, i) = beta2;
  for (int k = 4; k < 13; ++k) m(k, k) = beta3;
  return m;
}

template <typename T>
FiberMat<T> gram_el1(const PerfectTripleT<T>& t, const T& gamma1, const T& gamma2) {
  FiberMat<T> m = j1_matrix(t).scaled(T(0) - gamma2);
  for (int i = 0; i < 12; ++i) m(i, i) += gamma1;
  return m;
}

// block-diagonal Grams for the composite spaces
template <typename T>
FiberMat<T> gram_se(const T& beta1, const T& beta2, const T& beta3) {
  FiberMat<T> m(16, 16);
  m(0, 0) = beta1;
  for (int i = 1; i < 4; ++i) m(i, i) = beta2;
  for (int k = 4; k < 13; ++k) m(k, k) = beta3;
  for (int k = 13; k < 16; ++k) m(k, k) = T(1);
  return m;
}

template <typename T>
FiberMat<T> gram_ta(const PerfectTripleT<T>& t, const T& gamma1, const T& gamma2) {
  FiberMat<T> m(16, 16);
  for (int i = 0; i < 4; ++i) m(i, i) = T(1);
  FiberMat<T> ga = gram_el1(t, gamma1, gamma2);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(4 + i, 4 + j) = ga(i, j);
  return m;
}

}  // namespace pleb
