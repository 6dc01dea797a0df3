#pragma once

#include <array>

#include "pleb/fiber.hpp"
#include "pleb/triple.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// Pointwise algebra of E-valued 2-forms B^i_{mu nu} (antisymmetric in mu nu),
// represented as three full 4x4 antisymmetric matrices.  The four irreducible
// channels under the background triple are extracted by:
//
//   trace:   Sigma^{k ab} B^k_{ab}                     (1 component)
//   axial:   eps^{ijk} Sigma^{k ab} B^j_{ab}           (3 components)
//   sym:     B^{(i ab} Sigma^{j)}_{ab} - tr/3          (5 components)
//   cross:   tracefree-sym part of Sigma^i_mu{}^a B^i_{a nu}   (9 components)
// ---------------------------------------------------------------------------

template <typename T>
using Forms3 = std::array<Mat4<T>, 3>;

template <typename T>
T forms_dot(const PerfectTripleT<T>& t, const Forms3<T>& x, const Forms3<T>& y) {
  T out = T(0);
  for (int i = 0; i < 3; ++i) out += dot_g(x[i], y[i], t.ginv);
  return out;
}

template <typename T>
T forms_trace(const PerfectTripleT<T>& t, const Forms3<T>& b) {
  T out = T(0);
  for (int k = 0; k < 3; ++k) out += dot_g(t.sigma[k], b[k], t.ginv);
  return out;
}

template <typename T>
std::array<T, 3> forms_axial(const PerfectTripleT<T>& t, const Forms3<T>& b) {
  std::array<T, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e) out[i] += T(e) * dot_g(t.sigma[k], b[j], t.ginv);
      }
  return out;
}

template <typename T>
Mat3<T> forms_sym(const PerfectTripleT<T>& t, const Forms3<T>& b) {
  Mat3<T> out{};
  T tr = T(0);
  for (int i = 0; i < 3; ++i) tr += dot_g(t.sigma[i], b[i], t.ginv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const T half = T(1) / T(2);
      out[i][j] = half * (dot_g(t.sigma[j], b[i], t.ginv) + dot_g(t.sigma[i], b[j], t.ginv));
      if (i == j) out[i][j] -= tr / T(3);
    }
  return out;
}

template <typename T>
Mat4<T> forms_cross(const PerfectTripleT<T>& t, const Forms3<T>& b) {
  Mat4<T> y = mat4_zero<T>();
  for (int i = 0; i < 3; ++i) y = mat4_add(y, mat4_mul(t.sigma_ud[i], b[i]));
  return sym_tracefree(y, t.g, t.ginv);
}

// embeddings of the low channels
template <typename T>
Forms3<T> forms_from_matrix(const PerfectTripleT<T>& t, const Mat3<T>& m) {
  Forms3<T> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = mat4_zero<T>();
    for (int j = 0; j < 3; ++j) out[i] = mat4_add(out[i], mat4_scale(t.sigma[j], m[i][j]));
  }
  return out;
}

// (h <> Sigma)^i_{mu nu} = h_mu{}^a Sigma^i_{a nu} - h_nu{}^a Sigma^i_{a mu}
template <typename T>
Forms3<T> forms_diamond(const PerfectTripleT<T>& t, const Mat4<T>& h) {
  const Mat4<T> h_ud = mat4_mul(h, t.ginv);
  Forms3<T> out;
  for (int i = 0; i < 3; ++i) {
    const Mat4<T> x = mat4_mul(h_ud, t.sigma[i]);
    out[i] = mat4_add(x, mat4_scale(mat4_transpose(x), T(-1)));
  }
  return out;
}

// B -> (1/2) eps_{mu nu}{}^{ab} B^i_{ab}  as a fiber map on ETF coordinates
template <typename T>
FiberMat<T> epsdual_matrix(const PerfectTripleT<T>& t);

// B -> Sigma^i_{[mu}{}^a Sigma^j_{nu]}{}^b B^j_{ab}  on ETF coordinates,
// antisymmetrization with weight 1/2
template <typename T>
FiberMat<T> qop_matrix(const PerfectTripleT<T>& t);

// coefficient of dx^0123 in X ^ Y for antisymmetric X, Y
template <typename T>
T wedge_22(const Mat4<T>& x, const Mat4<T>& y) {
  T out = T(0);
  for (const auto& perm : kPerm4) {
    out += T(perm.sign) * x[perm.p[0]][perm.p[1]] * y[perm.p[2]][perm.p[3]];
  }
  return out / T(4);
}

// coefficient of dx^0123 in X ^ a ^ b for antisymmetric X and 1-forms a, b
template <typename T>
T wedge_211(const Mat4<T>& x, const Vec4<T>& a, const Vec4<T>& b) {
  T out = T(0);
  for (const auto& perm : kPerm4) {
    out += T(perm.sign) * x[perm.p[0]][perm.p[1]] * a[perm.p[2]] * b[perm.p[3]];
  }
  return out / T(2);
}

}  // namespace pleb
