#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "pleb/fiber.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// Constant-coefficient first-order operators between fiber spaces,
//
//   (L u)_r = sum_mu C[mu]_{r c} d_mu u_c,
//
// stored as four fiber matrices. Everything downstream — adjoints, symbol
// matrices, compositions, block assembly — is plain linear algebra on the
// C[mu], so identities between operators can be decided exactly when the
// scalar type is exact.
// ---------------------------------------------------------------------------

template <typename T>
struct Stencil {
  std::array<FiberMat<T>, 4> c;

  Stencil() = default;
  Stencil(int rows, int cols) {
    for (auto& m : c) m = FiberMat<T>(rows, cols);
  }

  int rows() const { return c[0].rows(); }
  int cols() const { return c[0].cols(); }
};

using StencilD = Stencil<double>;
using StencilQ = Stencil<RootTwo>;

template <typename T>
Stencil<T> operator+(const Stencil<T>& x, const Stencil<T>& y) {
  Stencil<T> out = x;
  for (int mu = 0; mu < 4; ++mu) out.c[mu] = out.c[mu] + y.c[mu];
  return out;
}

template <typename T>
Stencil<T> operator-(const Stencil<T>& x, const Stencil<T>& y) {
  Stencil<T> out = x;
  for (int mu = 0; mu < 4; ++mu) out.c[mu] = out.c[mu] - y.c[mu];
  return out;
}

template <typename T>
Stencil<T> stencil_scaled(const Stencil<T>& x, const T& s) {
  Stencil<T> out = x;
  for (int mu = 0; mu < 4; ++mu) out.c[mu] = out.c[mu].scaled(s);
  return out;
}

// fiber map composed after / before the derivative part
template <typename T>
Stencil<T> map_after(const FiberMat<T>& m, const Stencil<T>& x) {
  Stencil<T> out;
  for (int mu = 0; mu < 4; ++mu) out.c[mu] = m * x.c[mu];
  return out;
}

template <typename T>
Stencil<T> map_before(const Stencil<T>& x, const FiberMat<T>& m) {
  Stencil<T> out;
  for (int mu = 0; mu < 4; ++mu) out.c[mu] = x.c[mu] * m;
  return out;
}

template <typename T>
bool stencil_is_zero(const Stencil<T>& x) {
  for (int mu = 0; mu < 4; ++mu)
    for (const auto& v : x.c[mu].data())
      if (!fiber_is_zero(v)) return false;
  return true;
}

template <typename T>
bool stencil_equal(const Stencil<T>& x, const Stencil<T>& y) {
  return stencil_is_zero(x - y);
}

inline double stencil_max_abs(const StencilD& x) {
  double m = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (double v : x.c[mu].data()) m = std::max(m, std::fabs(v));
  return m;
}

inline StencilD to_numeric(const StencilQ& x) {
  StencilD out(x.rows(), x.cols());
  for (int mu = 0; mu < 4; ++mu)
    for (int r = 0; r < x.rows(); ++r)
      for (int col = 0; col < x.cols(); ++col) out.c[mu](r, col) = x.c[mu](r, col).to_double();
  return out;
}

inline FiberMatD to_numeric(const FiberMatQ& x) {
  FiberMatD out(x.rows(), x.cols());
  for (int r = 0; r < x.rows(); ++r)
    for (int col = 0; col < x.cols(); ++col) out(r, col) = x(r, col).to_double();
  return out;
}

// symbol matrix: replace d_mu by k_mu (the overall factor of i is dropped;
// ranks, kernels and quadratic contractions are unaffected)
template <typename T>
FiberMat<T> symbol_matrix(const Stencil<T>& x, const std::array<T, 4>& k) {
  FiberMat<T> m(x.rows(), x.cols());
  for (int mu = 0; mu < 4; ++mu) m = m + x.c[mu].scaled(k[mu]);
  return m;
}

// ---------------------------------------------------------------------------
// dense inverse over the scalar field (Gauss-Jordan); used for Gram inverses
// ---------------------------------------------------------------------------

template <typename T>
double scalar_magnitude(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::fabs(v);
  } else {
    return std::fabs(v.to_double());
  }
}

template <typename T>
FiberMat<T> fibermat_inverse(const FiberMat<T>& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("fibermat_inverse: not square");
  FiberMat<T> a = m;
  FiberMat<T> inv = FiberMat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = col; r < n; ++r) {
      if (fiber_is_zero(a(r, col))) continue;
      const double w = scalar_magnitude(a(r, col));
      if (pivot < 0 || w > best) {
        pivot = r;
        best = w;
      }
    }
    if (pivot < 0) throw std::invalid_argument("fibermat_inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const T p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      if (fiber_is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

// formal adjoint with respect to constant Gram forms: integration by parts
// on a closed manifold sends sum C[mu] d_mu to -G_in^{-1} C[mu]^T G_out d_mu
template <typename T>
Stencil<T> stencil_adjoint(const Stencil<T>& x, const FiberMat<T>& gram_in,
                           const FiberMat<T>& gram_out) {
  const FiberMat<T> gi_inv = fibermat_inverse(gram_in);
  Stencil<T> out;
  for (int mu = 0; mu < 4; ++mu)
    out.c[mu] = (gi_inv * x.c[mu].transpose() * gram_out).scaled(T(-1));
  return out;
}

// ---------------------------------------------------------------------------
// symmetric second-order forms: compositions L2 . L1 collect into
// coefficients of d_mu d_nu with mu <= nu (derivatives commute)
// ---------------------------------------------------------------------------

inline int sym_pair_index(int mu, int nu) {
  const int a = mu < nu ? mu : nu;
  const int b = mu < nu ? nu : mu;
  // (0,0)(0,1)(0,2)(0,3)(1,1)(1,2)(1,3)(2,2)(2,3)(3,3)
  static constexpr int base[4] = {0, 4, 7, 9};
  return base[a] + (b - a);
}

template <typename T>
struct SecondOrder {
  std::array<FiberMat<T>, 10> s;

  SecondOrder() = default;
  SecondOrder(int rows, int cols) {
    for (auto& m : s) m = FiberMat<T>(rows, cols);
  }

  int rows() const { return s[0].rows(); }
  int cols() const { return s[0].cols(); }
};

template <typename T>
SecondOrder<T> compose(const Stencil<T>& outer, const Stencil<T>& inner) {
  SecondOrder<T> out(outer.rows(), inner.cols());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const int p = sym_pair_index(mu, nu);
      out.s[p] = out.s[p] + outer.c[mu] * inner.c[nu];
    }
  return out;
}

template <typename T>
SecondOrder<T> operator+(const SecondOrder<T>& x, const SecondOrder<T>& y) {
  SecondOrder<T> out = x;
  for (int p = 0; p < 10; ++p) out.s[p] = out.s[p] + y.s[p];
  return out;
}

template <typename T>
SecondOrder<T> operator-(const SecondOrder<T>& x, const SecondOrder<T>& y) {
  SecondOrder<T> out = x;
  for (int p = 0; p < 10; ++p) out.s[p] = out.s[p] - y.s[p];
  return out;
}

template <typename T>
bool second_order_is_zero(const SecondOrder<T>& x) {
  for (int p = 0; p < 10; ++p)
    for (const auto& v : x.s[p].data())
      if (!fiber_is_zero(v)) return false;
  return true;
}

inline double second_order_max_abs(const SecondOrder<double>& x) {
  double m = 0.0;
  for (int p = 0; p < 10; ++p)
    for (double v : x.s[p].data()) m = std::max(m, std::fabs(v));
  return m;
}

inline SecondOrder<double> to_numeric(const SecondOrder<RootTwo>& x) {
  SecondOrder<double> out(x.rows(), x.cols());
  for (int p = 0; p < 10; ++p)
    for (int r = 0; r < x.rows(); ++r)
      for (int col = 0; col < x.cols(); ++col) out.s[p](r, col) = x.s[p](r, col).to_double();
  return out;
}

// the second-order form of (g^{mu nu} d_mu d_nu) M, i.e. the Laplacian of the
// background metric acting through a fiber map M
template <typename T>
SecondOrder<T> laplacian_form(const Mat4<T>& ginv, const FiberMat<T>& m) {
  SecondOrder<T> out(m.rows(), m.cols());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const T w = mu == nu ? ginv[mu][nu] : ginv[mu][nu] + ginv[nu][mu];
      if (fiber_is_zero(w)) continue;
      out.s[sym_pair_index(mu, nu)] = out.s[sym_pair_index(mu, nu)] + m.scaled(w);
    }
  return out;
}

// ---------------------------------------------------------------------------
// block assembly
// ---------------------------------------------------------------------------

template <typename T>
void fibermat_place(FiberMat<T>& dst, const FiberMat<T>& src, int row_off, int col_off) {
  for (int r = 0; r < src.rows(); ++r)
    for (int c = 0; c < src.cols(); ++c) dst(row_off + r, col_off + c) += src(r, c);
}

template <typename T>
void stencil_place(Stencil<T>& dst, const Stencil<T>& src, int row_off, int col_off) {
  for (int mu = 0; mu < 4; ++mu) fibermat_place(dst.c[mu], src.c[mu], row_off, col_off);
}

}  // namespace pleb
