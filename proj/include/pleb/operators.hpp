#pragma once

#include <array>
#include <cmath>

#include "pleb/coefficients.hpp"
#include "pleb/stencil.hpp"

namespace pleb {

// sqrt(2) in the working scalar type
template <typename T>
T scalar_sqrt2();
template <>
inline double scalar_sqrt2<double>() {
  return std::sqrt(2.0);
}
template <>
inline RootTwo scalar_sqrt2<RootTwo>() {
  return RootTwo::sqrt2();
}

// coefficient structs to plain arrays (builders are scalar-agnostic)
inline std::array<RootTwo, 3> coeff_array(const D1Coeffs& c) { return {c.a1, c.a2, c.a3}; }
inline std::array<RootTwo, 5> coeff_array(const D2Coeffs& c) {
  return {c.b1, c.b2, c.b3, c.b4, c.b5};
}
inline std::array<RootTwo, 2> coeff_array(const D3Coeffs& c) { return {c.c1, c.c2}; }
inline std::array<RootTwo, 3> coeff_array(const AdjD1Coeffs& c) { return {c.a1p, c.a2p, c.a3p}; }
inline std::array<RootTwo, 5> coeff_array(const AdjD2Coeffs& c) {
  return {c.b1p, c.b2p, c.b3p, c.b4p, c.b5p};
}
inline std::array<RootTwo, 2> coeff_array(const AdjD3Coeffs& c) { return {c.c1p, c.c2p}; }

template <std::size_t N>
std::array<double, N> to_numeric(const std::array<RootTwo, N>& a) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i].to_double();
  return out;
}

// ---------------------------------------------------------------------------
// first-order operator family on a perfect-triple background
//
//   d1 xi    = ( a1 d^mu xi_mu,
//                a2 Sg^{i mu nu} d_mu xi_nu,
//                2 a3 d_<mu xi_nu> )                          TM -> S
//   d2 sigma = b1 Sg^i_mu{}^al d_al h + b2 d_mu h^i
//            + b3 eps^{ijk} Sg^j_mu{}^al d_al h^k
//            + b4 Sg^i_mu{}^rho d^sig ht_{rho sig}
//            + b5 Sg^{i rho sig} d_rho ht_{mu sig}            S -> EL1
//   d3 a     = c1 d^mu a^i_mu
//            + c2 eps^{ijk} Sg^{j mu nu} d_mu a^k_nu          EL1 -> E
//
// and the adjoint-shaped family (primed coefficients):
//
//   d1* sigma = a1' d_mu h + a2' Sg^i_mu{}^nu d_nu h^i
//             + a3' d^nu ht_{mu nu}                           S -> TM
//   d2* a     = ( b1' Sg^{i mu nu} d_mu a^i_nu,
//                 b2' d^mu a^i_mu + b3' eps^{ijk} Sg^{j mu nu} d_mu a^k_nu,
//                 2 b4' Sg^i_<mu{}^al d_nu> a^i_al
//               + 2 b5' Sg^i_<mu{}^al d_al a^i_nu> )          EL1 -> S
//   d3* chi   = c1' d_mu chi^i
//             + c2' eps^{ijk} Sg^j_mu{}^al d_al chi^k         E -> EL1
// ---------------------------------------------------------------------------

template <typename T>
Stencil<T> gen_d1(const PerfectTripleT<T>& t, const std::array<T, 3>& a);
template <typename T>
Stencil<T> gen_d2(const PerfectTripleT<T>& t, const std::array<T, 5>& b);
template <typename T>
Stencil<T> gen_d3(const PerfectTripleT<T>& t, const std::array<T, 2>& c);
template <typename T>
Stencil<T> gen_d1_adj(const PerfectTripleT<T>& t, const std::array<T, 3>& ap);
template <typename T>
Stencil<T> gen_d2_adj(const PerfectTripleT<T>& t, const std::array<T, 5>& bp);
template <typename T>
Stencil<T> gen_d3_adj(const PerfectTripleT<T>& t, const std::array<T, 2>& cp);

// the E <-> TM bridge of the twisted block: f Sg^i_mu{}^al d_al chi^i and
// its formal adjoint f' Sg^{i mu nu} d_mu xi_nu
template <typename T>
Stencil<T> sigma_grad(const PerfectTripleT<T>& t, const T& f);
template <typename T>
Stencil<T> sigma_curl(const PerfectTripleT<T>& t, const T& fp);

// exterior derivative of E-valued 1-forms: B^i_{mu nu} = d_mu a^i_nu - d_nu a^i_mu
template <typename T>
Stencil<T> ext_d(const PerfectTripleT<T>& t);

// F^i_mu = eps_mu{}^{al be ga} d_al sigma^i_{be ga} on E-valued 2-forms
template <typename T>
Stencil<T> eps_curl(const PerfectTripleT<T>& t);

// d2 realized through its defining formula (1/2) J1^{-1} eps_curl on the
// embedded image of S; must agree with gen_d2 at the canonical coefficients
template <typename T>
Stencil<T> d2_via_definition(const PerfectTripleT<T>& t);

// symmetric tensor Sg^i_(mu{}^al (d_nu) a^i_al - d_al a^i_nu)), flattened to
// the 16 entries of a 4x4 matrix (row-major); the left-hand side of the
// linearized field equations for the connection perturbation
template <typename T>
Stencil<T> einstein_tensor_op(const PerfectTripleT<T>& t);

// fiber map sending s = (h, h^i, ht) to the 16 row-major entries of the
// symmetric tensor  wh * h * g_{mu nu} + wht * ht_{mu nu}
template <typename T>
FiberMat<T> s_tensor_matrix(const PerfectTripleT<T>& t, const T& wh, const T& wht);

// plain gradients: scalar -> TM and E -> EL1
template <typename T>
Stencil<T> grad_scalar(const PerfectTripleT<T>& t);
template <typename T>
Stencil<T> grad_e(const PerfectTripleT<T>& t);

// (dt ht)^i_mu = Sg^i_mu{}^al d^be ht_{al be} - Sg^{i al be} d_al ht_{mu be}
// on tracefree symmetric tensors (9 coordinates)
template <typename T>
Stencil<T> dtilde_ht(const PerfectTripleT<T>& t);

// the split-off blocks: D4 on (h, h+) and D12 on (h-, ht)
//   D4  = -(1/sqrt2) (d_mu h - 2 Sg^i_mu{}^al d_al h+^i)      4  -> TM
//   D12 = d_mu h-^i + (dt ht)^i_mu                            12 -> EL1
template <typename T>
Stencil<T> split_d4(const PerfectTripleT<T>& t);
template <typename T>
Stencil<T> split_d12(const PerfectTripleT<T>& t);

}  // namespace pleb
