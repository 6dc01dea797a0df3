#include "pleb/coefficients.hpp"

#include <stdexcept>

namespace pleb {

namespace {
const Rational kHalf(1, 2);
}  // namespace

D1Coeffs d1_canonical() { return {RootTwo(1), RootTwo(Rational(1, 4)), RootTwo(Rational(1, 2))}; }

D2Coeffs d2_canonical() {
  return {RootTwo(Rational(1, 4)), RootTwo(2), RootTwo(0), RootTwo(0), RootTwo(-1)};
}

D3Coeffs d3_canonical() { return {RootTwo(0), RootTwo(1)}; }

InnerProducts inner_products_j() {
  return {RootTwo(Rational(1, 4)), RootTwo(8), RootTwo(1), RootTwo(0), RootTwo(1)};
}

InnerProducts inner_products_plain() {
  return {RootTwo(Rational(1, 4)), RootTwo(8), RootTwo(1), RootTwo(1), RootTwo(0)};
}

D2Coeffs solve_b(const D1Coeffs& a, const D3Coeffs& c, const RootTwo& b1) {
  if (a.a2.is_zero() || a.a3.is_zero()) {
    throw std::invalid_argument("solve_b: a2 and a3 must be nonzero");
  }
  const RootTwo dc = c.c1 - c.c2;
  if (dc.is_zero()) {
    throw std::invalid_argument("solve_b: requires c1 != c2");
  }
  const RootTwo t = a.a1 * b1 / dc;
  D2Coeffs b;
  b.b1 = b1;
  b.b2 = -RootTwo(2) * t * c.c2 / a.a2;
  b.b3 = t * c.c1 / a.a2;
  b.b4 = -t * c.c1 / a.a3;
  b.b5 = t * (c.c1 + RootTwo(2) * c.c2) / a.a3;
  return b;
}

std::array<RootTwo, 5> composition_conditions(const D1Coeffs& a, const D2Coeffs& b,
                                              const D3Coeffs& c) {
  const RootTwo half(kHalf);
  std::array<RootTwo, 5> r;
  // d2 d1 = 0, one condition per channel of the intermediate field
  r[0] = b.b1 * a.a1 + b.b4 * a.a3 - b.b3 * a.a2 + half * (b.b5 * a.a3 - b.b4 * a.a3);
  r[1] = b.b2 * a.a2 + b.b5 * a.a3 - b.b3 * a.a2;
  r[2] = b.b4 * a.a3 + b.b3 * a.a2;
  // d3 d2 = 0
  r[3] = c.c1 * b.b2 + RootTwo(2) * c.c2 * b.b3;
  r[4] = c.c1 * b.b4 + c.c1 * b.b5 + RootTwo(2) * c.c2 * b.b4;
  return r;
}

AdjD1Coeffs adjoint_d1(const D1Coeffs& a, const InnerProducts& ip) {
  return {-ip.beta1 * a.a1, ip.beta2 * a.a2, -RootTwo(2) * ip.beta3 * a.a3};
}

AdjD2Coeffs adjoint_d2(const D2Coeffs& b, const InnerProducts& ip) {
  const RootTwo g1 = ip.gamma1, g2 = ip.gamma2;
  AdjD2Coeffs bp;
  bp.b1p = b.b1 * (g1 - RootTwo(2) * g2) / ip.beta1;
  bp.b2p = -(g1 * b.b2 - RootTwo(2) * g2 * b.b3) / ip.beta2;
  bp.b3p = -(g1 * b.b3 - g2 * b.b2 - g2 * b.b3) / ip.beta2;
  bp.b4p = (g1 * b.b4 - RootTwo(2) * g2 * b.b4 - g2 * b.b5) / (RootTwo(2) * ip.beta3);
  bp.b5p = (g1 + g2) * b.b5 / (RootTwo(2) * ip.beta3);
  return bp;
}

AdjD3Coeffs adjoint_d3(const D3Coeffs& c, const InnerProducts& ip) {
  const RootTwo g1 = ip.gamma1, g2 = ip.gamma2;
  // invert the 2x2 pairing [[g1, -2 g2], [-g2, g1 - g2]]
  const RootTwo det = g1 * (g1 - g2) - RootTwo(2) * g2 * g2;
  if (det.is_zero()) {
    throw std::invalid_argument("adjoint_d3: degenerate inner product on E x Lambda^1");
  }
  AdjD3Coeffs cp;
  cp.c1p = -((g1 - g2) * c.c1 + RootTwo(2) * g2 * c.c2) / det;
  cp.c2p = -(g2 * c.c1 + g1 * c.c2) / det;
  return cp;
}

std::array<RootTwo, 5> adjoint_composition_conditions(const AdjD1Coeffs& ap,
                                                      const AdjD2Coeffs& bp,
                                                      const AdjD3Coeffs& cp) {
  const RootTwo half(kHalf);
  std::array<RootTwo, 5> r;
  // d2* d3* = 0
  r[0] = bp.b2p * cp.c1p + RootTwo(2) * bp.b3p * cp.c2p;
  r[1] = bp.b4p * cp.c1p + RootTwo(2) * bp.b4p * cp.c2p + bp.b5p * cp.c1p;
  // d1* d2* = 0
  r[2] = ap.a1p * bp.b1p + ap.a3p * bp.b4p - ap.a2p * bp.b3p -
         ap.a3p * half * (bp.b4p - bp.b5p);
  r[3] = ap.a2p * bp.b2p + ap.a3p * bp.b5p - ap.a2p * bp.b3p;
  r[4] = ap.a2p * bp.b3p + ap.a3p * bp.b4p;
  return r;
}

std::array<RootTwo, 5> laplace_conditions(const D1Coeffs& a, const D2Coeffs& b,
                                          const AdjD1Coeffs& ap, const AdjD2Coeffs& bp) {
  const RootTwo two(2), four(4), six(6), three(3);
  std::array<RootTwo, 5> r;
  r[0] = -six * b.b1 * bp.b4p - two * b.b1 * bp.b5p + two * a.a3 * ap.a1p;
  r[1] = two * b.b2 * bp.b4p + four * b.b3 * bp.b4p + two * b.b2 * bp.b5p +
         two * a.a3 * ap.a2p;
  r[2] = -six * b.b4 * bp.b4p - two * b.b5 * bp.b4p - two * b.b4 * bp.b5p +
         two * b.b5 * bp.b5p + two * a.a3 * ap.a3p;
  r[3] = b.b4 * bp.b2p + b.b5 * bp.b2p + two * b.b4 * bp.b3p + a.a2 * ap.a3p;
  r[4] = -three * b.b4 * bp.b1p - b.b5 * bp.b1p + a.a1 * ap.a3p;
  return r;
}

LaplaceMultipliers laplace_multipliers(const D1Coeffs& a, const D2Coeffs& b,
                                       const D3Coeffs& c, const AdjD1Coeffs& ap,
                                       const AdjD2Coeffs& bp, const AdjD3Coeffs& cp) {
  LaplaceMultipliers m;
  m.h = -RootTwo(3) * b.b1 * bp.b1p + a.a1 * ap.a1p;
  m.hi = b.b2 * bp.b2p + RootTwo(2) * b.b3 * bp.b3p - a.a2 * ap.a2p;
  m.ht = -RootTwo(2) * b.b5 * bp.b5p;
  m.chi = c.c1 * cp.c1p + RootTwo(2) * c.c2 * cp.c2p;
  return m;
}

InnerProducts InnerProductFamily::at(const RootTwo& beta1, const RootTwo& beta3) const {
  InnerProducts ip;
  ip.beta1 = beta1;
  ip.beta3 = beta3;
  ip.beta2 = RootTwo(4) * beta3 + RootTwo(16) * beta1;
  ip.gamma1 = (beta3 * beta3 + RootTwo(4) * beta1 * beta3) / RootTwo(2);
  ip.gamma2 = (beta3 * beta3 - RootTwo(4) * beta1 * beta3) / RootTwo(4);
  return ip;
}

std::array<RootTwo, 3> InnerProductFamily::residuals(const InnerProducts& ip) const {
  std::array<RootTwo, 3> r;
  r[0] = ip.gamma1 - RootTwo(2) * ip.gamma2 - RootTwo(4) * ip.beta1 * ip.beta3;
  r[1] = ip.beta2 * ip.beta3 - RootTwo(8) * ip.gamma1;
  r[2] = ip.gamma1 + RootTwo(2) * ip.gamma2 - ip.beta3 * ip.beta3;
  return r;
}

InnerProductFamily laplace_inner_product_family() { return {}; }

TwistedConstants twisted_constants() {
  TwistedConstants t;
  t.a3 = RootTwo::inv_sqrt2();
  t.d1t = {-RootTwo(2) * t.a3, RootTwo(0), t.a3};
  t.d1t_adj = {RootTwo(1) / (RootTwo(4) * t.a3), RootTwo(0), -RootTwo(1) / t.a3};
  t.d3t = {RootTwo::sqrt2(), RootTwo::inv_sqrt2()};
  t.d3t_adj = adjoint_d3(t.d3t, inner_products_j());
  t.fp = -t.d3t.c1 * t.a3;
  t.f = -RootTwo::sqrt2() * t.d3t_adj.c2p;
  t.m_hi_chi = -t.d3t.c1 / RootTwo(4);
  t.m_chi_hi = -RootTwo(2) * t.d3t.c1;
  return t;
}

}  // namespace pleb
