#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pleb/exact.hpp"

namespace pleb {

// Coefficient sets for the one-parameter families of first-order operators
//
//   d1 xi    = ( a1 d.xi, a2 Sigma d xi, 2 a3 d<mu xi nu> )
//   d2 sigma = b1 Sg dh + b2 dh^i + b3 eps Sg dh^k + b4 Sg d.ht + b5 Sg dht
//   d3 a     = c1 d.a + c2 eps Sg da
//
// and their formal adjoints (primed). All arithmetic is exact over Q(sqrt2).

struct D1Coeffs {
  RootTwo a1, a2, a3;
};

struct D2Coeffs {
  RootTwo b1, b2, b3, b4, b5;
};

struct D3Coeffs {
  RootTwo c1, c2;
};

struct AdjD1Coeffs {
  RootTwo a1p, a2p, a3p;
};

struct AdjD2Coeffs {
  RootTwo b1p, b2p, b3p, b4p, b5p;
};

struct AdjD3Coeffs {
  RootTwo c1p, c2p;
};

// inner products: beta on the three irreducible pieces of S, gamma on the
// two invariant pairings of E x Lambda^1 (gamma1 |a|^2 - gamma2 a.J1 a)
struct InnerProducts {
  RootTwo beta1, beta2, beta3;
  RootTwo gamma1, gamma2;
};

// the canonical complex: a = (1, 1/4, 1/2), b = (1/4, 2, 0, 0, -1), c = (0, 1)
D1Coeffs d1_canonical();
D2Coeffs d2_canonical();
D3Coeffs d3_canonical();

// the two distinguished inner-product choices: both have
// beta = (1/4, 8, 1); "J" uses gamma = (0, 1), "plain" uses gamma = (1, 0)
InnerProducts inner_products_j();
InnerProducts inner_products_plain();

// Solve the complex conditions d2 d1 = 0, d3 d2 = 0 for b2..b5 given
// (a, c, b1). Requires a2 != 0, a3 != 0, c1 != c2.
D2Coeffs solve_b(const D1Coeffs& a, const D3Coeffs& c, const RootTwo& b1);

// The five scalar conditions equivalent to d2 d1 = 0 (three) and
// d3 d2 = 0 (two); all must vanish for a complex.
std::array<RootTwo, 5> composition_conditions(const D1Coeffs& a, const D2Coeffs& b,
                                              const D3Coeffs& c);

// adjoint coefficients determined by the inner products
AdjD1Coeffs adjoint_d1(const D1Coeffs& a, const InnerProducts& ip);
AdjD2Coeffs adjoint_d2(const D2Coeffs& b, const InnerProducts& ip);
// requires gamma1 (gamma1 - gamma2) - 2 gamma2^2 != 0
AdjD3Coeffs adjoint_d3(const D3Coeffs& c, const InnerProducts& ip);

// the five conditions equivalent to d1* d2* = 0 (three) and d2* d3* = 0 (two)
std::array<RootTwo, 5> adjoint_composition_conditions(const AdjD1Coeffs& ap,
                                                      const AdjD2Coeffs& bp,
                                                      const AdjD3Coeffs& cp);

// The five obstructions to D*D being a multiple of the Laplacian, where
// D(sigma,chi) = (d1* sigma, d2 sigma + d3* chi):
//   -6 b1 b4' - 2 b1 b5' + 2 a3 a1'
//    2 b2 b4' + 4 b3 b4' + 2 b2 b5' + 2 a3 a2'
//   -6 b4 b4' - 2 b5 b4' - 2 b4 b5' + 2 b5 b5' + 2 a3 a3'
//      b4 b2' +   b5 b2' + 2 b4 b3' +   a2 a3'
//   -3 b4 b1' -   b5 b1' +   a1 a3'
std::array<RootTwo, 5> laplace_conditions(const D1Coeffs& a, const D2Coeffs& b,
                                          const AdjD1Coeffs& ap, const AdjD2Coeffs& bp);

// When the conditions above hold, D*D = Delta times a diagonal fiber map;
// these are the four channel multipliers (h, h^i, htilde, chi).
struct LaplaceMultipliers {
  RootTwo h, hi, ht, chi;
};

LaplaceMultipliers laplace_multipliers(const D1Coeffs& a, const D2Coeffs& b,
                                       const D3Coeffs& c, const AdjD1Coeffs& ap,
                                       const AdjD2Coeffs& bp, const AdjD3Coeffs& cp);

// Solutions of the Laplace conditions for the canonical operators, viewed
// as equations on the inner products. The solution set is the two-parameter
// family below; it collapses to gamma2 = 0 (the "plain" choice, up to
// scale) once the trace weight is pinned to beta1 = beta3 / 4.
struct InnerProductFamily {
  // gamma1 - 2 gamma2 = 4 beta1 beta3,
  // beta2 beta3 = 8 gamma1,
  // gamma1 + 2 gamma2 = beta3^2
  InnerProducts at(const RootTwo& beta1, const RootTwo& beta3) const;
  std::array<RootTwo, 3> residuals(const InnerProducts& ip) const;
};

InnerProductFamily laplace_inner_product_family();

// Twisted-block constants: with the canonical d2/d2* kept fixed, the
// Laplace conditions force d1-tilde into the one-parameter family
//   a = (-2 a3, 0, a3), a' = (1/(4 a3), 0, -1/a3), f' = -c1 a3,
// and self-adjointness under the J inner products pins a3 = 1/sqrt2.
// Requiring the residual (h^i, chi) mixing matrix to square to the
// identity then fixes c = (sqrt2, 1/sqrt2).
struct TwistedConstants {
  RootTwo a3;            // 1/sqrt2
  D1Coeffs d1t;          // (-sqrt2, 0, 1/sqrt2)
  AdjD1Coeffs d1t_adj;   // (sqrt2/4, 0, -sqrt2)
  D3Coeffs d3t;          // (sqrt2, 1/sqrt2)
  AdjD3Coeffs d3t_adj;   // (0, 1/sqrt2)
  RootTwo f;             // -1, the E -> Lambda^1 block
  RootTwo fp;            // -1, its adjoint
  // mixing of (h^i, chi) in D~* D~ = -Delta M: off-diagonal entries
  RootTwo m_hi_chi;      // -c1 / 4
  RootTwo m_chi_hi;      // -2 c1
};

TwistedConstants twisted_constants();

}  // namespace pleb
