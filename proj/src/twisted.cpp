#include "pleb/twisted.hpp"

#include "pleb/fiber.hpp"

namespace pleb {

TwistedBlocks twisted_blocks(const PerfectTripleQ& t) {
  TwistedBlocks out;
  out.k = twisted_constants();
  out.ip = inner_products_j();

  const auto b = d2_canonical();
  const auto bp = adjoint_d2(b, out.ip);

  out.d1t = gen_d1(t, coeff_array(out.k.d1t));
  out.d1t_adj = gen_d1_adj(t, coeff_array(out.k.d1t_adj));
  out.d2 = gen_d2(t, coeff_array(b));
  out.d2_adj = gen_d2_adj(t, coeff_array(bp));
  out.d3t = gen_d3(t, coeff_array(out.k.d3t));
  out.d3t_adj = gen_d3_adj(t, coeff_array(out.k.d3t_adj));
  out.d4 = sigma_grad(t, out.k.f);
  out.d4_adj = sigma_curl(t, out.k.fp);

  out.block = StencilQ(16, 16);
  stencil_place(out.block, out.d1t_adj, 0, 0);
  stencil_place(out.block, out.d4, 0, 13);
  stencil_place(out.block, out.d2, 4, 0);
  stencil_place(out.block, out.d3t_adj, 4, 13);

  out.block_adj = StencilQ(16, 16);
  stencil_place(out.block_adj, out.d1t, 0, 0);
  stencil_place(out.block_adj, out.d2_adj, 0, 4);
  stencil_place(out.block_adj, out.d4_adj, 13, 0);
  stencil_place(out.block_adj, out.d3t, 13, 4);

  out.mass = FiberMatQ(16, 16);
  out.mass(0, 0) = RootTwo(-1);
  for (int m = 0; m < 9; ++m) out.mass(4 + m, 4 + m) = RootTwo(1);
  for (int i = 0; i < 3; ++i) {
    out.mass(1 + i, 13 + i) = out.k.m_hi_chi;
    out.mass(13 + i, 1 + i) = out.k.m_chi_hi;
  }
  return out;
}

NaiveBlocks naive_blocks(const PerfectTripleQ& t) {
  const auto ip = inner_products_j();
  const auto a = d1_canonical();
  const auto b = d2_canonical();
  const auto c = d3_canonical();

  NaiveBlocks out;
  out.block = StencilQ(16, 16);
  stencil_place(out.block, gen_d1_adj(t, coeff_array(adjoint_d1(a, ip))), 0, 0);
  stencil_place(out.block, gen_d2(t, coeff_array(b)), 4, 0);
  stencil_place(out.block, gen_d3_adj(t, coeff_array(adjoint_d3(c, ip))), 4, 13);

  const FiberMatQ gin = gram_se(ip.beta1, ip.beta2, ip.beta3);
  const FiberMatQ gout = gram_ta(t, ip.gamma1, ip.gamma2);
  out.block_adj = stencil_adjoint(out.block, gin, gout);
  return out;
}

SplitBlocks split_blocks(const PerfectTripleQ& t) {
  const RootTwo half = RootTwo(Rational(1, 2));
  const RootTwo quarter = RootTwo(Rational(1, 4));
  const RootTwo s2 = RootTwo::sqrt2();
  const RootTwo is2 = RootTwo::inv_sqrt2();

  SplitBlocks out;

  out.t1 = FiberMatQ(16, 16);
  out.t1(0, 0) = RootTwo(1);
  for (int i = 0; i < 3; ++i) {
    out.t1(1 + i, 1 + i) = quarter;
    out.t1(1 + i, 4 + i) = quarter;
    out.t1(13 + i, 1 + i) = is2;
    out.t1(13 + i, 4 + i) = -is2;
  }
  for (int m = 0; m < 9; ++m) out.t1(4 + m, 7 + m) = RootTwo(1);

  const FiberMatQ phi = phi_matrix(t);
  const FiberMatQ phi_star = phi_star_matrix(t, RootTwo(0), RootTwo(1));
  const FiberMatQ j1 = j1_matrix(t);

  out.t2 = FiberMatQ(16, 16);
  for (int r = 0; r < 4; ++r) out.t2(r, r) = RootTwo(1);
  for (int r = 0; r < 12; ++r) out.t2(4 + r, 4 + r) = RootTwo(1);
  fibermat_place(out.t2, phi.scaled(s2), 0, 4);
  fibermat_place(out.t2, phi_star.scaled(-s2), 4, 0);

  // closed form of t2^{-1}; follows from Phi Phi* = -(3/2) I,
  // Phi* Phi = -(I + J1)/2 and J1 Phi* = 2 Phi*
  out.t2_inverse = FiberMatQ(16, 16);
  for (int r = 0; r < 4; ++r) out.t2_inverse(r, r) = -half;
  fibermat_place(out.t2_inverse, phi.scaled(is2), 0, 4);
  fibermat_place(out.t2_inverse, phi_star.scaled(-is2), 4, 0);
  {
    FiberMatQ lower = j1.scaled(RootTwo(-1));
    for (int r = 0; r < 12; ++r) lower(r, r) += RootTwo(1);
    fibermat_place(out.t2_inverse, lower.scaled(half), 4, 4);
  }

  out.core = FiberMatQ(16, 16);
  for (int r = 0; r < 4; ++r) out.core(r, r) = -half;
  for (int r = 0; r < 12; ++r) out.core(4 + r, 4 + r) = RootTwo(1);

  out.d4 = split_d4(t);
  out.d12 = split_d12(t);
  out.block = StencilQ(16, 16);
  stencil_place(out.block, out.d4, 0, 0);
  stencil_place(out.block, out.d12, 4, 4);
  return out;
}

}  // namespace pleb
