#pragma once

#include "pleb/operators.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// First-order square roots of the Laplacian assembled from the elliptic
// complex.  Everything here is exact over Q(sqrt2) on a perfect-triple
// background; the numeric modules convert with to_numeric when needed.
//
// Source fiber SE = (h, h^i, ht | chi), target fiber TA = (xi | a^i_mu).
// The inner products are the j-weighted ones: beta = (1/4, 8, 1) on SE's
// first 13 slots, identity on chi, plain on xi, and -J1 on a.
// ---------------------------------------------------------------------------

struct TwistedBlocks {
  TwistedConstants k;  // the coefficient solution the blocks are built from
  InnerProducts ip;    // inner products the adjoints refer to

  StencilQ d1t;      // TM -> S
  StencilQ d1t_adj;  // S -> TM
  StencilQ d2;       // S -> EL1 (canonical second operator)
  StencilQ d2_adj;   // EL1 -> S
  StencilQ d3t;      // EL1 -> E
  StencilQ d3t_adj;  // E -> EL1
  StencilQ d4;       // E -> TM
  StencilQ d4_adj;   // TM -> E

  StencilQ block;      // SE -> TA: (d1t* sigma + d4 chi, d2 sigma + d3t* chi)
  StencilQ block_adj;  // TA -> SE: (d1t xi + d2* a | d4* xi + d3t a)
  FiberMatQ mass;      // 16x16 channel matrix M with block_adj . block = -Lap M
};

TwistedBlocks twisted_blocks(const PerfectTripleQ& t);

// the first-guess pairing D(sigma, chi) = (d1* sigma, d2 sigma + d3* chi)
// with all adjoints taken in the j-weighted inner products; its square is
// deliberately kept around as the operator that fails the Laplacian test
struct NaiveBlocks {
  StencilQ block;      // SE -> TA
  StencilQ block_adj;  // TA -> SE, Gram transpose of block
};

NaiveBlocks naive_blocks(const PerfectTripleQ& t);

// ---------------------------------------------------------------------------
// Decoupling transform: invertible fiber maps T1 on the source and T2 on the
// target such that T2 . block . T1 is block diagonal, a 4-channel piece on
// (h, h+) and a 12-channel piece on (h-, ht), with
//   h+^i = 2 h^i + chi^i / sqrt2,   h-^i = 2 h^i - chi^i / sqrt2.
// ---------------------------------------------------------------------------

struct SplitBlocks {
  FiberMatQ t1;          // 16x16, SPLIT coords -> SE coords
  FiberMatQ t2;          // 16x16 map on TA
  FiberMatQ t2_inverse;  // closed-form inverse of t2
  FiberMatQ core;        // diag(-1/2 I4, I12): quadratic form making t2 a congruence
  StencilQ d4;           // 4 -> TM   block on (h, h+)
  StencilQ d12;          // 12 -> EL1 block on (h-, ht)
  StencilQ block;        // d4 (+) d12 as one SPLIT -> TA stencil
};

SplitBlocks split_blocks(const PerfectTripleQ& t);

}  // namespace pleb
