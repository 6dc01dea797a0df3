#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pleb/stencil.hpp"
#include "pleb/triple.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// Pointwise symbol analysis of the three-operator sequence
//
//   TM --d1--> S --d2--> EL1 --d3--> E
//
// at a nonzero covector k: ranks, kernel dimensions, and the principal
// angles between image(sigma(d_i)) and kernel(sigma(d_{i+1})).  The sequence
// is exact at a generic k iff the ranks are (4, 9, 3), the interior kernels
// have dimensions (4, 9) matching the incoming ranks, and every principal
// angle vanishes.
// ---------------------------------------------------------------------------

struct SymbolReport {
  std::array<double, 4> k{};
  std::array<int, 3> ranks{};        // rank sigma(d1), sigma(d2), sigma(d3)
  std::array<int, 2> kernel_dims{};  // dim ker sigma(d2), dim ker sigma(d3)
  double max_principal_angle = 0.0;  // across both interior junctions
  double gap_ratio = 0.0;            // min over the three operators of
                                     // (smallest kept) / (largest dropped) singular value
  bool dims_balance = false;         // 4 - 13 + 12 - 3 == 0
  bool pass = false;

  std::string to_json() const;
};

SymbolReport symbol_report(const PerfectTriple& t, const std::array<double, 4>& k,
                           double angle_tol, double min_gap);

struct SymbolSweep {
  int samples = 0;
  int rank_failures = 0;
  double worst_angle = 0.0;
  double min_gap = 0.0;  // smallest gap ratio seen
  bool pass = false;
};

// samples random covectors with unit-normal components (rejecting near-zero k)
SymbolSweep symbol_sweep(const PerfectTriple& t, int samples, std::uint64_t seed,
                         double angle_tol, double min_gap);

// the k-adapted frame e^i_mu = -Sigma^i_mu{}^nu khat_nu and the residual of
// the reconstruction Sigma^i_{mu nu} = khat_mu e^i_nu - khat_nu e^i_mu
//                                      - eps^{ijk} e^j_mu e^k_nu.
// If axes is non-null it receives e^i_mu (rows i, columns mu).
double frame_reconstruction_residual(const PerfectTriple& t, const std::array<double, 4>& k,
                                     std::array<std::array<double, 4>, 3>* axes = nullptr);

// signature (positives, negatives) of a symmetric fiber matrix
std::pair<int, int> fibermat_signature(const FiberMatD& m, double tol = 1e-9);

}  // namespace pleb
