#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pleb/stencil.hpp"

namespace pleb {

// ---------------------------------------------------------------------------
// Periodic N^4 grid on [0, 2pi)^4 with fiber-valued double fields.
// Storage is component-major: data[f * volume + site] with sites row-major
// (site = ((i0 n + i1) n + i2) n + i3).  Derivatives are spectral (FFTW r2c /
// c2r with integer wavenumbers; the Nyquist slot is zeroed so d_mu stays
// skew-adjoint).  All reductions go through the pairwise kernels, so results
// are reproducible run to run and independent of the thread count.
// ---------------------------------------------------------------------------

struct Field {
  int n = 0;
  int fiber = 0;
  std::vector<double> data;

  Field() = default;
  Field(int fiber_, int n_);

  std::size_t volume() const { return static_cast<std::size_t>(n) * n * n * n; }
  double* comp(int f) { return data.data() + static_cast<std::size_t>(f) * volume(); }
  const double* comp(int f) const { return data.data() + static_cast<std::size_t>(f) * volume(); }
};

double cell_volume(int n);  // (2pi/n)^4

// Gaussian random field, band-limited to modes with every |k_mu| <= band and
// |k_mu| < n/2, normalized to unit variance per component.  Deterministic in
// (fiber, n, seed, band).
Field random_field(int fiber, int n, std::uint64_t seed, int band = 2);

Field derivative(const Field& u, int mu, int threads = 1);
Field laplacian(const Field& u, int threads = 1);

Field apply_stencil(const StencilD& op, const Field& u, int threads = 1);
Field apply_fibermat(const FiberMatD& m, const Field& u);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field scaled(const Field& a, double c);

// integral over the box of u^T G v (Riemann sum, exact for band-limited fields)
double inner(const Field& u, const Field& v, const FiberMatD& gram);
// integral of sum_f u_f^2
double norm2_plain(const Field& u);
double max_abs(const Field& u);
// max over components of |mean over sites|
double max_component_mean(const Field& u);

// max over `trials` random pairs of
//   |<v, op u>_out - <op_adj v, u>_in| / (|u| |v|)
// with plain L2 norms in the denominator
double adjoint_pair_residual(const StencilD& op, const StencilD& op_adj, const FiberMatD& gram_in,
                             const FiberMatD& gram_out, int n, int trials, std::uint64_t seed,
                             int threads = 1);

// least-squares fit of adj(fwd(u)) against -Lap(M u) channel by channel over
// random fields; returns the fitted M and the relative residual left after
// the fit.  A residual near zero certifies the square is a Laplacian times a
// fiber map; a large one certifies it is not.
struct LaplaceFit {
  FiberMatD m;
  double residual = 0.0;
};

LaplaceFit laplace_fit(const StencilD& fwd, const StencilD& adj, int n, int trials,
                       std::uint64_t seed, int threads = 1);

// binary snapshot: 16-byte header (magic "PLBK", u32 version, u32 n,
// u32 fiber), then little-endian float64 in site-major, fiber-fastest order
void write_field(const std::string& path, const Field& u);
Field read_field(const std::string& path);

// compares apply_stencil against the exact symbol action on single plane
// waves, sweeping every fully resolved mode (all |k_mu| < n/2) with random
// fiber amplitudes; returns the worst absolute error
double symbol_crosscheck(const StencilD& op, int n, std::uint64_t seed, int threads = 1);

}  // namespace pleb
