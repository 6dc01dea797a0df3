#pragma once

#include <cstddef>
#include <string>

namespace pleb {
namespace kernels {

// Inner-loop primitives used by the lattice module.  Each has a scalar
// reference implementation and an AVX2 variant; the active set is chosen once
// at startup.  Both variants follow the same fixed reduction tree (8-element
// blocks summed pairwise, block sums combined pairwise), and the AVX2 code
// uses unfused multiply/add, so results are bit-for-bit identical across
// variants and reproducible run to run.

struct Ops {
  // dst[i] += c * src[i]
  void (*axpy)(double* dst, const double* src, double c, std::size_t n);
  // pairwise-reduced sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // interleaved complex buffer z[i] -> i * k * z[i] (spectral derivative twist)
  void (*scale_ik)(double* z, double k, std::size_t n_complex);
};

const Ops& scalar_ops();
const Ops& active_ops();
// name of the active variant ("scalar" or "avx2")
const std::string& active_name();

// exposed for the equivalence tests
extern const Ops avx2_ops;
bool avx2_supported();

namespace detail {
// canonical reduction tree shared by all dot variants
double pairwise_combine(const double* sums, std::size_t n);
double dot_block8_scalar(const double* x, const double* y);
}  // namespace detail

}  // namespace kernels
}  // namespace pleb
