#include "pleb/kernels.hpp"

#include <vector>

namespace pleb {
namespace kernels {

namespace detail {

double pairwise_combine(const double* sums, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return sums[0];
  const std::size_t mid = n / 2;
  return pairwise_combine(sums, mid) + pairwise_combine(sums + mid, n - mid);
}

double dot_block8_scalar(const double* x, const double* y) {
  const double s01 = x[0] * y[0] + x[1] * y[1];
  const double s23 = x[2] * y[2] + x[3] * y[3];
  const double s45 = x[4] * y[4] + x[5] * y[5];
  const double s67 = x[6] * y[6] + x[7] * y[7];
  return (s01 + s23) + (s45 + s67);
}

}  // namespace detail

namespace {

void axpy_scalar(double* dst, const double* src, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  const std::size_t nb = n / 8;
  std::vector<double> sums(nb);
  for (std::size_t b = 0; b < nb; ++b) sums[b] = detail::dot_block8_scalar(x + 8 * b, y + 8 * b);
  double total = detail::pairwise_combine(sums.data(), nb);
  for (std::size_t i = 8 * nb; i < n; ++i) total += x[i] * y[i];
  return total;
}

void scale_ik_scalar(double* z, double k, std::size_t n_complex) {
  for (std::size_t j = 0; j < n_complex; ++j) {
    const double re = z[2 * j];
    const double im = z[2 * j + 1];
    z[2 * j] = -k * im;
    z[2 * j + 1] = k * re;
  }
}

const Ops kScalarOps = {axpy_scalar, dot_scalar, scale_ik_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const Ops& active_ops() {
  static const Ops& ops = avx2_supported() ? avx2_ops : kScalarOps;
  return ops;
}

const std::string& active_name() {
  static const std::string name = avx2_supported() ? "avx2" : "scalar";
  return name;
}

}  // namespace kernels
}  // namespace pleb
