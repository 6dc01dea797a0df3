#include <immintrin.h>

#include <vector>

#include "pleb/kernels.hpp"

namespace pleb {
namespace kernels {

namespace {

// unfused multiply/add so the rounding matches the scalar reference exactly
void axpy_avx2(double* dst, const double* src, double c, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(src + i);
    const __m256d d = _mm256_loadu_pd(dst + i);
    _mm256_storeu_pd(dst + i, _mm256_add_pd(d, _mm256_mul_pd(vc, s)));
  }
  for (; i < n; ++i) dst[i] += c * src[i];
}

// one 8-element block with the same association tree as the scalar reference:
// ((x0y0+x1y1) + (x2y2+x3y3)) + ((x4y4+x5y5) + (x6y6+x7y7))
double dot_block8_avx2(const double* x, const double* y) {
  const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(x), _mm256_loadu_pd(y));
  const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(x + 4), _mm256_loadu_pd(y + 4));
  // hadd keeps 128-bit lanes: [p0_0+p0_1, p1_0+p1_1, p0_2+p0_3, p1_2+p1_3]
  const __m256d h = _mm256_hadd_pd(p0, p1);
  const __m128d lo = _mm256_castpd256_pd128(h);
  const __m128d hi = _mm256_extractf128_pd(h, 1);
  const __m128d s = _mm_add_pd(lo, hi);  // [s01+s23, s45+s67]
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  const std::size_t nb = n / 8;
  std::vector<double> sums(nb);
  for (std::size_t b = 0; b < nb; ++b) sums[b] = dot_block8_avx2(x + 8 * b, y + 8 * b);
  double total = detail::pairwise_combine(sums.data(), nb);
  for (std::size_t i = 8 * nb; i < n; ++i) total += x[i] * y[i];
  return total;
}

void scale_ik_avx2(double* z, double k, std::size_t n_complex) {
  const __m256d vk = _mm256_setr_pd(-k, k, -k, k);
  std::size_t j = 0;
  for (; j + 2 <= n_complex; j += 2) {
    const __m256d v = _mm256_loadu_pd(z + 2 * j);
    // swap re/im within each complex slot, then scale by (-k, k)
    _mm256_storeu_pd(z + 2 * j, _mm256_mul_pd(vk, _mm256_permute_pd(v, 0b0101)));
  }
  for (; j < n_complex; ++j) {
    const double re = z[2 * j];
    const double im = z[2 * j + 1];
    z[2 * j] = -k * im;
    z[2 * j + 1] = k * re;
  }
}

}  // namespace

const Ops avx2_ops = {axpy_avx2, dot_avx2, scale_ik_avx2};

}  // namespace kernels
}  // namespace pleb
