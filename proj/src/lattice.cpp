#include "pleb/lattice.hpp"

#include <fftw3.h>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "pleb/kernels.hpp"

namespace pleb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void run_parallel(int items, int threads, const std::function<void(int)>& fn);

// fftw_malloc-backed scratch so new-array execution keeps plan alignment
struct FftBuffers {
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  std::size_t nreal = 0;
  std::size_t ncplx = 0;

  FftBuffers(std::size_t nr, std::size_t nc) : nreal(nr), ncplx(nc) {
    real = static_cast<double*>(fftw_malloc(sizeof(double) * nr));
    cplx = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nc));
    if (!real || !cplx) throw std::bad_alloc();
  }
  ~FftBuffers() {
    fftw_free(real);
    fftw_free(cplx);
  }
  FftBuffers(const FftBuffers&) = delete;
  FftBuffers& operator=(const FftBuffers&) = delete;
};

struct Plans {
  fftw_plan fwd = nullptr;  // r2c
  fftw_plan bwd = nullptr;  // c2r
};

std::size_t complex_count(int n) {
  return static_cast<std::size_t>(n) * n * n * (n / 2 + 1);
}

// plan creation is not thread-safe; plans are cached per grid size and
// executed through the (thread-safe) new-array interface
const Plans& plans_for(int n) {
  static std::mutex mu;
  static std::map<int, Plans> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  FftBuffers scratch(static_cast<std::size_t>(n) * n * n * n, complex_count(n));
  const int dims[4] = {n, n, n, n};
  Plans p;
  p.fwd = fftw_plan_dft_r2c(4, dims, scratch.real, scratch.cplx, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_c2r(4, dims, scratch.cplx, scratch.real, FFTW_ESTIMATE);
  if (!p.fwd || !p.bwd) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(n, p).first->second;
}

int signed_freq(int i, int n) {
  if (2 * i == n) return 0;  // Nyquist slot dropped
  return i <= n / 2 ? i : i - n;
}

void run_parallel(int items, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || items <= 1) {
    for (int i = 0; i < items; ++i) fn(i);
    return;
  }
  const int nw = std::min(threads, items);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < items; i += nw) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// multiplies the r2c spectrum by i * k_mu (and 1/volume, folded into `scale`)
void spectral_twist(fftw_complex* z, int n, int mu, double scale) {
  const int nc3 = n / 2 + 1;
  const auto& ops = kernels::active_ops();
  if (mu == 3) {
    std::size_t idx = 0;
    for (int i0 = 0; i0 < n; ++i0)
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          for (int i3 = 0; i3 < nc3; ++i3, ++idx) {
            const double k = signed_freq(i3, n) * scale;
            const double re = z[idx][0];
            const double im = z[idx][1];
            z[idx][0] = -k * im;
            z[idx][1] = k * re;
          }
    return;
  }
  // k_mu is constant along contiguous runs of length prod(dims after mu);
  // the run counter's fastest digit is the index along dimension mu
  std::size_t run = nc3;
  for (int d = 2; d > mu; --d) run *= n;
  const std::size_t total = complex_count(n);
  for (std::size_t idx = 0; idx < total; idx += run) {
    const int imu = static_cast<int>((idx / run) % n);
    const double k = signed_freq(imu, n) * scale;
    ops.scale_ik(&z[idx][0], k, run);
  }
}

}  // namespace

Field::Field(int fiber_, int n_) : n(n_), fiber(fiber_) {
  data.assign(static_cast<std::size_t>(fiber) * volume(), 0.0);
}

double cell_volume(int n) {
  const double h = kTwoPi / n;
  return h * h * h * h;
}

Field random_field(int fiber, int n, std::uint64_t seed, int band) {
  if (n < 4 || n % 2) throw std::invalid_argument("random_field: n must be even and >= 4");
  Field u(fiber, n);
  const std::size_t vol = u.volume();
  const std::size_t nc = complex_count(n);
  const auto& p = plans_for(n);
  FftBuffers buf(vol, nc);
  const int nc3 = n / 2 + 1;

  for (int f = 0; f < fiber; ++f) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x517cc1b727220a95ULL * (f + 1));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t s = 0; s < vol; ++s) buf.real[s] = gauss(rng);
    fftw_execute_dft_r2c(p.fwd, buf.real, buf.cplx);

    std::size_t idx = 0;
    for (int i0 = 0; i0 < n; ++i0)
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          for (int i3 = 0; i3 < nc3; ++i3, ++idx) {
            const int k0 = std::abs(signed_freq(i0, n));
            const int k1 = std::abs(signed_freq(i1, n));
            const int k2 = std::abs(signed_freq(i2, n));
            const int k3 = std::abs(signed_freq(i3, n));
            const bool nyq = 2 * i0 == n || 2 * i1 == n || 2 * i2 == n || 2 * i3 == n;
            const bool keep = !nyq && k0 <= band && k1 <= band && k2 <= band && k3 <= band;
            if (!keep) {
              buf.cplx[idx][0] = 0.0;
              buf.cplx[idx][1] = 0.0;
            }
          }
    fftw_execute_dft_c2r(p.bwd, buf.cplx, buf.real);

    double sq = 0.0;
    for (std::size_t s = 0; s < vol; ++s) sq += buf.real[s] * buf.real[s];
    sq /= static_cast<double>(vol);
    const double inv = sq > 0.0 ? 1.0 / std::sqrt(sq) : 0.0;
    double* out = u.comp(f);
    for (std::size_t s = 0; s < vol; ++s) out[s] = buf.real[s] * inv;
  }
  return u;
}

namespace {

// shared implementation for derivative / laplacian
template <typename TwistFn>
Field spectral_apply(const Field& u, int threads, const TwistFn& twist) {
  Field out(u.fiber, u.n);
  const auto& p = plans_for(u.n);
  const std::size_t vol = u.volume();
  const std::size_t nc = complex_count(u.n);
  run_parallel(u.fiber, threads, [&](int f) {
    FftBuffers buf(vol, nc);
    std::memcpy(buf.real, u.comp(f), sizeof(double) * vol);
    fftw_execute_dft_r2c(p.fwd, buf.real, buf.cplx);
    twist(buf.cplx);
    fftw_execute_dft_c2r(p.bwd, buf.cplx, buf.real);
    std::memcpy(out.comp(f), buf.real, sizeof(double) * vol);
  });
  return out;
}

}  // namespace

Field derivative(const Field& u, int mu, int threads) {
  const double scale = 1.0 / static_cast<double>(u.volume());
  return spectral_apply(u, threads,
                        [&](fftw_complex* z) { spectral_twist(z, u.n, mu, scale); });
}

Field laplacian(const Field& u, int threads) {
  const int n = u.n;
  const double scale = 1.0 / static_cast<double>(u.volume());
  const int nc3 = n / 2 + 1;
  return spectral_apply(u, threads, [&](fftw_complex* z) {
    std::size_t idx = 0;
    for (int i0 = 0; i0 < n; ++i0)
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          for (int i3 = 0; i3 < nc3; ++i3, ++idx) {
            const double k0 = signed_freq(i0, n);
            const double k1 = signed_freq(i1, n);
            const double k2 = signed_freq(i2, n);
            const double k3 = signed_freq(i3, n);
            const double w = -(k0 * k0 + k1 * k1 + k2 * k2 + k3 * k3) * scale;
            z[idx][0] *= w;
            z[idx][1] *= w;
          }
  });
}

Field apply_stencil(const StencilD& op, const Field& u, int threads) {
  if (op.cols() != u.fiber) throw std::invalid_argument("apply_stencil: fiber mismatch");
  std::array<Field, 4> du;
  for (int mu = 0; mu < 4; ++mu) du[mu] = derivative(u, mu, threads);
  Field out(op.rows(), u.n);
  const std::size_t vol = u.volume();
  const auto& ops = kernels::active_ops();
  run_parallel(op.rows(), threads, [&](int r) {
    double* dst = out.comp(r);
    for (int mu = 0; mu < 4; ++mu)
      for (int c = 0; c < op.cols(); ++c) {
        const double w = op.c[mu](r, c);
        if (w != 0.0) ops.axpy(dst, du[mu].comp(c), w, vol);
      }
  });
  return out;
}

Field apply_fibermat(const FiberMatD& m, const Field& u) {
  if (m.cols() != u.fiber) throw std::invalid_argument("apply_fibermat: fiber mismatch");
  Field out(m.rows(), u.n);
  const std::size_t vol = u.volume();
  const auto& ops = kernels::active_ops();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0.0) ops.axpy(out.comp(r), u.comp(c), m(r, c), vol);
  return out;
}

Field operator+(const Field& a, const Field& b) {
  Field out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

Field operator-(const Field& a, const Field& b) {
  Field out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

Field scaled(const Field& a, double c) {
  Field out = a;
  for (double& v : out.data) v *= c;
  return out;
}

double inner(const Field& u, const Field& v, const FiberMatD& gram) {
  if (gram.rows() != u.fiber || gram.cols() != v.fiber)
    throw std::invalid_argument("inner: gram shape mismatch");
  const auto& ops = kernels::active_ops();
  const std::size_t vol = u.volume();
  double total = 0.0;
  for (int r = 0; r < gram.rows(); ++r)
    for (int c = 0; c < gram.cols(); ++c)
      if (gram(r, c) != 0.0) total += gram(r, c) * ops.dot(u.comp(r), v.comp(c), vol);
  return total * cell_volume(u.n);
}

double norm2_plain(const Field& u) {
  const auto& ops = kernels::active_ops();
  double total = 0.0;
  for (int f = 0; f < u.fiber; ++f) total += ops.dot(u.comp(f), u.comp(f), u.volume());
  return total * cell_volume(u.n);
}

double max_abs(const Field& u) {
  double m = 0.0;
  for (double v : u.data) m = std::max(m, std::fabs(v));
  return m;
}

double max_component_mean(const Field& u) {
  double worst = 0.0;
  for (int f = 0; f < u.fiber; ++f) {
    double mean = 0.0;
    const double* p = u.comp(f);
    for (std::size_t s = 0; s < u.volume(); ++s) mean += p[s];
    worst = std::max(worst, std::fabs(mean / static_cast<double>(u.volume())));
  }
  return worst;
}

double adjoint_pair_residual(const StencilD& op, const StencilD& op_adj, const FiberMatD& gram_in,
                             const FiberMatD& gram_out, int n, int trials, std::uint64_t seed,
                             int threads) {
  double worst = 0.0;
  for (int tr = 0; tr < trials; ++tr) {
    const Field u = random_field(op.cols(), n, seed + 2 * tr);
    const Field v = random_field(op.rows(), n, seed + 2 * tr + 1);
    const double lhs = inner(v, apply_stencil(op, u, threads), gram_out);
    const double rhs = inner(apply_stencil(op_adj, v, threads), u, gram_in);
    const double scale = std::sqrt(norm2_plain(u)) * std::sqrt(norm2_plain(v));
    worst = std::max(worst, std::fabs(lhs - rhs) / scale);
  }
  return worst;
}

LaplaceFit laplace_fit(const StencilD& fwd, const StencilD& adj, int n, int trials,
                       std::uint64_t seed, int threads) {
  const int fiber = fwd.cols();
  if (adj.rows() != fiber || adj.cols() != fwd.rows())
    throw std::invalid_argument("laplace_fit: shape mismatch");
  const auto& ops = kernels::active_ops();

  std::vector<Field> squares;   // adj(fwd(u)) per trial
  std::vector<Field> minus_lap;  // -Lap(u) per trial
  squares.reserve(trials);
  minus_lap.reserve(trials);
  for (int tr = 0; tr < trials; ++tr) {
    const Field u = random_field(fiber, n, seed + tr);
    squares.push_back(apply_stencil(adj, apply_stencil(fwd, u, threads), threads));
    minus_lap.push_back(scaled(laplacian(u, threads), -1.0));
  }

  const std::size_t vol = squares.front().volume();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(fiber, fiber);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(fiber, fiber);  // row r: rhs for channel r
  for (int tr = 0; tr < trials; ++tr) {
    for (int c = 0; c < fiber; ++c) {
      for (int c2 = c; c2 < fiber; ++c2) {
        const double v = ops.dot(minus_lap[tr].comp(c), minus_lap[tr].comp(c2), vol);
        a(c, c2) += v;
        if (c2 != c) a(c2, c) += v;
      }
      for (int r = 0; r < fiber; ++r)
        b(r, c) += ops.dot(squares[tr].comp(r), minus_lap[tr].comp(c), vol);
    }
  }

  LaplaceFit fit;
  fit.m = FiberMatD(fiber, fiber);
  Eigen::LDLT<Eigen::MatrixXd> solver(a);
  for (int r = 0; r < fiber; ++r) {
    const Eigen::VectorXd sol = solver.solve(b.row(r).transpose());
    for (int c = 0; c < fiber; ++c) fit.m(r, c) = sol(c);
  }

  double err2 = 0.0;
  double ref2 = 0.0;
  for (int tr = 0; tr < trials; ++tr) {
    const Field pred = apply_fibermat(fit.m, minus_lap[tr]);
    const Field diff = squares[tr] - pred;
    err2 += norm2_plain(diff);
    ref2 += norm2_plain(squares[tr]);
  }
  fit.residual = ref2 > 0.0 ? std::sqrt(err2 / ref2) : std::sqrt(err2);
  return fit;
}

void write_field(const std::string& path, const Field& u) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("write_field: cannot open " + path);
  const char magic[4] = {'P', 'L', 'B', 'K'};
  const std::uint32_t version = 1;
  const std::uint32_t n32 = static_cast<std::uint32_t>(u.n);
  const std::uint32_t f32 = static_cast<std::uint32_t>(u.fiber);
  std::fwrite(magic, 1, 4, fp);
  std::fwrite(&version, 4, 1, fp);
  std::fwrite(&n32, 4, 1, fp);
  std::fwrite(&f32, 4, 1, fp);
  // transpose from component-major storage to site-major, fiber-fastest
  std::vector<double> row(u.fiber);
  for (std::size_t s = 0; s < u.volume(); ++s) {
    for (int f = 0; f < u.fiber; ++f) row[f] = u.comp(f)[s];
    std::fwrite(row.data(), sizeof(double), row.size(), fp);
  }
  std::fclose(fp);
}

Field read_field(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("read_field: cannot open " + path);
  char magic[4];
  std::uint32_t version = 0, n32 = 0, f32 = 0;
  if (std::fread(magic, 1, 4, fp) != 4 || std::memcmp(magic, "PLBK", 4) != 0 ||
      std::fread(&version, 4, 1, fp) != 1 || version != 1 || std::fread(&n32, 4, 1, fp) != 1 ||
      std::fread(&f32, 4, 1, fp) != 1) {
    std::fclose(fp);
    throw std::runtime_error("read_field: bad header in " + path);
  }
  Field u(static_cast<int>(f32), static_cast<int>(n32));
  std::vector<double> row(u.fiber);
  for (std::size_t s = 0; s < u.volume(); ++s) {
    if (std::fread(row.data(), sizeof(double), row.size(), fp) != row.size()) {
      std::fclose(fp);
      throw std::runtime_error("read_field: truncated data in " + path);
    }
    for (int f = 0; f < u.fiber; ++f) u.comp(f)[s] = row[f];
  }
  std::fclose(fp);
  return u;
}

double symbol_crosscheck(const StencilD& op, int n, std::uint64_t seed, int threads) {
  const int half = (n - 1) / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  const double h = kTwoPi / n;

  double worst = 0.0;
  std::array<int, 4> k{};
  for (k[0] = -half; k[0] <= half; ++k[0])
    for (k[1] = -half; k[1] <= half; ++k[1])
      for (k[2] = -half; k[2] <= half; ++k[2])
        for (k[3] = -half; k[3] <= half; ++k[3]) {
          std::vector<double> re(op.cols()), im(op.cols());
          for (int c = 0; c < op.cols(); ++c) {
            re[c] = amp(rng);
            im[c] = amp(rng);
          }
          // u_c(x) = re_c cos(kx) - im_c sin(kx); applying the stencil gives
          // (A u)(x) = vr cos(kx) + vi_swap sin(kx) with A(r,c) = sum_mu k_mu C_mu(r,c):
          // d_mu picks up a factor k_mu and swaps (cos, sin) -> (-sin, cos)
          std::vector<double> vc(op.rows(), 0.0), vs(op.rows(), 0.0);
          for (int r = 0; r < op.rows(); ++r)
            for (int mu = 0; mu < 4; ++mu) {
              if (!k[mu]) continue;
              for (int c = 0; c < op.cols(); ++c) {
                const double w = op.c[mu](r, c) * k[mu];
                if (w == 0.0) continue;
                vc[r] += w * -im[c];
                vs[r] += w * -re[c];
              }
            }
          Field u(op.cols(), n);
          Field want(op.rows(), n);
          std::size_t s = 0;
          for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
              for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3, ++s) {
                  const double phase = h * (k[0] * i0 + k[1] * i1 + k[2] * i2 + k[3] * i3);
                  const double cp = std::cos(phase);
                  const double sp = std::sin(phase);
                  for (int c = 0; c < op.cols(); ++c) u.comp(c)[s] = re[c] * cp - im[c] * sp;
                  for (int r = 0; r < op.rows(); ++r) want.comp(r)[s] = vc[r] * cp + vs[r] * sp;
                }
          const Field got = apply_stencil(op, u, threads);
          worst = std::max(worst, max_abs(got - want));
        }
  return worst;
}

}  // namespace pleb
