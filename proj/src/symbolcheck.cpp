#include "pleb/symbolcheck.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "pleb/operators.hpp"

namespace pleb {

namespace {

Eigen::MatrixXd to_eigen(const FiberMatD& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

struct SvdInfo {
  int rank = 0;
  double gap = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd image;   // orthonormal basis of the column space
  Eigen::MatrixXd kernel;  // orthonormal basis of the null space
};

SvdInfo svd_info(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * (sv.size() ? sv(0) : 0.0);
  SvdInfo info;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) info.rank = i + 1;
  if (info.rank < sv.size() && info.rank > 0 && sv(info.rank) > 0.0)
    info.gap = sv(info.rank - 1) / sv(info.rank);
  info.image = svd.matrixU().leftCols(info.rank);
  info.kernel = svd.matrixV().rightCols(m.cols() - info.rank);
  return info;
}

// Largest principal angle between two subspaces given by orthonormal bases,
// computed through its sine: the cosine form (acos of the smallest singular
// value of a^T b) can only resolve angles down to sqrt(machine eps), while
// the residual (I - a a^T) b keeps full precision near zero.
double max_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() == 0 && b.cols() == 0) return 0.0;
  if (a.cols() != b.cols()) return M_PI / 2.0;
  const Eigen::MatrixXd resid = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(resid);
  const double s = std::clamp(svd.singularValues().maxCoeff(), 0.0, 1.0);
  return std::asin(s);
}

}  // namespace

SymbolReport symbol_report(const PerfectTriple& t, const std::array<double, 4>& k,
                           double angle_tol, double min_gap) {
  const auto a = to_numeric(coeff_array(d1_canonical()));
  const auto b = to_numeric(coeff_array(d2_canonical()));
  const auto c = to_numeric(coeff_array(d3_canonical()));

  const SvdInfo s1 = svd_info(to_eigen(symbol_matrix(gen_d1(t, a), k)));
  const SvdInfo s2 = svd_info(to_eigen(symbol_matrix(gen_d2(t, b), k)));
  const SvdInfo s3 = svd_info(to_eigen(symbol_matrix(gen_d3(t, c), k)));

  SymbolReport rep;
  rep.k = k;
  rep.ranks = {s1.rank, s2.rank, s3.rank};
  rep.kernel_dims = {13 - s2.rank, 12 - s3.rank};
  rep.max_principal_angle =
      std::max(max_angle(s1.image, s2.kernel), max_angle(s2.image, s3.kernel));
  rep.gap_ratio = std::min({s1.gap, s2.gap, s3.gap});
  rep.dims_balance = (4 - 13 + 12 - 3) == 0;
  rep.pass = rep.ranks == std::array<int, 3>{4, 9, 3} &&
             rep.kernel_dims == std::array<int, 2>{4, 9} &&
             rep.max_principal_angle < angle_tol && rep.gap_ratio > min_gap && rep.dims_balance;
  return rep;
}

std::string SymbolReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"k\":[" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << "],";
  os << "\"ranks\":[" << ranks[0] << "," << ranks[1] << "," << ranks[2] << "],";
  os << "\"kernel_dims\":[" << kernel_dims[0] << "," << kernel_dims[1] << "],";
  os << "\"max_principal_angle\":" << max_principal_angle << ",";
  os << "\"pass\":" << (pass ? "true" : "false") << "}";
  return os.str();
}

SymbolSweep symbol_sweep(const PerfectTriple& t, int samples, std::uint64_t seed,
                         double angle_tol, double min_gap) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SymbolSweep sweep;
  sweep.samples = samples;
  sweep.min_gap = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    std::array<double, 4> k;
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& v : k) {
        v = gauss(rng);
        norm += v * v;
      }
    } while (norm < 1e-4);
    const SymbolReport rep = symbol_report(t, k, angle_tol, min_gap);
    if (rep.ranks != std::array<int, 3>{4, 9, 3}) ++sweep.rank_failures;
    sweep.worst_angle = std::max(sweep.worst_angle, rep.max_principal_angle);
    sweep.min_gap = std::min(sweep.min_gap, rep.gap_ratio);
  }
  sweep.pass = sweep.rank_failures == 0 && sweep.worst_angle < angle_tol && sweep.min_gap > min_gap;
  return sweep;
}

double frame_reconstruction_residual(const PerfectTriple& t, const std::array<double, 4>& k,
                                     std::array<std::array<double, 4>, 3>* axes) {
  std::array<double, 4> khat = k;
  double n2 = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) n2 += t.ginv[mu][nu] * k[mu] * k[nu];
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : khat) v *= inv;

  std::array<std::array<double, 4>, 3> e{};
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu) {
      double v = 0.0;
      for (int nu = 0; nu < 4; ++nu) v -= t.sigma_ud[i][mu][nu] * khat[nu];
      e[i][mu] = v;
    }
  if (axes) *axes = e;

  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double rhs = khat[mu] * e[i][nu] - khat[nu] * e[i][mu];
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) {
            const int s = eps3(i, j, l);
            if (s) rhs -= s * e[j][mu] * e[l][nu];
          }
        worst = std::max(worst, std::fabs(t.sigma[i][mu][nu] - rhs));
      }
  return worst;
}

std::pair<int, int> fibermat_signature(const FiberMatD& m, double tol) {
  Eigen::MatrixXd em = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (em + em.transpose()));
  int pos = 0;
  int neg = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > tol) ++pos;
    if (es.eigenvalues()(i) < -tol) ++neg;
  }
  return {pos, neg};
}

}  // namespace pleb
