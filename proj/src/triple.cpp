#include "pleb/triple.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <json.hpp>

namespace pleb {

const char* triple_error_name(TripleError e) {
  switch (e) {
    case TripleError::Ok: return "Ok";
    case TripleError::NotPerfect: return "NotPerfect";
    case TripleError::NotRiemannian: return "NotRiemannian";
    case TripleError::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

// wedge coefficients W_ij: Sigma^i ^ Sigma^j = W_ij e0^e1^e2^e3
template <typename T>
Mat3<T> wedge_matrix(const std::array<Mat4<T>, 3>& sigma) {
  Mat3<T> w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T acc = T(0);
      for (const auto& p : kPerm4) {
        T term = sigma[i][p.p[0]][p.p[1]] * sigma[j][p.p[2]][p.p[3]];
        acc += (p.sign > 0) ? term : -term;
      }
      w[i][j] = acc / T(4);
    }
  return w;
}

// T_{mu nu} = -(1/12) eps^{ijk} Sigma^i_{mu a} Sigma^j_{nu b} Sigma^k_{c d}
//             tilde-eps^{a b c d}   (tilde-eps is the bare permutation symbol)
// The weight is fixed so that T == g * v on the self-dual orientation used
// here (Sigma^i ^ Sigma^j = +2 delta^{ij} v, eps_{0123} = +v); the often
// quoted +1/6 weight produces -2 g v under these conventions.
Mat4<double> urbantke_tensor(const std::array<Mat4<double>, 3>& sigma) {
  Mat4<double> t = mat4_zero<double>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e == 0) continue;
        for (const auto& p : kPerm4) {
          const int a = p.p[0], b = p.p[1], c = p.p[2], d = p.p[3];
          const double w = e * p.sign * sigma[k][c][d];
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              t[mu][nu] += w * sigma[i][mu][a] * sigma[j][nu][b];
        }
      }
  for (auto& row : t)
    for (auto& v : row) v /= -12.0;
  return t;
}

bool is_positive_definite(const Mat4<double>& g) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = g[i][j];
  Eigen::LLT<Eigen::Matrix4d> llt(m);
  return llt.info() == Eigen::Success;
}

}  // namespace

PerfectTripleQ standard_triple_exact() {
  PerfectTripleQ t;
  for (auto& s : t.sigma) s = mat4_zero<RootTwo>();
  auto set = [](Mat4<RootTwo>& s, int mu, int nu, int val) {
    s[mu][nu] = RootTwo(val);
    s[nu][mu] = RootTwo(-val);
  };
  set(t.sigma[0], 0, 1, 1);  // e1^e2
  set(t.sigma[0], 2, 3, 1);  // e3^e4
  set(t.sigma[1], 0, 3, 1);  // e1^e4
  set(t.sigma[1], 1, 2, 1);  // e2^e3
  set(t.sigma[2], 0, 2, 1);  // e1^e3
  set(t.sigma[2], 3, 1, 1);  // e4^e2
  t.g = mat4_identity<RootTwo>();
  t.vol = RootTwo(1);
  fill_derived(t);

  // orthonormal basis of Sym^2_0 with entries in Q(sqrt2):
  // six off-diagonal pair tensors, then three diagonal ones
  const RootTwo inv_s2 = RootTwo::inv_sqrt2();
  const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int k = 0; k < 6; ++k) {
    auto& b = t.hbasis[k];
    b = mat4_zero<RootTwo>();
    b[pairs[k].first][pairs[k].second] = inv_s2;
    b[pairs[k].second][pairs[k].first] = inv_s2;
  }
  t.hbasis[6] = mat4_zero<RootTwo>();
  t.hbasis[6][0][0] = inv_s2;
  t.hbasis[6][1][1] = -inv_s2;
  t.hbasis[7] = mat4_zero<RootTwo>();
  t.hbasis[7][2][2] = inv_s2;
  t.hbasis[7][3][3] = -inv_s2;
  t.hbasis[8] = mat4_zero<RootTwo>();
  const RootTwo half(Rational(1, 2));
  t.hbasis[8][0][0] = half;
  t.hbasis[8][1][1] = half;
  t.hbasis[8][2][2] = -half;
  t.hbasis[8][3][3] = -half;
  return t;
}

PerfectTriple to_numeric(const PerfectTripleQ& q) {
  PerfectTriple t;
  auto conv = [](const Mat4<RootTwo>& m) {
    Mat4<double> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i][j] = m[i][j].to_double();
    return out;
  };
  for (int i = 0; i < 3; ++i) {
    t.sigma[i] = conv(q.sigma[i]);
    t.sigma_ud[i] = conv(q.sigma_ud[i]);
    t.sigma_uu[i] = conv(q.sigma_uu[i]);
  }
  t.g = conv(q.g);
  t.ginv = conv(q.ginv);
  t.vol = q.vol.to_double();
  for (int k = 0; k < 9; ++k) t.hbasis[k] = conv(q.hbasis[k]);
  return t;
}

PerfectTriple standard_triple() {
  static const PerfectTriple t = to_numeric(standard_triple_exact());
  return t;
}

void build_hbasis(PerfectTriple& t) {
  // seed pool: the standard basis directions plus single-diagonal fallbacks
  std::array<Mat4<double>, 13> seeds;
  for (auto& s : seeds) s = mat4_zero<double>();
  const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int k = 0; k < 6; ++k) {
    seeds[k][pairs[k].first][pairs[k].second] = 1.0;
    seeds[k][pairs[k].second][pairs[k].first] = 1.0;
  }
  seeds[6][0][0] = 1.0;
  seeds[6][1][1] = -1.0;
  seeds[7][2][2] = 1.0;
  seeds[7][3][3] = -1.0;
  seeds[8][0][0] = 1.0;
  seeds[8][1][1] = 1.0;
  seeds[8][2][2] = -1.0;
  seeds[8][3][3] = -1.0;
  for (int k = 0; k < 4; ++k) seeds[9 + k][k][k] = 1.0;

  int have = 0;
  for (const auto& seed : seeds) {
    if (have == 9) break;
    Mat4<double> y = sym_tracefree(seed, t.g, t.ginv);
    for (int k = 0; k < have; ++k) {
      const double c = dot_g(y, t.hbasis[k], t.ginv);
      y = mat4_add(y, mat4_scale(t.hbasis[k], -c));
    }
    const double n2 = dot_g(y, y, t.ginv);
    if (n2 < 1e-10) continue;
    t.hbasis[have++] = mat4_scale(y, 1.0 / std::sqrt(n2));
  }
  if (have != 9)
    throw TripleException(TripleError::Degenerate,
                          "could not orthonormalize Sym^2_0 basis");
}

PerfectTriple gl4_pullback(const PerfectTriple& t, const Mat4<double>& m) {
  const double det = mat4_det(m);
  if (!(det > 1e-12))
    throw TripleException(TripleError::Degenerate,
                          "pullback map must be orientation-preserving and invertible");
  PerfectTriple out;
  const Mat4<double> mt = mat4_transpose(m);
  for (int i = 0; i < 3; ++i) out.sigma[i] = mat4_mul(mt, mat4_mul(t.sigma[i], m));
  out.g = mat4_mul(mt, mat4_mul(t.g, m));
  out.vol = det * t.vol;
  fill_derived(out);
  build_hbasis(out);
  return out;
}

MetricResult metric_from_triple(const std::array<Mat4<double>, 3>& sigma,
                                double tol) {
  MetricResult res;
  const Mat4<double> t = urbantke_tensor(sigma);
  const double det = mat4_det(t);
  if (!(det > 1e-30)) {
    res.error = TripleError::Degenerate;
    return res;
  }
  const double vol = std::pow(det, 1.0 / 6.0);
  Mat4<double> g = mat4_scale(t, 1.0 / vol);
  if (!is_positive_definite(g)) {
    res.error = TripleError::NotRiemannian;
    return res;
  }
  const Mat3<double> w = wedge_matrix(sigma);
  double scale = std::abs(2.0 * vol);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = (i == j) ? 2.0 * vol : 0.0;
      worst = std::max(worst, std::abs(w[i][j] - want));
    }
  res.wedge_residual = worst;
  if (worst > tol * std::max(1.0, scale)) {
    res.error = TripleError::NotPerfect;
    return res;
  }
  res.triple.sigma = sigma;
  res.triple.g = g;
  res.triple.vol = vol;
  fill_derived(res.triple);
  build_hbasis(res.triple);
  return res;
}

double AlgebraResiduals::max() const {
  double m = wedge;
  for (double v : {urbantke, quaternion, sigma_sigma, sigma_sigma_eps_a,
                   sigma_sigma_eps_b, contraction, self_dual})
    m = std::max(m, v);
  return m;
}

AlgebraResiduals algebra_residuals(const PerfectTriple& t) {
  AlgebraResiduals r{};

  {
    const Mat3<double> w = wedge_matrix(t.sigma);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double want = (i == j) ? 2.0 * t.vol : 0.0;
        r.wedge = std::max(r.wedge, std::abs(w[i][j] - want));
      }
  }

  {
    const Mat4<double> u = urbantke_tensor(t.sigma);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        r.urbantke = std::max(r.urbantke, std::abs(u[mu][nu] - t.g[mu][nu] * t.vol));
  }

  // Sigma^i Sigma^j = -delta^{ij} + eps^{ijk} Sigma^k, as endomorphisms
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat4<double> prod = mat4_mul(t.sigma_ud[i], t.sigma_ud[j]);
      Mat4<double> want = mat4_zero<double>();
      if (i == j) want = mat4_scale(mat4_identity<double>(), -1.0);
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0) want = mat4_add(want, mat4_scale(t.sigma_ud[k], double(e)));
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          r.quaternion = std::max(r.quaternion, std::abs(prod[a][b] - want[a][b]));
    }

  // Sigma^i_{mu nu} Sigma^i_{rho si} = g g - g g + eps
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int si = 0; si < 4; ++si) {
          double lhs = 0.0;
          for (int i = 0; i < 3; ++i) lhs += t.sigma[i][mu][nu] * t.sigma[i][rho][si];
          const double eps = t.vol * perm4_sign(mu, nu, rho, si);
          const double rhs =
              t.g[mu][rho] * t.g[nu][si] - t.g[mu][si] * t.g[nu][rho] + eps;
          r.sigma_sigma = std::max(r.sigma_sigma, std::abs(lhs - rhs));
        }

  // eps^{ijk} Sigma^j Sigma^k = 2 Sigma^i
  for (int i = 0; i < 3; ++i) {
    Mat4<double> acc = mat4_zero<double>();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e == 0) continue;
        acc = mat4_add(acc, mat4_scale(mat4_mul(t.sigma_ud[j], t.sigma_ud[k]), double(e)));
      }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        r.sigma_sigma_eps_a = std::max(
            r.sigma_sigma_eps_a, std::abs(acc[a][b] - 2.0 * t.sigma_ud[i][a][b]));
  }

  // commutator form: [Sigma^i, Sigma^j] = 2 eps^{ijk} Sigma^k
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat4<double> comm =
          mat4_add(mat4_mul(t.sigma_ud[i], t.sigma_ud[j]),
                   mat4_scale(mat4_mul(t.sigma_ud[j], t.sigma_ud[i]), -1.0));
      Mat4<double> want = mat4_zero<double>();
      for (int k = 0; k < 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0) want = mat4_add(want, mat4_scale(t.sigma_ud[k], 2.0 * e));
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          r.sigma_sigma_eps_b =
              std::max(r.sigma_sigma_eps_b, std::abs(comm[a][b] - want[a][b]));
    }

  // Sigma^{i mu nu} Sigma^i_{nu beta} = -3 delta^mu_beta
  for (int mu = 0; mu < 4; ++mu)
    for (int be = 0; be < 4; ++be) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int nu = 0; nu < 4; ++nu) acc += t.sigma_uu[i][mu][nu] * t.sigma[i][nu][be];
      const double want = (mu == be) ? -3.0 : 0.0;
      r.contraction = std::max(r.contraction, std::abs(acc - want));
    }

  // self-duality: (1/2) eps_{mu nu alpha beta} Sigma^{i alpha beta} = Sigma^i_{mu nu}
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double acc = 0.0;
        for (int al = 0; al < 4; ++al)
          for (int be = 0; be < 4; ++be) {
            const int s = perm4_sign(mu, nu, al, be);
            if (s != 0) acc += 0.5 * t.vol * s * t.sigma_uu[i][al][be];
          }
        r.self_dual = std::max(r.self_dual, std::abs(acc - t.sigma[i][mu][nu]));
      }

  return r;
}

PerfectTriple load_triple_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triple fixture: " + path);
  nlohmann::json j;
  in >> j;
  std::array<Mat4<double>, 3> sigma;
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        sigma[i][mu][nu] = j.at("sigma").at(i).at(mu).at(nu).get<double>();
  PerfectTriple t;
  t.sigma = sigma;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      t.g[mu][nu] = j.at("metric").at(mu).at(nu).get<double>();
  t.vol = j.at("volume").get<double>();
  fill_derived(t);

  const Mat3<double> w = wedge_matrix(t.sigma);
  for (int i = 0; i < 3; ++i)
    for (int j2 = 0; j2 < 3; ++j2) {
      const double want = (i == j2) ? 2.0 * t.vol : 0.0;
      if (std::abs(w[i][j2] - want) > 1e-8 * std::max(1.0, std::abs(2.0 * t.vol)))
        throw TripleException(TripleError::NotPerfect,
                              "triple fixture fails the wedge normalization");
    }
  if (!is_positive_definite(t.g))
    throw TripleException(TripleError::NotRiemannian,
                          "triple fixture metric is not positive definite");
  build_hbasis(t);
  return t;
}

void save_triple_json(const PerfectTriple& t, const std::string& path) {
  nlohmann::json j;
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) j["sigma"][i][mu][nu] = t.sigma[i][mu][nu];
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) j["metric"][mu][nu] = t.g[mu][nu];
  j["volume"] = t.vol;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write triple fixture: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace pleb
