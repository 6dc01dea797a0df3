#include "pleb/forms.hpp"

namespace pleb {

template <typename T>
FiberMat<T> epsdual_matrix(const PerfectTripleT<T>& t) {
  // eps_{mu nu}{}^{al be} with the last two indices raised by the metric
  std::array<std::array<std::array<std::array<T, 4>, 4>, 4>, 4> eps{};
  for (const auto& perm : kPerm4) {
    const T base = t.vol * T(perm.sign);
    for (int al = 0; al < 4; ++al) {
      const T part = base * t.ginv[perm.p[2]][al];
      if (fiber_is_zero(part)) continue;
      for (int be = 0; be < 4; ++be) {
        eps[perm.p[0]][perm.p[1]][al][be] += part * t.ginv[perm.p[3]][be];
      }
    }
  }
  FiberMat<T> m(18, 18);
  for (int i = 0; i < 3; ++i) {
    for (int p = 0; p < 6; ++p) {
      for (int q = 0; q < 6; ++q) {
        // (1/2) eps B sums both orderings of the antisymmetric pair q
        const T w = eps[kPair6[p].first][kPair6[p].second][kPair6[q].first][kPair6[q].second];
        if (!fiber_is_zero(w)) m(etf_index(i, p), etf_index(i, q)) = w;
      }
    }
  }
  return m;
}

template <typename T>
FiberMat<T> qop_matrix(const PerfectTripleT<T>& t) {
  const T half = T(1) / T(2);
  FiberMat<T> m(18, 18);
  for (int col = 0; col < 18; ++col) {
    std::vector<T> unit(18, T(0));
    unit[col] = T(1);
    const auto b = unpack_forms(unit);
    Forms3<T> out;
    for (int i = 0; i < 3; ++i) {
      out[i] = mat4_zero<T>();
      for (int j = 0; j < 3; ++j) {
        // X_{mu nu} = Sigma^i_mu{}^al Sigma^j_nu{}^be B^j_{al be}
        Mat4<T> x = mat4_zero<T>();
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            T v = T(0);
            for (int al = 0; al < 4; ++al)
              for (int be = 0; be < 4; ++be)
                v += t.sigma_ud[i][mu][al] * t.sigma_ud[j][nu][be] * b[j][al][be];
            x[mu][nu] = v;
          }
        x = mat4_add(x, mat4_scale(mat4_transpose(x), T(-1)));
        out[i] = mat4_add(out[i], mat4_scale(x, half));
      }
    }
    const auto packed = pack_forms(out);
    for (int r = 0; r < 18; ++r) m(r, col) = packed[r];
  }
  return m;
}

template FiberMat<double> epsdual_matrix<double>(const PerfectTripleT<double>&);
template FiberMat<RootTwo> epsdual_matrix<RootTwo>(const PerfectTripleT<RootTwo>&);
template FiberMat<double> qop_matrix<double>(const PerfectTripleT<double>&);
template FiberMat<RootTwo> qop_matrix<RootTwo>(const PerfectTripleT<RootTwo>&);

}  // namespace pleb
