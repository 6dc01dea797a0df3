#include "pleb/operators.hpp"

#include "pleb/fiber.hpp"

namespace pleb {

namespace {

template <typename T>
bool is_zero_scalar(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v == 0.0;
  } else {
    return v.is_zero();
  }
}

// adds the tracefree-symmetric coordinates of x (scaled) into rows
// [row0, row0+9) of the derivative slot mu, column col
template <typename T>
void add_ht_rows(const PerfectTripleT<T>& t, Stencil<T>& st, const Mat4<T>& x, int mu, int row0,
                 int col) {
  const auto c = ht_to_coords(t, x);
  for (int k = 0; k < 9; ++k) {
    if (!is_zero_scalar(c[k])) st.c[mu](row0 + k, col) += c[k];
  }
}

}  // namespace

template <typename T>
Stencil<T> gen_d1(const PerfectTripleT<T>& t, const std::array<T, 3>& a) {
  Stencil<T> st(13, 4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      st.c[mu](0, nu) += a[0] * t.ginv[mu][nu];
      for (int i = 0; i < 3; ++i) st.c[mu](1 + i, nu) += a[1] * t.sigma_uu[i][mu][nu];
      Mat4<T> e = mat4_zero<T>();
      e[mu][nu] = T(1);
      const Mat4<T> x = mat4_scale(sym_tracefree(e, t.g, t.ginv), T(2) * a[2]);
      add_ht_rows(t, st, x, mu, 4, nu);
    }
  }
  return st;
}

template <typename T>
Stencil<T> gen_d2(const PerfectTripleT<T>& t, const std::array<T, 5>& b) {
  Stencil<T> st(12, 13);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int al = 0; al < 4; ++al) {
        st.c[al](el1_index(i, mu), 0) += b[0] * t.sigma_ud[i][mu][al];
      }
      st.c[mu](el1_index(i, mu), 1 + i) += b[1];
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          const int e = eps3(i, j, k);
          if (!e) continue;
          for (int al = 0; al < 4; ++al) {
            st.c[al](el1_index(i, mu), 1 + k) += T(e) * b[2] * t.sigma_ud[j][mu][al];
          }
        }
      }
    }
  }
  for (int m = 0; m < 9; ++m) {
    const Mat4<T>& x = t.hbasis[m];
    for (int i = 0; i < 3; ++i) {
      for (int mu = 0; mu < 4; ++mu) {
        for (int al = 0; al < 4; ++al) {
          T v4 = T(0);
          T v5 = T(0);
          for (int rho = 0; rho < 4; ++rho) {
            for (int sg = 0; sg < 4; ++sg) {
              v4 += t.sigma_ud[i][mu][rho] * t.ginv[sg][al] * x[rho][sg];
            }
          }
          for (int sg = 0; sg < 4; ++sg) v5 += t.sigma_uu[i][al][sg] * x[mu][sg];
          const T v = b[3] * v4 + b[4] * v5;
          if (!is_zero_scalar(v)) st.c[al](el1_index(i, mu), 4 + m) += v;
        }
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> gen_d3(const PerfectTripleT<T>& t, const std::array<T, 2>& c) {
  Stencil<T> st(3, 12);
  for (int i = 0; i < 3; ++i) {
    for (int al = 0; al < 4; ++al) {
      for (int nu = 0; nu < 4; ++nu) {
        st.c[al](i, el1_index(i, nu)) += c[0] * t.ginv[al][nu];
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            const int e = eps3(i, j, k);
            if (!e) continue;
            st.c[al](i, el1_index(k, nu)) += T(e) * c[1] * t.sigma_uu[j][al][nu];
          }
        }
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> gen_d1_adj(const PerfectTripleT<T>& t, const std::array<T, 3>& ap) {
  Stencil<T> st(4, 13);
  for (int mu = 0; mu < 4; ++mu) {
    st.c[mu](mu, 0) += ap[0];
    for (int i = 0; i < 3; ++i) {
      for (int nu = 0; nu < 4; ++nu) st.c[nu](mu, 1 + i) += ap[1] * t.sigma_ud[i][mu][nu];
    }
    for (int m = 0; m < 9; ++m) {
      const Mat4<T>& x = t.hbasis[m];
      for (int al = 0; al < 4; ++al) {
        T v = T(0);
        for (int nu = 0; nu < 4; ++nu) v += t.ginv[nu][al] * x[mu][nu];
        if (!is_zero_scalar(v)) st.c[al](mu, 4 + m) += ap[2] * v;
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> gen_d2_adj(const PerfectTripleT<T>& t, const std::array<T, 5>& bp) {
  Stencil<T> st(13, 12);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        st.c[mu](0, el1_index(i, nu)) += bp[0] * t.sigma_uu[i][mu][nu];
      }
    }
    for (int al = 0; al < 4; ++al) {
      for (int nu = 0; nu < 4; ++nu) {
        st.c[al](1 + i, el1_index(i, nu)) += bp[1] * t.ginv[al][nu];
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            const int e = eps3(i, j, k);
            if (!e) continue;
            st.c[al](1 + i, el1_index(k, nu)) += T(e) * bp[2] * t.sigma_uu[j][al][nu];
          }
        }
      }
    }
    // tracefree-symmetric output channel: act on the unit mode a^i_lam with
    // derivative slot be, collect 2 b4' symtf(T1) + 2 b5' symtf(T2) where
    // T1_{mu nu} = Sg^i_mu{}^lam delta_nu^be and T2_{mu nu} = Sg^i_mu{}^be delta_nu^lam
    for (int lam = 0; lam < 4; ++lam) {
      for (int be = 0; be < 4; ++be) {
        Mat4<T> t1 = mat4_zero<T>();
        Mat4<T> t2 = mat4_zero<T>();
        for (int mu = 0; mu < 4; ++mu) {
          t1[mu][be] += t.sigma_ud[i][mu][lam];
          t2[mu][lam] += t.sigma_ud[i][mu][be];
        }
        const Mat4<T> x = mat4_add(mat4_scale(sym_tracefree(t1, t.g, t.ginv), T(2) * bp[3]),
                                   mat4_scale(sym_tracefree(t2, t.g, t.ginv), T(2) * bp[4]));
        const auto cc = ht_to_coords(t, x);
        for (int k = 0; k < 9; ++k) {
          if (!is_zero_scalar(cc[k])) st.c[be](4 + k, el1_index(i, lam)) += cc[k];
        }
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> gen_d3_adj(const PerfectTripleT<T>& t, const std::array<T, 2>& cp) {
  Stencil<T> st(12, 3);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      st.c[mu](el1_index(i, mu), i) += cp[0];
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          const int e = eps3(i, j, k);
          if (!e) continue;
          for (int al = 0; al < 4; ++al) {
            st.c[al](el1_index(i, mu), k) += T(e) * cp[1] * t.sigma_ud[j][mu][al];
          }
        }
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> sigma_grad(const PerfectTripleT<T>& t, const T& f) {
  Stencil<T> st(4, 3);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int al = 0; al < 4; ++al) st.c[al](mu, i) += f * t.sigma_ud[i][mu][al];
    }
  }
  return st;
}

template <typename T>
Stencil<T> sigma_curl(const PerfectTripleT<T>& t, const T& fp) {
  Stencil<T> st(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) st.c[mu](i, nu) += fp * t.sigma_uu[i][mu][nu];
    }
  }
  return st;
}

template <typename T>
Stencil<T> ext_d(const PerfectTripleT<T>& t) {
  (void)t;
  Stencil<T> st(18, 12);
  for (int i = 0; i < 3; ++i) {
    for (int p = 0; p < 6; ++p) {
      const int u = kPair6[p].first;
      const int v = kPair6[p].second;
      st.c[u](etf_index(i, p), el1_index(i, v)) += T(1);
      st.c[v](etf_index(i, p), el1_index(i, u)) += T(-1);
    }
  }
  return st;
}

template <typename T>
Stencil<T> eps_curl(const PerfectTripleT<T>& t) {
  // eps_mu{}^{al be ga} with the last three indices raised by the metric
  std::array<std::array<std::array<std::array<T, 4>, 4>, 4>, 4> eps{};
  for (const auto& perm : kPerm4) {
    const T base = t.vol * T(perm.sign);
    for (int al = 0; al < 4; ++al) {
      for (int be = 0; be < 4; ++be) {
        const T part = base * t.ginv[perm.p[1]][al] * t.ginv[perm.p[2]][be];
        if (is_zero_scalar(part)) continue;
        for (int ga = 0; ga < 4; ++ga) {
          eps[perm.p[0]][al][be][ga] += part * t.ginv[perm.p[3]][ga];
        }
      }
    }
  }
  Stencil<T> st(12, 18);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int al = 0; al < 4; ++al) {
        for (int p = 0; p < 6; ++p) {
          const int u = kPair6[p].first;
          const int v = kPair6[p].second;
          const T w = T(2) * eps[mu][al][u][v];
          if (!is_zero_scalar(w)) st.c[al](el1_index(i, mu), etf_index(i, p)) += w;
        }
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> d2_via_definition(const PerfectTripleT<T>& t) {
  const Stencil<T> curl = map_before(eps_curl(t), s_embed_matrix(t));
  FiberMat<T> post = j1_matrix(t);
  for (int r = 0; r < 12; ++r) post(r, r) += T(-1);
  return map_after(post.scaled(T(1) / T(4)), curl);
}

template <typename T>
Stencil<T> einstein_tensor_op(const PerfectTripleT<T>& t) {
  Stencil<T> st(16, 12);
  const T half = T(1) / T(2);
  for (int i = 0; i < 3; ++i) {
    for (int lam = 0; lam < 4; ++lam) {
      for (int be = 0; be < 4; ++be) {
        Mat4<T> t1 = mat4_zero<T>();
        Mat4<T> t2 = mat4_zero<T>();
        for (int mu = 0; mu < 4; ++mu) {
          t1[mu][be] += t.sigma_ud[i][mu][lam];
          t2[mu][lam] += t.sigma_ud[i][mu][be];
        }
        const Mat4<T> diff = mat4_add(t1, mat4_scale(t2, T(-1)));
        const Mat4<T> x = mat4_scale(mat4_add(diff, mat4_transpose(diff)), half);
        for (int mu = 0; mu < 4; ++mu) {
          for (int nu = 0; nu < 4; ++nu) {
            if (!is_zero_scalar(x[mu][nu])) {
              st.c[be](4 * mu + nu, el1_index(i, lam)) += x[mu][nu];
            }
          }
        }
      }
    }
  }
  return st;
}

template <typename T>
FiberMat<T> s_tensor_matrix(const PerfectTripleT<T>& t, const T& wh, const T& wht) {
  FiberMat<T> m(16, 13);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (!is_zero_scalar(t.g[mu][nu])) m(4 * mu + nu, 0) = wh * t.g[mu][nu];
      for (int k = 0; k < 9; ++k) {
        const T v = wht * t.hbasis[k][mu][nu];
        if (!is_zero_scalar(v)) m(4 * mu + nu, 4 + k) = v;
      }
    }
  }
  return m;
}

template <typename T>
Stencil<T> grad_scalar(const PerfectTripleT<T>& t) {
  (void)t;
  Stencil<T> st(4, 1);
  for (int mu = 0; mu < 4; ++mu) st.c[mu](mu, 0) += T(1);
  return st;
}

template <typename T>
Stencil<T> grad_e(const PerfectTripleT<T>& t) {
  (void)t;
  Stencil<T> st(12, 3);
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) st.c[mu](el1_index(i, mu), i) += T(1);
  }
  return st;
}

template <typename T>
Stencil<T> dtilde_ht(const PerfectTripleT<T>& t) {
  const Stencil<T> full = gen_d2(t, std::array<T, 5>{T(0), T(0), T(0), T(1), T(-1)});
  Stencil<T> st(12, 9);
  for (int mu = 0; mu < 4; ++mu) {
    for (int r = 0; r < 12; ++r) {
      for (int c = 0; c < 9; ++c) st.c[mu](r, c) = full.c[mu](r, 4 + c);
    }
  }
  return st;
}

template <typename T>
Stencil<T> split_d4(const PerfectTripleT<T>& t) {
  const T s = T(1) / scalar_sqrt2<T>();
  Stencil<T> st(4, 4);
  for (int mu = 0; mu < 4; ++mu) st.c[mu](mu, 0) += T(0) - s;
  for (int i = 0; i < 3; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int al = 0; al < 4; ++al) {
        st.c[al](mu, 1 + i) += T(2) * s * t.sigma_ud[i][mu][al];
      }
    }
  }
  return st;
}

template <typename T>
Stencil<T> split_d12(const PerfectTripleT<T>& t) {
  Stencil<T> st(12, 12);
  stencil_place(st, grad_e(t), 0, 0);
  stencil_place(st, dtilde_ht(t), 0, 3);
  return st;
}

#define PLEB_INSTANTIATE(T)                                                          \
  template Stencil<T> gen_d1<T>(const PerfectTripleT<T>&, const std::array<T, 3>&); \
  template Stencil<T> gen_d2<T>(const PerfectTripleT<T>&, const std::array<T, 5>&); \
  template Stencil<T> gen_d3<T>(const PerfectTripleT<T>&, const std::array<T, 2>&); \
  template Stencil<T> gen_d1_adj<T>(const PerfectTripleT<T>&, const std::array<T, 3>&); \
  template Stencil<T> gen_d2_adj<T>(const PerfectTripleT<T>&, const std::array<T, 5>&); \
  template Stencil<T> gen_d3_adj<T>(const PerfectTripleT<T>&, const std::array<T, 2>&); \
  template Stencil<T> sigma_grad<T>(const PerfectTripleT<T>&, const T&);            \
  template Stencil<T> sigma_curl<T>(const PerfectTripleT<T>&, const T&);            \
  template Stencil<T> ext_d<T>(const PerfectTripleT<T>&);                           \
  template Stencil<T> eps_curl<T>(const PerfectTripleT<T>&);                        \
  template Stencil<T> d2_via_definition<T>(const PerfectTripleT<T>&);               \
  template Stencil<T> einstein_tensor_op<T>(const PerfectTripleT<T>&);              \
  template FiberMat<T> s_tensor_matrix<T>(const PerfectTripleT<T>&, const T&, const T&); \
  template Stencil<T> grad_scalar<T>(const PerfectTripleT<T>&);                     \
  template Stencil<T> grad_e<T>(const PerfectTripleT<T>&);                          \
  template Stencil<T> dtilde_ht<T>(const PerfectTripleT<T>&);                       \
  template Stencil<T> split_d4<T>(const PerfectTripleT<T>&);                        \
  template Stencil<T> split_d12<T>(const PerfectTripleT<T>&);

PLEB_INSTANTIATE(double)
PLEB_INSTANTIATE(RootTwo)

#undef PLEB_INSTANTIATE

}  // namespace pleb
