#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "pleb/fiber.hpp"
#include "pleb/stencil.hpp"
#include "pleb/triple.hpp"

using pleb::FiberMatQ;
using pleb::PerfectTripleQ;
using pleb::Rational;
using pleb::RootTwo;

namespace {

RootTwo rand_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return RootTwo{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

bool mat_eq(const FiberMatQ& a, const FiberMatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

RootTwo trace(const FiberMatQ& a) {
  RootTwo t(0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

}  // namespace

TEST_CASE("fiber space dimensions and names") {
  using pleb::Space;
  CHECK(pleb::space_dim(Space::TM) == 4);
  CHECK(pleb::space_dim(Space::S) == 13);
  CHECK(pleb::space_dim(Space::E) == 3);
  CHECK(pleb::space_dim(Space::EL1) == 12);
  CHECK(pleb::space_dim(Space::ETF) == 18);
  CHECK(pleb::space_dim(Space::SE) == 16);
  CHECK(pleb::space_dim(Space::TA) == 16);
  CHECK(pleb::space_dim(Space::SPLIT) == 16);
  CHECK(pleb::space_name(Space::S) != nullptr);
}

TEST_CASE("pair indexing covers both orders with signs") {
  for (int p = 0; p < 6; ++p) {
    const auto [a, b] = pleb::kPair6[p];
    CHECK(pleb::pair_index(a, b) == std::pair<int, int>(p, 1));
    CHECK(pleb::pair_index(b, a) == std::pair<int, int>(p, -1));
  }
  CHECK(pleb::el1_index(2, 3) == 11);
  CHECK(pleb::etf_index(2, 5) == 17);
}

TEST_CASE("exact matrix inverse round trips") {
  std::mt19937_64 rng(5);
  FiberMatQ m(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = rand_scalar(rng);
  // make it safely nonsingular
  for (int r = 0; r < 6; ++r) m(r, r) += RootTwo(20);
  const FiberMatQ inv = pleb::fibermat_inverse(m);
  CHECK(mat_eq(m * inv, FiberMatQ::identity(6)));
  CHECK(mat_eq(inv * m, FiberMatQ::identity(6)));

  FiberMatQ sing(2, 2);
  sing(0, 0) = RootTwo(1);
  sing(0, 1) = RootTwo(2);
  sing(1, 0) = RootTwo(2);
  sing(1, 1) = RootTwo(4);
  CHECK_THROWS_AS(pleb::fibermat_inverse(sing), std::invalid_argument);
}

TEST_CASE("two-form packing round trips") {
  std::mt19937_64 rng(7);
  std::vector<RootTwo> v(18, RootTwo(0));
  for (auto& x : v) x = rand_scalar(rng);
  const auto forms = pleb::unpack_forms(v);
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(forms[i][mu][mu].is_zero());
      for (int nu = 0; nu < 4; ++nu) CHECK(forms[i][mu][nu] == -forms[i][nu][mu]);
    }
  const auto packed = pleb::pack_forms(forms);
  for (int k = 0; k < 18; ++k) CHECK(packed[k] == v[k]);
}

TEST_CASE("S parametrization round trips exactly") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  std::mt19937_64 rng(9);
  std::vector<RootTwo> s(13, RootTwo(0));
  for (auto& x : s) x = rand_scalar(rng);
  const auto sg = pleb::sigma_from_s(t, s);
  const auto back = pleb::s_from_sigma(t, sg);
  for (int k = 0; k < 13; ++k) CHECK(back[k] == s[k]);

  CHECK(mat_eq(pleb::s_extract_matrix(t) * pleb::s_embed_matrix(t), FiberMatQ::identity(13)));
}

TEST_CASE("tracefree basis is orthonormal and tracefree") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  for (int k = 0; k < 9; ++k) {
    RootTwo tr(0);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        CHECK(t.hbasis[k][mu][nu] == t.hbasis[k][nu][mu]);
        tr += t.ginv[mu][nu] * t.hbasis[k][mu][nu];
      }
    CHECK(tr.is_zero());
    for (int l = 0; l < 9; ++l) {
      const RootTwo want = k == l ? RootTwo(1) : RootTwo(0);
      CHECK(pleb::dot_g(t.hbasis[k], t.hbasis[l], t.ginv) == want);
    }
  }
  // coordinate round trip through the basis
  std::mt19937_64 rng(13);
  std::array<RootTwo, 9> c;
  for (auto& x : c) x = rand_scalar(rng);
  const auto ht = pleb::ht_from_coords(t, c.data());
  const auto back = pleb::ht_to_coords(t, ht);
  for (int k = 0; k < 9; ++k) CHECK(back[k] == c[k]);
}

TEST_CASE("J1 satisfies its quadratic and splits 4 + 8") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  const FiberMatQ j1 = pleb::j1_matrix(t);
  const FiberMatQ i12 = FiberMatQ::identity(12);
  CHECK(mat_eq(j1, j1.transpose()));
  CHECK(mat_eq(j1 * j1, i12.scaled(RootTwo(2)) + j1));
  // (J1 - 2)(J1 + 1) == 0 with eigenvalues {2, -1}; the multiplicities
  // (m2, m-1) then follow from 2 m2 - m-1 = tr J1 = 0 and m2 + m-1 = 12
  CHECK(trace(j1).is_zero());
}

TEST_CASE("J2 satisfies its quartic with multiplicities 1, 3, 5, 9") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  const FiberMatQ j2 = pleb::j2_matrix(t);
  FiberMatQ p = j2;
  for (const int root : {2, -1, 1}) {
    FiberMatQ shift = j2;
    for (int i = 0; i < 18; ++i) shift(i, i) -= RootTwo(root);
    p = p * shift;
  }
  bool zero = true;
  for (const auto& v : p.data())
    if (!v.is_zero()) zero = false;
  CHECK(zero);
  // eigenvalues {2, 1, -1, 0}: the power traces (0, 12, 6) together with
  // dim 18 force multiplicities (1, 3, 5, 9) through the Vandermonde system
  CHECK(trace(j2).is_zero());
  CHECK(trace(j2 * j2) == RootTwo(12));
  CHECK(trace(j2 * j2 * j2) == RootTwo(6));
}

TEST_CASE("gram forms") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  const FiberMatQ gs = pleb::gram_s(RootTwo(Rational(1, 4)), RootTwo(8), RootTwo(1));
  CHECK(gs(0, 0) == RootTwo(Rational(1, 4)));
  CHECK(gs(2, 2) == RootTwo(8));
  CHECK(gs(12, 12) == RootTwo(1));
  CHECK(gs(0, 1).is_zero());

  // gamma1 |a|^2 - gamma2 a.J1 a as a matrix: gamma1 I - gamma2 J1
  const RootTwo g1(3), g2(Rational(1, 2));
  const FiberMatQ ge = pleb::gram_el1(t, g1, g2);
  const FiberMatQ want =
      FiberMatQ::identity(12).scaled(g1) + pleb::j1_matrix(t).scaled(-g2);
  CHECK(mat_eq(ge, want));
  CHECK(mat_eq(ge, ge.transpose()));
}

TEST_CASE("phi and its adjoint satisfy the contraction identities") {
  const PerfectTripleQ t = pleb::standard_triple_exact();
  const FiberMatQ phi = pleb::phi_matrix(t);
  const FiberMatQ phi_star = pleb::phi_star_matrix(t, RootTwo(0), RootTwo(1));
  const FiberMatQ j1 = pleb::j1_matrix(t);
  // Phi Phi* = -(3/2) I on TM (full contraction Sigma.Sigma = -3 delta)
  CHECK(mat_eq(phi * phi_star, FiberMatQ::identity(4).scaled(RootTwo(Rational(-3, 2)))));
  // Phi* Phi = -(I + J1)/2 on E-valued 1-forms
  const FiberMatQ want =
      (FiberMatQ::identity(12) + j1).scaled(RootTwo(Rational(-1, 2)));
  CHECK(mat_eq(phi_star * phi, want));
  // Phi J1 = 2 Phi
  CHECK(mat_eq(phi * j1, phi.scaled(RootTwo(2))));
}
