#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "pleb/fiber.hpp"
#include "pleb/forms.hpp"
#include "pleb/triple.hpp"

using pleb::FiberMatD;
using pleb::Forms3;
using pleb::Mat3;
using pleb::Mat4;
using pleb::PerfectTriple;

namespace {

double rand_scalar(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  return dist(rng);
}

pleb::Mat4<double> random_gl4(std::mt19937_64& rng) {
  pleb::Mat4<double> m;
  do {
    for (auto& row : m)
      for (auto& x : row) x = rand_scalar(rng);
    for (int i = 0; i < 4; ++i) m[i][i] += 2.0;
  } while (pleb::mat4_det(m) <= 0.2);
  return m;
}

double mat_diff(const FiberMatD& a, const FiberMatD& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  double worst = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) worst = std::max(worst, std::fabs(a(r, c) - b(r, c)));
  return worst;
}

Forms3<double> random_forms(std::mt19937_64& rng) {
  Forms3<double> b;
  for (auto& m : b) {
    m = pleb::mat4_zero<double>();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        m[mu][nu] = rand_scalar(rng);
        m[nu][mu] = -m[mu][nu];
      }
  }
  return b;
}

}  // namespace

TEST_CASE("channel extraction inverts the S parametrization with fixed weights") {
  std::mt19937_64 rng(2024);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 4; ++trial) {
    const PerfectTriple t =
        trial == 0 ? base : pleb::gl4_pullback(base, random_gl4(rng));
    std::vector<double> s(13);
    for (auto& x : s) x = rand_scalar(rng);
    const auto b = pleb::sigma_from_s(t, s);

    CHECK(pleb::forms_trace(t, b) == doctest::Approx(6.0 * s[0]).epsilon(1e-12));

    const auto ax = pleb::forms_axial(t, b);
    for (int i = 0; i < 3; ++i)
      CHECK(ax[i] == doctest::Approx(16.0 * s[1 + i]).epsilon(1e-12));

    // the 5-channel is not part of the parametrization, so it must vanish
    const auto sym = pleb::forms_sym(t, b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::fabs(sym[i][j]) < 1e-12);

    const auto cross = pleb::forms_cross(t, b);
    const auto ht = pleb::ht_from_coords(t, s.data() + 4);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(std::fabs(cross[mu][nu] + 2.0 * ht[mu][nu]) < 1e-12);
  }
}

TEST_CASE("embedding a 3x3 matrix hits the low channels with weight 4") {
  std::mt19937_64 rng(77);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 4; ++trial) {
    const PerfectTriple t =
        trial == 0 ? base : pleb::gl4_pullback(base, random_gl4(rng));
    Mat3<double> m;
    for (auto& row : m)
      for (auto& x : row) x = rand_scalar(rng);
    const auto b = pleb::forms_from_matrix(t, m);

    double tr = m[0][0] + m[1][1] + m[2][2];
    CHECK(pleb::forms_trace(t, b) == doctest::Approx(4.0 * tr).epsilon(1e-12));

    const auto ax = pleb::forms_axial(t, b);
    for (int i = 0; i < 3; ++i) {
      double want = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) want += pleb::eps3(i, j, k) * m[j][k];
      CHECK(ax[i] == doctest::Approx(4.0 * want).epsilon(1e-12));
    }

    const auto sym = pleb::forms_sym(t, b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double want = 2.0 * (m[i][j] + m[j][i]);
        if (i == j) want -= 4.0 * tr / 3.0;
        CHECK(std::fabs(sym[i][j] - want) < 1e-12);
      }

    // sigma_ud[i] sigma[j] has no tracefree-symmetric part, so the 9-channel
    // of a pure matrix embedding vanishes
    const auto cross = pleb::forms_cross(t, b);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) CHECK(std::fabs(cross[mu][nu]) < 1e-12);
  }
}

TEST_CASE("diamond with the metric reproduces twice the background forms") {
  std::mt19937_64 rng(31);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 4; ++trial) {
    const PerfectTriple t =
        trial == 0 ? base : pleb::gl4_pullback(base, random_gl4(rng));
    const auto d = pleb::forms_diamond(t, t.g);
    for (int i = 0; i < 3; ++i)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          CHECK(std::fabs(d[i][mu][nu] - 2.0 * t.sigma[i][mu][nu]) < 1e-12);
  }
}

TEST_CASE("wedge coefficients: normalization and antisymmetry") {
  const PerfectTriple t = pleb::standard_triple();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 2.0 : 0.0;
      CHECK(std::fabs(pleb::wedge_22(t.sigma[i], t.sigma[j]) - want) < 1e-14);
      CHECK(std::fabs(pleb::wedge_22(t.sigma[i], t.sigma[j]) -
                      pleb::wedge_22(t.sigma[j], t.sigma[i])) < 1e-14);
    }

  // the wedge pairing scales with the volume under pullbacks
  std::mt19937_64 rng(5);
  const PerfectTriple p = pleb::gl4_pullback(t, random_gl4(rng));
  for (int i = 0; i < 3; ++i)
    CHECK(pleb::wedge_22(p.sigma[i], p.sigma[i]) ==
          doctest::Approx(2.0 * p.vol).epsilon(1e-12));

  // dx0^dx1 ^ dx2 ^ dx3 = dx0123
  Mat4<double> x = pleb::mat4_zero<double>();
  x[0][1] = 1.0;
  x[1][0] = -1.0;
  pleb::Vec4<double> a{0.0, 0.0, 1.0, 0.0};
  pleb::Vec4<double> b{0.0, 0.0, 0.0, 1.0};
  CHECK(pleb::wedge_211(x, a, b) == doctest::Approx(1.0));
  CHECK(pleb::wedge_211(x, b, a) == doctest::Approx(-1.0));
}

TEST_CASE("duality operator squares to one and splits the 2-form fibers") {
  std::mt19937_64 rng(8);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 3; ++trial) {
    const PerfectTriple t =
        trial == 0 ? base : pleb::gl4_pullback(base, random_gl4(rng));
    const FiberMatD e = pleb::epsdual_matrix(t);
    CHECK(mat_diff(e * e, FiberMatD::identity(18)) < 1e-12);

    // background forms are +1 eigenvectors slot by slot
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        Forms3<double> b;
        for (auto& m : b) m = pleb::mat4_zero<double>();
        b[i] = t.sigma[k];
        const auto packed = pleb::pack_forms(b);
        const auto image = e * packed;
        for (int r = 0; r < 18; ++r) CHECK(std::fabs(image[r] - packed[r]) < 1e-12);
      }
  }

  // an opposite-orientation 2-form picks up eigenvalue -1 on the flat triple
  const FiberMatD e = pleb::epsdual_matrix(base);
  Forms3<double> b;
  for (auto& m : b) m = pleb::mat4_zero<double>();
  b[0][0][1] = 1.0;
  b[0][1][0] = -1.0;
  b[0][2][3] = -1.0;
  b[0][3][2] = 1.0;
  const auto packed = pleb::pack_forms(b);
  const auto image = e * packed;
  for (int r = 0; r < 18; ++r) CHECK(std::fabs(image[r] + packed[r]) < 1e-13);
}

TEST_CASE("power identities tie the 2-form endomorphisms together") {
  std::mt19937_64 rng(91);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 3; ++trial) {
    const PerfectTriple t =
        trial == 0 ? base : pleb::gl4_pullback(base, random_gl4(rng));
    const FiberMatD j2 = pleb::j2_matrix(t);
    const FiberMatD e = pleb::epsdual_matrix(t);
    const FiberMatD q = pleb::qop_matrix(t);
    const FiberMatD id = FiberMatD::identity(18);

    const FiberMatD j2sq = j2 * j2;
    const FiberMatD want2 = id.scaled(0.5) + e + j2.scaled(0.5) + q.scaled(0.5);
    CHECK(mat_diff(j2sq, want2) < 1e-12);

    const FiberMatD j2cu = j2sq * j2;
    const FiberMatD want3 = e + j2.scaled(2.0) + q;
    CHECK(mat_diff(j2cu, want3) < 1e-12);

    const FiberMatD want4 =
        id.scaled(0.5) + e.scaled(3.0) + j2.scaled(2.5) + q.scaled(2.5);
    CHECK(mat_diff(j2cu * j2, want4) < 1e-12);
  }
}
