#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "pleb/forms.hpp"
#include "pleb/triple.hpp"

using pleb::Mat4;
using pleb::PerfectTriple;
using pleb::TripleError;

namespace {

Mat4<double> random_gl4(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 0.25);
  for (;;) {
    Mat4<double> m = pleb::mat4_identity<double>();
    for (auto& row : m)
      for (auto& v : row) v += dist(rng);
    if (pleb::mat4_det(m) > 0.2) return m;
  }
}

double max_diff(const Mat4<double>& a, const Mat4<double>& b) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) worst = std::max(worst, std::fabs(a[r][c] - b[r][c]));
  return worst;
}

}  // namespace

TEST_CASE("standard triple is the flat reference structure") {
  const PerfectTriple t = pleb::standard_triple();
  CHECK(max_diff(t.g, pleb::mat4_identity<double>()) == 0.0);
  CHECK(t.vol == 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 2.0 : 0.0;
      CHECK(std::fabs(pleb::wedge_22(t.sigma[i], t.sigma[j]) - want) < 1e-14);
    }
  // numeric and exact copies agree entry for entry
  const pleb::PerfectTripleQ tq = pleb::standard_triple_exact();
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(t.sigma[i][mu][nu] == tq.sigma[i][mu][nu].to_double());
  for (int k = 0; k < 9; ++k)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(t.hbasis[k][mu][nu] == tq.hbasis[k][mu][nu].to_double());
}

TEST_CASE("identity residuals vanish on the standard background") {
  const auto res = pleb::algebra_residuals(pleb::standard_triple());
  CHECK(res.max() < 1e-14);
}

TEST_CASE("metric recovery inverts a frame change") {
  std::mt19937_64 rng(17);
  const PerfectTriple base = pleb::standard_triple();
  for (int trial = 0; trial < 5; ++trial) {
    const PerfectTriple pulled = pleb::gl4_pullback(base, random_gl4(rng));
    const pleb::MetricResult mr = pleb::metric_from_triple(pulled.sigma);
    REQUIRE(mr.error == TripleError::Ok);
    CHECK(max_diff(mr.triple.g, pulled.g) < 1e-12);
    CHECK(mr.triple.vol == doctest::Approx(pulled.vol).epsilon(1e-12));
  }
}

TEST_CASE("metric recovery rejects bad input") {
  const PerfectTriple t = pleb::standard_triple();

  // all three forms equal: the triple product degenerates
  std::array<Mat4<double>, 3> repeated = {t.sigma[0], t.sigma[0], t.sigma[0]};
  CHECK(pleb::metric_from_triple(repeated).error != TripleError::Ok);

  // reversed internal orientation flips the recovered tensor's sign, which
  // must surface as a non-Riemannian metric rather than silently pass
  std::array<Mat4<double>, 3> flipped = {t.sigma[0], t.sigma[2], t.sigma[1]};
  CHECK(pleb::metric_from_triple(flipped).error == TripleError::NotRiemannian);

  // breaking one wedge normalization fails the perfectness gate
  std::array<Mat4<double>, 3> skewed = t.sigma;
  skewed[0] = pleb::mat4_scale(skewed[0], 1.05);
  CHECK(pleb::metric_from_triple(skewed).error == TripleError::NotPerfect);
}

TEST_CASE("pullback requires an orientation-preserving map") {
  Mat4<double> reflect = pleb::mat4_identity<double>();
  reflect[0][0] = -1.0;
  CHECK_THROWS(pleb::gl4_pullback(pleb::standard_triple(), reflect));
}

TEST_CASE("fixture io round trips and validates") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "pleb-triple-unit.json";

  std::mt19937_64 rng(19);
  const PerfectTriple t = pleb::gl4_pullback(pleb::standard_triple(), random_gl4(rng));
  pleb::save_triple_json(t, path.string());
  const PerfectTriple back = pleb::load_triple_json(path.string());
  CHECK(max_diff(back.g, t.g) < 1e-12);
  CHECK(back.vol == doctest::Approx(t.vol).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) CHECK(max_diff(back.sigma[i], t.sigma[i]) < 1e-12);

  // tampering with one component must be caught on load
  {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const auto pos = text.find("\"volume\"");
    REQUIRE(pos != std::string::npos);
    std::ofstream out(path);
    out << text.substr(0, pos) << "\"volume\": 99.0}";
  }
  CHECK_THROWS_AS(pleb::load_triple_json(path.string()), pleb::TripleException);
  fs::remove(path);
}

TEST_CASE("rebuilt tracefree basis stays orthonormal off the standard metric") {
  std::mt19937_64 rng(23);
  const PerfectTriple t = pleb::gl4_pullback(pleb::standard_triple(), random_gl4(rng));
  for (int k = 0; k < 9; ++k) {
    double tr = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) tr += t.ginv[mu][nu] * t.hbasis[k][mu][nu];
    CHECK(std::fabs(tr) < 1e-12);
    for (int l = 0; l < 9; ++l) {
      const double want = k == l ? 1.0 : 0.0;
      CHECK(std::fabs(pleb::dot_g(t.hbasis[k], t.hbasis[l], t.ginv) - want) < 1e-10);
    }
  }
}
