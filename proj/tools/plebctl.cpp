// Command-line driver: runs verification suites and solves the small exact
// coefficient systems (complex conditions, inner products, adjoints).
//
//   plebctl verify <suite> [--n N] [--seed S] [--tol T] [--samples M]
//                          [--trials K] [--threads P] [--triple PATH]
//                          [--out REPORT.json]
//   plebctl solve b-coeffs --a a1,a2,a3 --c c1,c2 --b1 B
//   plebctl solve inner-products [--pleb | --beta1 X --beta3 Y]
//   plebctl solve adjoints [--a ...] [--b ...] [--c ...] [--beta ...]
//                          [--gamma ...]
//
// Exit codes: 0 all checks pass / solution verified; 1 a check failed or a
// solver precondition does not hold; 2 bad arguments.

#include <array>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pleb/coefficients.hpp"
#include "pleb/exact.hpp"
#include "pleb/fiber.hpp"
#include "pleb/operators.hpp"
#include "pleb/report.hpp"
#include "pleb/stencil.hpp"
#include "pleb/triple.hpp"
#include "pleb/verify.hpp"

namespace {

using pleb::RootTwo;

std::vector<RootTwo> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<RootTwo> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(pleb::parse_root_two(item));
  if (out.size() != count) {
    throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(count) +
                                " comma-separated values, got " + std::to_string(out.size()));
  }
  return out;
}

template <typename... Ts>
std::string join(const Ts&... vs) {
  std::string out;
  const char* sep = "";
  ((out += sep, out += vs.str(), sep = ", "), ...);
  return out;
}

int run_verify(const std::string& suite, const pleb::VerifyOptions& opt,
               const std::string& out_path) {
  if (!pleb::valid_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; expected one of: all";
    for (const auto& name : pleb::suite_names()) std::cerr << ", " << name;
    std::cerr << "\n";
    return 2;
  }
  const pleb::Report rep = pleb::run_suite(suite, opt);
  rep.print(std::cout);
  if (!out_path.empty()) rep.write_json(out_path);
  if (!rep.all_pass()) {
    std::cerr << "FAILED: " << rep.fail_count() << " check(s); first failing ref: "
              << rep.first_failing_ref() << "\n";
    return 1;
  }
  return 0;
}

int solve_b_coeffs(const std::string& a_str, const std::string& c_str,
                   const std::string& b1_str) {
  const auto av = parse_list(a_str, 3, "--a");
  const auto cv = parse_list(c_str, 2, "--c");
  const pleb::D1Coeffs a{av[0], av[1], av[2]};
  const pleb::D3Coeffs c{cv[0], cv[1]};
  const RootTwo b1 = pleb::parse_root_two(b1_str);

  pleb::D2Coeffs b;
  try {
    b = pleb::solve_b(a, c, b1);
  } catch (const std::exception& e) {
    std::cerr << "DegenerateFamily: " << e.what() << "\n";
    return 1;
  }
  for (const RootTwo& r : pleb::composition_conditions(a, b, c)) {
    if (!r.is_zero()) {
      std::cerr << "solution rejected: composition conditions do not vanish\n";
      return 1;
    }
  }
  std::cout << "b = " << join(b.b1, b.b2, b.b3, b.b4, b.b5) << "\n";
  return 0;
}

int solve_inner_products(bool pleb_choice, const std::string& beta1_str,
                         const std::string& beta3_str) {
  RootTwo beta1 = pleb::parse_root_two(beta1_str);
  RootTwo beta3 = pleb::parse_root_two(beta3_str);
  if (pleb_choice) {
    beta1 = RootTwo(pleb::Rational(1, 4));
    beta3 = RootTwo(1);
  }

  const pleb::InnerProductFamily fam = pleb::laplace_inner_product_family();
  const pleb::InnerProducts ip = fam.at(beta1, beta3);
  for (const RootTwo& r : fam.residuals(ip)) {
    if (!r.is_zero()) {
      std::cerr << "solution rejected: family relations do not hold\n";
      return 1;
    }
  }

  // the point of this family: with these weights the operator square is a
  // Laplacian multiple, so re-derive the adjoints and check all conditions
  const pleb::D1Coeffs a = pleb::d1_canonical();
  const pleb::D2Coeffs b = pleb::d2_canonical();
  try {
    const pleb::AdjD1Coeffs ap = pleb::adjoint_d1(a, ip);
    const pleb::AdjD2Coeffs bp = pleb::adjoint_d2(b, ip);
    for (const RootTwo& r : pleb::laplace_conditions(a, b, ap, bp)) {
      if (!r.is_zero()) {
        std::cerr << "solution rejected: Laplace conditions do not vanish\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "DegenerateFamily: " << e.what() << "\n";
    return 1;
  }

  std::cout << "beta = " << join(ip.beta1, ip.beta2, ip.beta3) << "\n";
  std::cout << "gamma = " << join(ip.gamma1, ip.gamma2) << "\n";
  return 0;
}

int solve_adjoints(const std::string& a_str, const std::string& b_str, const std::string& c_str,
                   const std::string& beta_str, const std::string& gamma_str) {
  const auto av = parse_list(a_str, 3, "--a");
  const auto bv = parse_list(b_str, 5, "--b");
  const auto cv = parse_list(c_str, 2, "--c");
  const auto betas = parse_list(beta_str, 3, "--beta");
  const auto gammas = parse_list(gamma_str, 2, "--gamma");
  const pleb::D1Coeffs a{av[0], av[1], av[2]};
  const pleb::D2Coeffs b{bv[0], bv[1], bv[2], bv[3], bv[4]};
  const pleb::D3Coeffs c{cv[0], cv[1]};
  const pleb::InnerProducts ip{betas[0], betas[1], betas[2], gammas[0], gammas[1]};

  pleb::AdjD1Coeffs ap;
  pleb::AdjD2Coeffs bp;
  pleb::AdjD3Coeffs cp;
  try {
    ap = pleb::adjoint_d1(a, ip);
    bp = pleb::adjoint_d2(b, ip);
    cp = pleb::adjoint_d3(c, ip);
  } catch (const std::exception& e) {
    std::cerr << "SingularPairing: " << e.what() << "\n";
    return 1;
  }

  // verify each primed set against the Gram-transpose of its operator before
  // printing anything: the closed forms are never trusted on their own
  const pleb::PerfectTripleQ t = pleb::standard_triple_exact();
  const auto gs = pleb::gram_s(ip.beta1, ip.beta2, ip.beta3);
  const auto ge = pleb::gram_el1(t, ip.gamma1, ip.gamma2);
  const auto id4 = pleb::FiberMatQ::identity(4);
  const auto id3 = pleb::FiberMatQ::identity(3);

  try {
    const bool ok1 = pleb::stencil_equal(
        pleb::gen_d1_adj(t, {ap.a1p, ap.a2p, ap.a3p}),
        pleb::stencil_adjoint(pleb::gen_d1(t, {a.a1, a.a2, a.a3}), id4, gs));
    const bool ok2 = pleb::stencil_equal(
        pleb::gen_d2_adj(t, {bp.b1p, bp.b2p, bp.b3p, bp.b4p, bp.b5p}),
        pleb::stencil_adjoint(pleb::gen_d2(t, {b.b1, b.b2, b.b3, b.b4, b.b5}), gs, ge));
    const bool ok3 = pleb::stencil_equal(
        pleb::gen_d3_adj(t, {cp.c1p, cp.c2p}),
        pleb::stencil_adjoint(pleb::gen_d3(t, {c.c1, c.c2}), ge, id3));
    if (!(ok1 && ok2 && ok3)) {
      std::cerr << "solution rejected: adjoint stencils disagree with the Gram transpose\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "SingularPairing: " << e.what() << "\n";
    return 1;
  }

  std::cout << "a' = " << join(ap.a1p, ap.a2p, ap.a3p) << "\n";
  std::cout << "b' = " << join(bp.b1p, bp.b2p, bp.b3p, bp.b4p, bp.b5p) << "\n";
  std::cout << "c' = " << join(cp.c1p, cp.c2p) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the self-dual 2-form operator complex"};
  app.require_subcommand(1);

  pleb::VerifyOptions opt;
  std::string suite;
  std::string out_path;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "algebra, decompose, ellipticity, complex, einstein, "
                                     "coefficients, twisted, split, or all")
      ->required();
  verify->add_option("--n", opt.n, "lattice points per dimension")->capture_default_str();
  verify->add_option("--seed", opt.seed, "master random seed")->capture_default_str();
  verify->add_option("--tol", opt.tol, "override the default numeric tolerances");
  verify->add_option("--samples", opt.samples, "covector samples for the symbol sweep")
      ->capture_default_str();
  verify->add_option("--trials", opt.trials, "random-field pairs per lattice pairing check")
      ->capture_default_str();
  verify->add_option("--threads", opt.threads, "lattice worker threads")->capture_default_str();
  verify->add_option("--triple", opt.triple_path, "background triple fixture (JSON)");
  verify->add_option("--out", out_path, "write the report as JSON to this path");

  std::string what;
  std::string a_str = "1,1/4,1/2";
  std::string b_str = "1/4,2,0,0,-1";
  std::string c_str = "0,1";
  std::string b1_str = "1/4";
  std::string beta_str = "1/4,8,1";
  std::string gamma_str = "0,1";
  std::string beta1_str = "1/4";
  std::string beta3_str = "1";
  bool pleb_choice = false;
  CLI::App* solve = app.add_subcommand("solve", "solve a coefficient system exactly");
  solve->add_option("what", what, "b-coeffs, inner-products, or adjoints")->required();
  solve->add_option("--a", a_str, "d1 coefficients a1,a2,a3")->capture_default_str();
  solve->add_option("--b", b_str, "d2 coefficients b1,..,b5")->capture_default_str();
  solve->add_option("--c", c_str, "d3 coefficients c1,c2")->capture_default_str();
  solve->add_option("--b1", b1_str, "overall scale b1 of the solved d2")->capture_default_str();
  solve->add_option("--beta", beta_str, "inner-product weights on S")->capture_default_str();
  solve->add_option("--gamma", gamma_str, "inner-product weights on E x Lambda^1")
      ->capture_default_str();
  solve->add_option("--beta1", beta1_str, "family parameter beta1")->capture_default_str();
  solve->add_option("--beta3", beta3_str, "family parameter beta3")->capture_default_str();
  solve->add_flag("--pleb", pleb_choice, "pick the canonical point beta1=1/4, beta3=1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(suite, opt, out_path);
    if (what == "b-coeffs") return solve_b_coeffs(a_str, c_str, b1_str);
    if (what == "inner-products") return solve_inner_products(pleb_choice, beta1_str, beta3_str);
    if (what == "adjoints") return solve_adjoints(a_str, b_str, c_str, beta_str, gamma_str);
    std::cerr << "unknown solve target '" << what
              << "'; expected b-coeffs, inner-products, or adjoints\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
