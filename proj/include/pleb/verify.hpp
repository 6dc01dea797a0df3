#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pleb/report.hpp"

namespace pleb {

// Shared knobs for the verification suites. `tol` > 0 replaces every numeric
// default tolerance (exact checks are unaffected); `triple_path` swaps the
// standard background for a JSON fixture in the suites that are meaningful on
// a general background (algebra, ellipticity, and the lattice legs of
// complex/einstein/coefficients). The twisted/split suites always run on the
// standard background because their operator constants live in Q(sqrt2).
struct VerifyOptions {
  int n = 8;               // lattice size per dimension
  std::uint64_t seed = 0;  // master seed; every suite derives from it
  double tol = 0.0;        // optional global tolerance override
  int samples = 1000;      // covector samples for the symbol sweep
  int trials = 50;         // random-field pairs per lattice adjoint check
  int threads = 1;         // lattice worker threads
  std::string triple_path;
};

const std::vector<std::string>& suite_names();  // excludes "all"
bool valid_suite(const std::string& name);      // includes "all"

// Runs one named suite (algebra, decompose, ellipticity, complex, einstein,
// coefficients, twisted, split) or, for "all", every suite merged in that
// order. Throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace pleb
