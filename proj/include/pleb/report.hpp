#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pleb/exact.hpp"

namespace pleb {

// One verified statement: a residual compared against a tolerance. Exact
// (symbolic) checks are recorded with residual 0 or 1 and tolerance 0, so
// the same record type covers both arithmetic regimes.
struct CheckResult {
  std::string id;        // machine name of the individual check
  std::string ref;       // stable tag naming the identity family it belongs to
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  // Numeric check: passes iff residual <= tolerance and residual is finite.
  void add(const std::string& id, const std::string& ref, double residual,
           double tolerance, std::uint64_t seed = 0);
  // Exact check: pass/fail decided in exact arithmetic by the caller.
  void add_exact(const std::string& id, const std::string& ref, bool pass,
                 std::uint64_t seed = 0);
  // Threshold check from below: passes iff value > bound (negative results
  // and separation ratios); the measured value is logged as the residual.
  void add_lower_bound(const std::string& id, const std::string& ref, double value,
                       double bound, std::uint64_t seed = 0);
  void merge(const Report& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t fail_count() const;
  // ref tag of the first failing check; empty string when everything passes
  std::string first_failing_ref() const;

  // one line per check plus a summary line
  void print(std::ostream& os) const;

  // {"suite":..., "pass":..., "checks":[{check_id, paper_ref, status,
  //  residual, tolerance, seed}, ...]}
  std::string to_json() const;
  void write_json(const std::string& path) const;

 private:
  std::string suite_ = "report";
  std::vector<CheckResult> checks_;
};

// Exact scalars cross process boundaries as {"p":[num,den],"q":[num,den]}
// meaning p + q*sqrt(2).
std::string root_two_to_json(const RootTwo& v);
RootTwo root_two_from_json(const std::string& text);

}  // namespace pleb
