#include "pleb/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace pleb {

void Report::add(const std::string& id, const std::string& ref, double residual,
                 double tolerance, std::uint64_t seed) {
  CheckResult c;
  c.id = id;
  c.ref = ref;
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.seed = seed;
  checks_.push_back(std::move(c));
}

void Report::add_exact(const std::string& id, const std::string& ref, bool pass,
                       std::uint64_t seed) {
  CheckResult c;
  c.id = id;
  c.ref = ref;
  c.residual = pass ? 0.0 : 1.0;
  c.tolerance = 0.0;
  c.pass = pass;
  c.seed = seed;
  checks_.push_back(std::move(c));
}

void Report::add_lower_bound(const std::string& id, const std::string& ref, double value,
                             double bound, std::uint64_t seed) {
  CheckResult c;
  c.id = id;
  c.ref = ref;
  c.residual = value;
  c.tolerance = bound;
  c.pass = std::isfinite(value) && value > bound;
  c.seed = seed;
  checks_.push_back(std::move(c));
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (!c.pass) ++n;
  return n;
}

std::string Report::first_failing_ref() const {
  for (const auto& c : checks_)
    if (!c.pass) return c.ref;
  return {};
}

void Report::print(std::ostream& os) const {
  for (const auto& c : checks_) {
    os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << c.id
       << std::setw(16) << c.ref << std::right << "residual "
       << std::scientific << std::setprecision(3) << c.residual << "  tol "
       << std::setprecision(1) << c.tolerance << '\n';
    os << std::defaultfloat;
  }
  const std::size_t fails = fail_count();
  os << "suite " << suite_ << ": " << (checks_.size() - fails) << "/"
     << checks_.size() << " checks passed\n";
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite_;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"check_id", c.id},
                           {"paper_ref", c.ref},
                           {"status", c.pass ? "pass" : "fail"},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"seed", c.seed}});
  }
  return j.dump(2);
}

void Report::write_json(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("report: cannot open " + path);
  out << to_json() << '\n';
}

std::string root_two_to_json(const RootTwo& v) {
  nlohmann::json j;
  j["p"] = {v.a.num, v.a.den};
  j["q"] = {v.b.num, v.b.den};
  return j.dump();
}

RootTwo root_two_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const auto rat = [&](const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 2)
      throw std::invalid_argument("exact scalar: expected [num, den]");
    return Rational(arr[0].get<std::int64_t>(), arr[1].get<std::int64_t>());
  };
  return RootTwo(rat("p"), rat("q"));
}

}  // namespace pleb
