#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pleb/report.hpp"

using pleb::Report;
using pleb::RootTwo;

TEST_CASE("pass and fail semantics") {
  Report rep("unit");
  rep.add("numeric pass", "tag-a", 1e-12, 1e-10);
  rep.add("numeric fail", "tag-b", 1e-8, 1e-10);
  rep.add("nan never passes", "tag-c", std::numeric_limits<double>::quiet_NaN(), 1e-10);
  rep.add_exact("exact pass", "tag-d", true);
  rep.add_exact("exact fail", "tag-e", false);
  rep.add_lower_bound("bound pass", "tag-f", 0.5, 0.1);
  rep.add_lower_bound("bound fail", "tag-g", 0.05, 0.1);

  CHECK(!rep.all_pass());
  CHECK(rep.fail_count() == 4);
  CHECK(rep.first_failing_ref() == "tag-b");
  CHECK(rep.checks().size() == 7);
  CHECK(rep.checks()[0].pass);
  CHECK(!rep.checks()[1].pass);
  CHECK(!rep.checks()[2].pass);
  CHECK(rep.checks()[3].pass);
  CHECK(!rep.checks()[4].pass);
  CHECK(rep.checks()[5].pass);
  CHECK(!rep.checks()[6].pass);
}

TEST_CASE("merge keeps order and seed bookkeeping") {
  Report a("first");
  a.add("one", "r1", 0.0, 1e-9, 42);
  Report b("second");
  b.add_exact("two", "r2", true, 7);
  a.merge(b);
  REQUIRE(a.checks().size() == 2);
  CHECK(a.checks()[0].seed == 42);
  CHECK(a.checks()[1].id == "two");
  CHECK(a.checks()[1].seed == 7);
  CHECK(a.all_pass());
  CHECK(a.first_failing_ref().empty());
}

TEST_CASE("json schema is stable") {
  Report rep("schema");
  rep.add("residual check", "eq-tag", 2.5e-13, 1e-10, 3);
  rep.add_exact("exact check", "other-tag", false);

  const nlohmann::json j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("suite") == "schema");
  CHECK(j.at("pass") == false);
  REQUIRE(j.at("checks").size() == 2);
  const auto& c0 = j.at("checks").at(0);
  CHECK(c0.at("check_id") == "residual check");
  CHECK(c0.at("paper_ref") == "eq-tag");
  CHECK(c0.at("status") == "pass");
  CHECK(c0.at("residual").get<double>() == doctest::Approx(2.5e-13));
  CHECK(c0.at("tolerance").get<double>() == doctest::Approx(1e-10));
  CHECK(c0.at("seed") == 3);
  CHECK(j.at("checks").at(1).at("status") == "fail");
}

TEST_CASE("write_json produces a parseable file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "pleb-report-unit.json";
  Report rep("disk");
  rep.add("ok", "tag", 0.0, 1.0);
  rep.write_json(path.string());
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j.at("suite") == "disk");
  fs::remove(path);
}

TEST_CASE("print lists one line per check plus a summary") {
  Report rep("lines");
  rep.add("good", "t", 0.0, 1.0);
  rep.add_exact("bad", "u", false);
  std::ostringstream os;
  rep.print(os);
  const std::string text = os.str();
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("1/2") != std::string::npos);
}

TEST_CASE("exact scalars cross process boundaries as p,q pairs") {
  const RootTwo v{pleb::Rational(3, 4), pleb::Rational(-1, 2)};
  const std::string j = pleb::root_two_to_json(v);
  const nlohmann::json parsed = nlohmann::json::parse(j);
  CHECK(parsed.at("p").at(0) == 3);
  CHECK(parsed.at("p").at(1) == 4);
  CHECK(parsed.at("q").at(0) == -1);
  CHECK(parsed.at("q").at(1) == 2);
  CHECK(pleb::root_two_from_json(j) == v);
  CHECK(pleb::root_two_from_json(pleb::root_two_to_json(RootTwo::sqrt2())) == RootTwo::sqrt2());
}
