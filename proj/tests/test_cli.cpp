// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mrenewal/cli.hpp"

using namespace mrenewal::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("parse_grid") {
  CHECK(parse_grid("1:1:1") == std::vector<double>{1.0});
  CHECK(parse_grid("2:5:1") == std::vector<double>{2.0});
  CHECK(parse_grid("0:1:5") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto g = parse_grid("0.1:0.7:7");
  CHECK(g.size() == 7);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.7);
  CHECK_THROWS(parse_grid("1:2"));
  CHECK_THROWS(parse_grid("1:2:0"));
  CHECK_THROWS(parse_grid("1:2:3:4"));
  CHECK_THROWS(parse_grid("a:2:3"));
  CHECK_THROWS(parse_grid("1:2:2.5"));
}

TEST_CASE("format_number uses 17 significant digits") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("transform identity case") {
  const auto r = invoke({"transform", "--i", "0", "--j", "0", "--s-grid", "1:1:1", "--lambda",
                         "0", "--alpha", "1", "--solver", "both"});
  CHECK(r.code == kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "s,rbar_oracle,rbar_closedform,rel_diff");
  CHECK(l[1] == "1,1,1,0");
}

TEST_CASE("transform column sets per solver and row counts") {
  auto run_solver = [](const char* solver) {
    return invoke({"transform", "--i", "1", "--j", "2", "--s-grid", "0.5:2:4", "--lambda", "1",
                   "--alpha", "1", "--solver", solver});
  };
  const auto o = run_solver("oracle");
  CHECK(lines(o.out)[0] == "s,rbar_oracle");
  CHECK(lines(o.out).size() == 5);
  const auto c = run_solver("closedform");
  CHECK(lines(c.out)[0] == "s,rbar_closedform");
  const auto b = run_solver("both");
  CHECK(lines(b.out).size() == 5);
  CHECK(lines(b.out)[4].rfind("2,", 0) == 0);
  // Deterministic output is bit-stable.
  CHECK(run_solver("both").out == b.out);
}

TEST_CASE("hyperg prints one value") {
  const auto r = invoke({"hyperg", "--a", "1", "--b", "2", "--z", "1"});
  CHECK(r.code == kExitOk);
  CHECK(std::abs(std::stod(r.out) - 1.718281828459045) < 1e-15);
  const auto neg = invoke({"hyperg", "--a", "2", "--b", "3", "--z", "-1"});
  CHECK(neg.code == kExitOk);
  CHECK(std::abs(std::stod(neg.out) - (2.0 - 4.0 * std::exp(-1.0))) < 1e-15);
}

TEST_CASE("renewal and simulate CSV") {
  const auto r = invoke({"renewal", "--i", "1", "--j", "0", "--t-grid", "1:1:1", "--lambda", "0",
                         "--alpha", "1", "--method", "gs", "--order", "14"});
  CHECK(r.code == kExitOk);
  const auto rl = lines(r.out);
  REQUIRE(rl.size() == 2);
  CHECK(rl[0] == "t,R");
  CHECK(std::abs(std::stod(rl[1].substr(2)) - (1.0 - std::exp(-1.0))) < 1e-5);

  const std::vector<std::string> sim = {"simulate", "--i", "0", "--j", "0", "--t-grid", "0.5:2:4",
                                        "--lambda", "1", "--alpha", "1", "--paths", "3000",
                                        "--seed", "9"};
  const auto s1 = invoke(sim);
  CHECK(s1.code == kExitOk);
  CHECK(lines(s1.out)[0] == "t,mean,std_error");
  CHECK(lines(s1.out).size() == 5);
  auto sim4 = sim;
  sim4.insert(sim4.end(), {"--workers", "4"});
  CHECK(invoke(sim4).out == s1.out);
}

TEST_CASE("usage errors exit 2, numerical failures exit 1") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"transform", "--i", "0"}).code == kExitUsage);
  CHECK(invoke({"bogus"}).code == kExitUsage);
  const auto bad_grid = invoke({"transform", "--i", "0", "--j", "0", "--s-grid", "1:2", "--lambda",
                                "1", "--alpha", "1"});
  CHECK(bad_grid.code == kExitUsage);
  CHECK(bad_grid.err.find("A:B:N") != std::string::npos);
  CHECK(invoke({"transform", "--i", "0", "--j", "0", "--s-grid", "0:1:2", "--lambda", "1",
                "--alpha", "1"})
            .code == kExitUsage);
  CHECK(invoke({"renewal", "--i", "0", "--j", "0", "--t-grid", "1:1:1", "--lambda", "1", "--alpha",
                "1", "--method", "euler", "--solver", "closedform"})
            .code == kExitUsage);
  CHECK(invoke({"hyperg", "--a", "1", "--b", "-2", "--z", "1"}).code == kExitUsage);

  const auto capped = invoke({"simulate", "--i", "0", "--j", "0", "--t-grid", "10:10:1", "--lambda",
                              "5", "--alpha", "1", "--paths", "10", "--max-events", "3"});
  CHECK(capped.code == kExitNumerical);
  CHECK(capped.err.find("max_events") != std::string::npos);
}

TEST_CASE("validate --quick passes") {
  const auto r = invoke({"validate", "--quick"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
