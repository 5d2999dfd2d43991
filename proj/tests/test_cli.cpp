#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = normgate::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::pair<double, double>> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/normgate_test_" + name;
}

}  // namespace

TEST_CASE("curve: the quintic peak") {
  const Run r = run({"curve", "--a=-2", "--b=2", "--c=1", "--phi=power:0,1,5", "--range=0,1", "--n=1000"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,norm\n", 0) == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1000);
  auto best = rows.front();
  for (const auto& row : rows)
    if (row.second > best.second) best = row;
  CHECK(std::abs(best.first - 0.9431) < 2e-3);
  CHECK(std::abs(best.second - 2.2384) < 5e-4);
}

TEST_CASE("curve: zero parameters") {
  const Run r = run({"curve", "--a=0", "--b=0", "--c=0", "--phi=power:0,0,0", "--range=0,1", "--n=3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "t,norm\n0,0\n0.5,0.5\n1,1\n");
}

TEST_CASE("curve: log phi is increasing, and output is deterministic") {
  const std::vector<std::string> args{"curve", "--phi=log:1", "--range=0,3", "--n=500"};
  const Run r = run(args);
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].second > rows[i - 1].second);
  CHECK(run(args).out == r.out);
}

TEST_CASE("curve: file output round-trips as a table phi") {
  const std::string path = temp_path("curve.csv");
  REQUIRE(run({"curve", "--a=1", "--b=1", "--c=1", "--phi=log:1", "--n=201", "--out=" + path}).code == 0);
  const Run c = run({"certify", "--phi=table:" + path, "--range=0,1", "--a=1", "--b=1", "--c=1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("COR27_PARAMS") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("curve: parse errors exit 2") {
  CHECK(run({"curve"}).code == 2);
  CHECK(run({"curve", "--phi=power:1"}).code == 2);
  CHECK(run({"curve", "--phi=log:1", "--a=abc"}).code == 2);
  CHECK(run({"curve", "--phi=log:1", "--range=1"}).code == 2);
  CHECK(run({"curve", "--phi=log:1", "--n=1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("certify exit codes") {
  const Run four = run({"certify", "--phi=power:1,1,4"});
  CHECK(four.code == 0);
  CHECK(four.out.find("COR24_ALPHA") != std::string::npos);

  const Run five = run({"certify", "--phi=power:0,1,5"});
  CHECK(five.code == 3);
  CHECK(five.out.find("violation_point: 1") != std::string::npos);

  CHECK(run({"certify", "--phi=log:2"}).code == 0);
  // Non-monotone phi with no parameters: nothing can be certified.
  const std::string path = temp_path("dip.csv");
  {
    std::ofstream f(path);
    f << "t,phi\n0,1\n1,0.5\n2,3\n";
  }
  CHECK(run({"certify", "--phi=table:" + path, "--range=0,2"}).code == 4);
  std::remove(path.c_str());
}

TEST_CASE("counterexample") {
  const Run r = run({"counterexample", "--phi=power:0,2,5", "--t0=1", "--margin=20"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("params: a=-2 b=1 c=1") != std::string::npos);
  CHECK(r.out.find("witness_t:") != std::string::npos);
  CHECK(run({"counterexample", "--phi=log:1", "--t0=1"}).code == 1);
  CHECK(run({"counterexample", "--phi=power:0,1,5"}).code == 2);
}

TEST_CASE("analyze presets") {
  const Run b = run({"analyze", "--preset=bergman"});
  CHECK(b.code == 0);
  CHECK(b.out.find("witness: 0.9428090415820633") != std::string::npos);
  const Run m = run({"analyze", "--preset=mult-op", "--d=1", "--a=1", "--b=1", "--c=1", "--phi=log:1"});
  CHECK(m.code == 5);
  CHECK(m.out.find("THM_38_MONOTONE") != std::string::npos);
  const Run e = run({"analyze", "--preset=ex313"});
  CHECK(e.code == 5);
  CHECK(e.out.find("LEMMA_35_SINGLETON") != std::string::npos);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--preset=hardy"}).code == 2);
}

TEST_CASE("analyze a JSON spectrum with two maximizers") {
  const std::string path = temp_path("spec.json");
  {
    std::ofstream f(path);
    f << R"({"bound": 1, "intervals": [[0, 0.5]], "limit_points": [1]})";
  }
  // phi = 0 and p = 0 give ||M_t|| = t: single maximizer at the limit point 1.
  const Run r = run({"analyze", "--spec=" + path, "--a=0", "--b=0", "--c=0", "--phi=power:0,0,0"});
  CHECK(r.code == 5);
  {
    std::ofstream f(path);
    f << R"({"bound": 1, "eigenvalues": [0.5], "extra": true})";
  }
  CHECK(run({"analyze", "--spec=" + path}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("reproduce") {
  const Run r = run({"reproduce", "ex24"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"reproduce", "ex311"}).code == 0);
  CHECK(run({"reproduce", "ex313"}).code == 0);
  CHECK(run({"reproduce", "nope"}).code == 2);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", "--seed=42", "--trials=20", "--max-dim=16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"oracle", "--seed=42", "--trials=20", "--max-dim=16"}).out == r.out);
  const Run zero = run({"oracle", "--trials=0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("trials: 0") != std::string::npos);
  const Run scalar = run({"oracle", "--max-dim=1", "--trials=10"});
  CHECK(scalar.code == 0);
  // 1x1 A: the brute-force norm and the closed form differ only by round-off.
  const auto pos = scalar.out.find("max_dev_scalar: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(scalar.out.substr(pos + 16)) < 1e-14);
  CHECK(run({"oracle", "--max-dim=0"}).code == 2);
}
