#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "pgt/seq.hpp"

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = pgt::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sp, gap and pell") {
  auto r = run({"sp", "--limit", "100"});
  CHECK(r.status == 0);
  CHECK(r.out == "[8,12,18,20,27,28,32,44,45,48,50,52,63,68,72,75,76,80,92,98,99]\n");
  CHECK(run({"sp", "--nth", "76"}).out == "404\n");
  CHECK(run({"sp", "--twins", "--limit", "29"}).out == "[[27,28]]\n");

  auto g = nlohmann::json::parse(run({"gap", "--x", "1"}).out);
  CHECK(g["a"] == "28");
  CHECK(g["b"] == "27");
  CHECK(g["case"] == "i");
  auto p = nlohmann::json::parse(run({"pell", "--d", "6"}).out);
  CHECK(p["m"] == "5");
  CHECK(p["n"] == "2");
}

TEST_CASE("helicoid and census") {
  auto h = nlohmann::json::parse(run({"helicoid", "--gen", "powers:5,10,desc", "--tail", "fixed"}).out);
  CHECK(h["P"] == 6);
  CHECK(h["C"] == 1);
  CHECK(h["distinct"] == 7);
  auto c = run({"census", "--gen", "powers:4,20,desc", "--gen", "fibonacci:30,desc", "--tail", "fixed", "--format",
                "csv"});
  CHECK(c.out == "label,len,P,C,distinct\npowers:4,20,desc,30,1,1,2\nfibonacci:30,desc,40,0,1,1\n");
}

TEST_CASE("triangle round trip") {
  const auto r = run({"triangle", "--gen", "inline:27,28,44,76,98,112"});
  REQUIRE(r.status == 0);
  const auto rows = nlohmann::json::parse(r.out).get<std::vector<pgt::Seq>>();
  REQUIRE(rows.size() == 6);
  CHECK(rows == pgt::TriangleView(rows[0]).rows());
  CHECK(run({"triangle", "--gen", "inline:1,0,1", "--format", "csv"}).out == "1,0,1\n1,1\n0\n");
  CHECK(run({"triangle", "--gen", "inline:27,28,44", "--emit", "edge"}).out == "[[27,1,15]]\n");
  CHECK(run({"edge", "--gen", "inline:27,28,44,76", "--side", "east", "--k", "1"}).out == "[44,16,15]\n");
}

TEST_CASE("rays and tables") {
  const auto r = run({"tables", "--source", "primes", "--limit", "10", "--rays", "1", "--format", "csv"});
  CHECK(r.out == "r,N,z,second_count,diff,h,ratio\n0,3,0,0,0,3,0.00000\n");
  const auto m = run({"rays", "--gen", "inline:7,7,7,7", "--rays", "1", "--paired", "1", "--format", "csv"});
  CHECK(m.out == "r,N,z,second_count,diff,h,ratio\n0,3,3,0,3,0,1.00000\n");
}

TEST_CASE("border and balance") {
  auto b = nlohmann::json::parse(run({"border", "--z", "1", "--rounds", "2"}).out);
  CHECK(b["row"] == std::vector<int>{27, 28, 48, 50, 72, 76});
  auto x = nlohmann::json::parse(run({"balance", "--n", "16", "--exhaustive", "--epsilon", "0.45", "--delta", "1/16"}).out);
  CHECK(x["fraction_within_band"] == "65529/65536");
}

TEST_CASE("render writes SVG to a file") {
  const std::string path = "cli_test_layer.svg";
  auto r = run({"render", "--gen", "inline:3,1,4", "--kind", "layer", "--out", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("config file supplies defaults, flags override") {
  const std::string path = "cli_test.toml";
  {
    std::ofstream f(path);
    f << "[sp]\nlimit = 29\n";
  }
  CHECK(run({"--config", path, "sp"}).out == "[8,12,18,20,27,28]\n");
  CHECK(run({"--config", path, "sp", "--limit", "13"}).out == "[8,12]\n");
  std::remove(path.c_str());
}

TEST_CASE("errors are machine readable") {
  auto r = run({"gap", "--x", "0"});
  CHECK(r.status != 0);
  auto e = nlohmann::json::parse(r.err);
  CHECK(e["error"] == "invalid_argument");
  CHECK(e.contains("message"));

  CHECK(nlohmann::json::parse(run({"helicoid", "--gen", "nonsense:1"}).err)["error"] == "malformed_spec");
  CHECK(nlohmann::json::parse(run({"helicoid", "--gen", "file:/no/such/file"}).err)["error"] == "io");
  CHECK(nlohmann::json::parse(run({"frobnicate"}).err)["error"] == "usage");
  CHECK(nlohmann::json::parse(run({}).err)["error"] == "usage");
  auto o = run({"sp", "--limit", "100", "--out", "/no/such/dir/x.json"});
  CHECK(o.status != 0);
  CHECK(nlohmann::json::parse(o.err)["error"] == "io");
  CHECK(run({"--help"}).status == 0);
}
