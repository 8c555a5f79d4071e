#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "legspec/builtins.hpp"
#include "legspec/genfam.hpp"
#include "legspec/io.hpp"

namespace fs = std::filesystem;
using namespace legspec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "legspec_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string morse_csv(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      v.push_back(std::cos(2 * std::numbers::pi * i / n) + 0.5 * std::cos(2 * std::numbers::pi * j / n));
    }
  }
  return function_to_csv(v);
}

}  // namespace

TEST_CASE("homology and cup-length") {
  CHECK(run({"homology", "--model", "T2"}).out == "1 2 1\n");
  CHECK(run({"homology", "--model", "S2", "--field", "q"}).out == "1 0 1\n");
  const auto path = scratch() / "t2.json";
  write_text(path, complex_to_json(torus(2, 8)).dump());
  const auto r = run({"cuplength", "--complex", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "3\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"homology", "--model", "K3"}).code == cli::kCapabilityError);
  CHECK(run({"homology", "--complex", "/nonexistent.json"}).code == cli::kInputError);
  CHECK(run({"cuplength", "--model", "T2", "--field", "q"}).code == cli::kCapabilityError);
  CHECK(run({"homology", "--model", "T2", "--field", "z"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kOk);
  const auto bad = run({"cls", "--model", "T2", "--resolution", "4", "--function", "/nonexistent.csv"});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("nonexistent.csv") != std::string::npos);
}

TEST_CASE("selector commands") {
  const auto dir = scratch();
  write_text(dir / "morse.csv", morse_csv(8));
  const auto r = run({"essential", "--model", "T2", "--function", (dir / "morse.csv").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "-1.5\n-0.5\n0.5\n1.5\n");
  CHECK(run({"cls", "--model", "T2", "--function", (dir / "morse.csv").string(), "--class", "fund"}).out == "1.5\n");
  const auto ls = run({"ls-check", "--model", "T2", "--function", (dir / "morse.csv").string()});
  CHECK(ls.out == "no coincidence\n");
}

TEST_CASE("family commands") {
  const auto dir = scratch();
  const auto zero = GeneratingFamily::quadratic_plus({8, 8}, std::vector<double>(64, 0.0), 1, 3, 2.0, {1, 0});
  write_text(dir / "zero_q.json", family_to_json(zero).dump());
  const auto g = (dir / "zero_q.json").string();
  CHECK(run({"ell", "--gfqi", g, "--class", "pt"}).out == "0\n");
  CHECK(run({"gamma", "--gfqi", g}).out == "0\n");
  CHECK(run({"spec", "--gfqi", g}).out == "0\n");
  CHECK(run({"hausdorff", "--gfqi", g, "--gfqi", g}).out == "0\n");
  const auto fr = run({"front", "--gfqi", g});
  CHECK(fr.out.rfind("q1,q2,p1,p2,z\n", 0) == 0);
  write_text(dir / "zero.csv", fr.out);
  CHECK(run({"spec", "--front", (dir / "zero.csv").string(), "--eps-p", "0.5"}).out == "0\n");
  CHECK(run({"spec", "--front", (dir / "zero.csv").string(), "--eps-p", "-1"}).code == cli::kInputError);
  const auto sum = run({"oplus", "--gfqi", g, "--gfqi", g});
  REQUIRE(sum.code == 0);
  const auto j = nlohmann::json::parse(sum.out);
  CHECK(j["fiber_dim"] == 2);
  CHECK(j["sum_smoothness_verified"] == false);
  CHECK(run({"oplus", "--gfqi", g}).code == cli::kInputError);
}

TEST_CASE("reports embed their tolerances") {
  const auto dir = scratch();
  const auto zero = GeneratingFamily::quadratic_plus({8}, std::vector<double>(8, 0.0), 1, 3, 2.0, {1, 0});
  write_text(dir / "circle_q.json", family_to_json(zero).dump());
  fs::create_directories(dir / "out");
  const auto r = run({"spec", "--gfqi", (dir / "circle_q.json").string(), "--out", (dir / "out").string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(read_text(dir / "out" / "spec.json"));
  CHECK(j.contains("eps_p"));
  CHECK(j.contains("delta_z"));
}

TEST_CASE("limit-check") {
  const auto dir = scratch() / "limit";
  fs::create_directories(dir);
  const auto zero = GeneratingFamily::quadratic_plus({12}, std::vector<double>(12, 0.0), 1, 3, 2.0, {1, 0});
  write_text(dir / "zero.json", family_to_json(zero).dump());
  SUBCASE("zero section on the circle") {
    write_text(dir / "run.toml",
               "base = \"S1\"\nsequence = [\"zero.json\", \"zero.json\"]\nladder = [1, 2]\nout = \"report\"\n");
    const auto r = run({"limit-check", "--config", (dir / "run.toml").string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("spec_size=1\n") != std::string::npos);
    CHECK(r.out.find("cl=2\n") != std::string::npos);
    CHECK(r.out.find("verdict=nontrivial\n") != std::string::npos);
    const auto j = nlohmann::json::parse(read_text(dir / "report" / "limit_check.json"));
    CHECK(j["tolerances"].contains("eps_p"));
    CHECK(j["members"][0]["ell"].size() == 3);
    // identical inputs give identical output
    CHECK(run({"limit-check", "--config", (dir / "run.toml").string()}).out == r.out);
  }
  SUBCASE("hypothesis not met") {
    std::vector<double> f;
    for (int i = 0; i < 12; ++i) f.push_back(std::cos(2 * std::numbers::pi * i / 12));
    write_text(dir / "morse.json",
               family_to_json(GeneratingFamily::quadratic_plus({12}, f, 1, 3, 2.0, {1, 0})).dump());
    const auto r = run({"limit-check", "--gfqi", (dir / "morse.json").string()});
    CHECK(r.code == cli::kHypothesisNotMet);
    CHECK(r.out.find("verdict=hypothesis not met") != std::string::npos);
  }
  SUBCASE("config errors") {
    write_text(dir / "bad.toml", "base = \"T2\"\nsequence = []\n");
    const auto r = run({"limit-check", "--config", (dir / "bad.toml").string()});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("sequence") != std::string::npos);
    write_text(dir / "missing.toml", "sequence = [\"nope.json\"]\n");
    CHECK(run({"limit-check", "--config", (dir / "missing.toml").string()}).code == cli::kInputError);
    write_text(dir / "s2.toml", "base = \"S2\"\nsequence = [\"zero.json\"]\n");
    CHECK(run({"limit-check", "--config", (dir / "s2.toml").string()}).code == cli::kCapabilityError);
    write_text(dir / "neg.toml", "base = \"S1\"\nsequence = [\"zero.json\"]\neps_p = -1.0\n");
    CHECK(run({"limit-check", "--config", (dir / "neg.toml").string()}).code == cli::kInputError);
    write_text(dir / "broken.toml", "base = \n");
    CHECK(run({"limit-check", "--config", (dir / "broken.toml").string()}).code == cli::kInputError);
  }
}
