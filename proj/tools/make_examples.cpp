// Writes the cos q1 limit experiment and a few function files into a directory.
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "legspec/genfam.hpp"
#include "legspec/io.hpp"

namespace fs = std::filesystem;
using legspec::GeneratingFamily;

namespace {

constexpr int kBase = 32;
constexpr int kMembers = 8;

std::vector<double> torus_values(int n, double (*fn)(double, double)) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      v.push_back(fn(2 * std::numbers::pi * i / n, 2 * std::numbers::pi * j / n));
    }
  }
  return v;
}

double f(double q1, double) { return std::cos(q1); }
double g(double q1, double q2) { return 0.5 * std::cos(q2) + 0.25 * std::sin(q1); }
double morse(double q1, double q2) { return std::cos(q1) + 0.5 * std::cos(q2); }

void write_json(const fs::path& p, const nlohmann::json& j) { legspec::write_text(p, j.dump() + "\n"); }

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? argv[1] : "examples_out";
  fs::create_directories(dir);
  const auto base = torus_values(kBase, f);
  const auto pert = torus_values(kBase, g);
  const legspec::Signature sig{1, 0};

  std::string sequence;
  for (int n = 1; n <= kMembers; ++n) {
    std::vector<double> v(base.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = base[i] + pert[i] / n;
    const auto s = GeneratingFamily::quadratic_plus({kBase, kBase}, v, 1, 5, 2.0, sig);
    const auto name = "member_" + std::to_string(n) + ".json";
    write_json(dir / name, legspec::family_to_json(s));
    sequence += (sequence.empty() ? "" : ", ") + ("\"" + name + "\"");
  }
  write_json(dir / "limit.json",
             legspec::family_to_json(GeneratingFamily::quadratic_plus({kBase, kBase}, base, 1, 5, 2.0, sig)));
  legspec::write_text(dir / "cosq1_experiment.toml",
                      "base = \"T2\"\nresolution = 32\nsequence = [" + sequence +
                          "]\nlimit = \"limit.json\"\nladder = [1, 2, 3]\nout = \"report\"\n");

  legspec::write_text(dir / "cosq1_16.csv", legspec::function_to_csv(torus_values(16, f)));
  legspec::write_text(dir / "morse_16.csv", legspec::function_to_csv(torus_values(16, morse)));
  std::cout << dir.string() << "\n";
  return 0;
}
