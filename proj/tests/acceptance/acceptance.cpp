// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "legspec/builtins.hpp"
#include "legspec/genfam.hpp"
#include "legspec/homology.hpp"
#include "legspec/io.hpp"
#include "legspec/minmax.hpp"
#include "legspec/products.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace legspec;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Fn>
double timed(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

std::vector<double> grid_fn(int n, const std::function<double(double, double)>& fn) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v.push_back(fn(2 * kPi * i / n, 2 * kPi * j / n));
  }
  return v;
}

// Multiples of 2^-10, so sums of a few values and dyadic shifts are exact.
std::vector<double> random_function(oracle::Gen& g, std::size_t n, int side) {
  std::vector<double> v;
  if (side > 0 && g.integer(0, 1) == 0) {
    v = g.torus_wave(side);
  } else {
    v.resize(n);
    for (auto& x : v) x = g.uniform(-2, 2);
  }
  for (auto& x : v) x = std::round(x * 1024) / 1024;
  return v;
}

// f + Q with dyadic noise on the interior fiber nodes, so ell is not just c_ls.
GeneratingFamily random_family(oracle::Gen& g, int base, int k, int m, Signature sig) {
  const auto f = random_function(g, static_cast<std::size_t>(base * base), base);
  const auto s = GeneratingFamily::quadratic_plus({base, base}, f, k, m, 2.0, sig);
  auto values = s.values();
  const std::size_t nf = s.fiber_nodes();
  const auto fiber = s.fiber_grid();
  for (std::size_t b = 0; b < s.base_nodes(); ++b) {
    for (std::size_t e = 0; e < nf; ++e) {
      std::vector<int> pos(static_cast<std::size_t>(k));
      fiber.vertex_position(e, pos);
      const bool outer = std::any_of(pos.begin(), pos.end(), [&](int x) { return x == 0 || x == m - 1; });
      if (!outer) values[b * nf + e] += g.integer(-64, 64) / 128.0;
    }
  }
  return s.with_values(values);
}

// ---------------------------------------------------------------- criteria

Outcome ac1() {
  const std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"point", {1}}, {"S1", {1, 1}}, {"T2", {1, 2, 1}}, {"S2", {1, 0, 1}}, {"T3", {1, 3, 3, 1}}};
  Outcome o;
  double worst = 0;
  for (const auto& [id, expected] : cases) {
    std::vector<int> betti;
    const double t = timed([&] { betti = betti_numbers(builtin(id, default_resolution(id))); });
    worst = std::max(worst, t);
    const auto dense = oracle::betti(builtin(id, default_resolution(id)));
    if (betti != expected || dense != expected || t >= 1.0) {
      o.pass = false;
      o.detail += id + " mismatch or slow; ";
    }
  }
  o.detail += "5 models, slowest " + std::to_string(worst) + " s";
  return o;
}

int sphere_cup_length_oracle(const CellComplex& s2) {
  // Only the point class has degree != 2, and pt ∩ pt has negative degree.
  return s2.basis().betti(0) > 0 ? 2 : 1;
}

Outcome ac2() {
  Outcome o;
  double worst = 0;
  struct Case {
    std::string id;
    int expected;
    int oracle;
  };
  const std::vector<Case> cases{{"point", 1, 1},
                                {"S1", 2, oracle::torus_cup_length(1)},
                                {"S2", 2, sphere_cup_length_oracle(sphere(0))},
                                {"T2", 3, oracle::torus_cup_length(2)},
                                {"T3", 4, oracle::torus_cup_length(3)}};
  for (const auto& c : cases) {
    const int res = default_resolution(c.id);
    int base = 0, doubled = 0;
    const double t1 = timed([&] { base = cup_length(builtin(c.id, res)); });
    // S2 refines by one subdivision level, which quadruples the faces.
    const double t2 = timed([&] { doubled = cup_length(builtin(c.id, c.id == "S2" ? res + 1 : 2 * res)); });
    worst = std::max({worst, t1, t2});
    if (base != c.expected || base != c.oracle || doubled != base || t1 >= 5 || t2 >= 5) {
      o.pass = false;
      o.detail += c.id + " cl=" + std::to_string(base) + "/" + std::to_string(doubled) + "; ";
    }
  }
  // Independent route through Alexander-Whitney on triangulated models.
  const int aw_t2 = cup_length(IntersectionTable::from_cup_products(simplicial_torus(2, 3)));
  const int aw_s2 = cup_length(IntersectionTable::from_cup_products(sphere(1)));
  if (aw_t2 != 3 || aw_s2 != 2) {
    o.pass = false;
    o.detail += "cup-product route disagrees; ";
  }
  o.detail += "5 models at two resolutions, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome ac3() {
  Outcome o;
  oracle::Gen g(0x5eed03);
  int functions = 0, violations = 0;
  long pair_checks = 0;
  const auto t0 = Clock::now();
  for (const auto& c : {circle(16), torus(2, 16)}) {
    const IntersectionTable table(c);
    const auto betti = c.basis().betti();
    const auto classes = HomologyClass::all_nonzero(betti);
    const int side = c.dimension() == 2 ? 16 : 0;
    for (int trial = 0; trial < 25; ++trial, ++functions) {
      const SampledFunction f(c, random_function(g, c.vertex_count(), side));
      const double shift = g.dyadic();
      const auto fs = f.shifted(shift);
      const FiltrationSweep sweep(f);
      const FiltrationSweep shifted(fs);
      std::map<HomologyClass, double> value;
      for (const auto& a : classes) {
        const double v = sweep.entry_value(a);
        value[a] = v;
        if (v != c_ls(a, f)) ++violations;
        if (std::find(f.values().begin(), f.values().end(), v) == f.values().end()) ++violations;
        if (shifted.entry_value(a) != v + shift) ++violations;
      }
      if (value[HomologyClass::point(betti)] != f.min()) ++violations;
      if (value[HomologyClass::fundamental(betti)] != f.max()) ++violations;
      for (const auto& a : classes) {
        for (const auto& b : classes) {
          const auto ab = table.product(a, b);
          if (ab.is_zero()) continue;
          ++pair_checks;
          if (value[ab] > value[a]) ++violations;
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.pass = violations == 0 && functions >= 50 && t < 60;
  o.detail = std::to_string(functions) + " functions, " + std::to_string(pair_checks) + " product pairs, " +
             std::to_string(violations) + " violations, " + std::to_string(t) + " s";
  return o;
}

CellComplex rp2() {
  const std::vector<std::vector<int>> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  return CellComplex(SimplicialComplex::from_simplices(6, t), "RP2");
}

Outcome ac4() {
  Outcome o;
  oracle::Gen g(0x5eed04);
  int complexes = 0, mismatches = 0;
  long checks = 0;
  for (const auto& c : {circle(8), torus(2, 5), torus(2, 7), sphere(1), sphere(2), simplicial_torus(2, 3), rp2()}) {
    if (c.cell_count() > 200) continue;
    ++complexes;
    for (int trial = 0; trial < 8; ++trial) {
      // coarse dyadic values force ties, the awkward case for a sweep
      std::vector<double> v(c.vertex_count());
      for (auto& x : v) x = g.integer(-6, 6) / 4.0;
      const SampledFunction f(c, v);
      for (const auto& a : HomologyClass::all_nonzero(c.basis().betti())) {
        ++checks;
        if (c_ls(a, f) != oracle::cls(c, v, a)) ++mismatches;
      }
    }
  }
  o.pass = mismatches == 0 && complexes == 7;
  o.detail = std::to_string(complexes) + " complexes, " + std::to_string(checks) + " class values, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome ac5() {
  Outcome o;
  oracle::Gen g(0x5eed05);
  const int n = 16, m = 17;
  const auto t2 = torus(2, n);
  const std::vector<Signature> signatures{{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
  int functions = 0, mismatches = 0;
  long checks = 0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 20; ++trial, ++functions) {
    const auto f = random_function(g, n * n, n);
    const SampledFunction sf(t2, f);
    const auto classes = HomologyClass::all_nonzero(t2.basis().betti());
    for (const auto& sig : signatures) {
      const SpectralSelector sel(
          GeneratingFamily::quadratic_plus({n, n}, f, sig.negative + sig.positive, m, 2.0, sig));
      for (const auto& a : classes) {
        ++checks;
        if (sel.ell(a) != c_ls(a, sf)) ++mismatches;
      }
    }
  }
  const double t = seconds_since(t0);
  o.pass = mismatches == 0 && t < 300;
  o.detail = std::to_string(functions) + " functions, " + std::to_string(checks) + " (class, family) values, " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(t) + " s";
  return o;
}

Outcome ac6() {
  Outcome o;
  oracle::Gen g(0x5eed06);
  const int n = 8, m = 5;
  const IntersectionTable table(torus(2, n));
  const auto classes = HomologyClass::all_nonzero(table.betti());
  int pairs = 0, violations = 0;
  long checks = 0;
  for (int trial = 0; trial < 50; ++trial, ++pairs) {
    const Signature sa{g.integer(0, 1), 0}, sb{g.integer(0, 1), 0};
    const auto s = random_family(g, n, 1, m, {sa.negative, 1 - sa.negative});
    const auto t = random_family(g, n, 1, m, {sb.negative, 1 - sb.negative});
    const SpectralSelector ls(s), lt(t), lsum(oplus(s, t));
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        const auto ab = table.product(a, b);
        if (ab.is_zero()) continue;
        ++checks;
        if (lsum.ell(ab) > ls.ell(a) + lt.ell(b)) ++violations;
      }
    }
  }
  o.pass = violations == 0 && pairs >= 50;
  o.detail = std::to_string(pairs) + " family pairs, " + std::to_string(checks) + " admissible (a, b), " +
             std::to_string(violations) + " violations";
  return o;
}

Outcome ac7() {
  Outcome o;
  oracle::Gen g(0x5eed07);
  const int n = 12, m = 7;
  int pairs = 0, violations = 0;
  for (int trial = 0; trial < 24; ++trial, ++pairs) {
    const int k = 1 + trial % 2;
    const int neg = g.integer(0, k);
    const auto s = random_family(g, n, k, m, {neg, k - neg});
    auto values = s.values();
    const double amp = g.uniform(0.01, 1.0);
    for (auto& v : values) v += amp * g.uniform(-1, 1);
    const auto t = s.with_values(values);
    const double dist = s.max_abs_difference(t);
    const SpectralSelector a(s), b(t);
    for (const auto& cls : HomologyClass::all_nonzero(a.base_betti())) {
      if (std::abs(a.ell(cls) - b.ell(cls)) > dist) ++violations;
    }
  }
  o.pass = violations == 0 && pairs >= 20;
  o.detail = std::to_string(pairs) + " pairs x 15 classes, tolerance 0, " + std::to_string(violations) + " violations";
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

fs::path workdir() {
  const auto dir = fs::temp_directory_path() / "legspec_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Outcome ac8(const fs::path& dir) {
  Outcome o;
  const auto t0 = Clock::now();
  const int n = 32;
  const auto f = grid_fn(n, [](double a, double) { return std::cos(a); });
  // fixed Morse perturbation
  const auto g = grid_fn(n, [](double a, double b) { return 0.5 * std::cos(b) + 0.25 * std::sin(a); });
  std::string sequence;
  for (int k = 1; k <= 8; ++k) {
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + g[i] / k;
    const auto name = "member_" + std::to_string(k) + ".json";
    write_text(dir / name, family_to_json(GeneratingFamily::quadratic_plus({n, n}, v, 1, 5, 2.0, {1, 0})).dump());
    sequence += (sequence.empty() ? "\"" : ", \"") + name + "\"";
  }
  write_text(dir / "limit.json", family_to_json(GeneratingFamily::quadratic_plus({n, n}, f, 1, 5, 2.0, {1, 0})).dump());
  write_text(dir / "cosq1_experiment.toml", "base = \"T2\"\nresolution = 32\nsequence = [" + sequence +
                                                "]\nlimit = \"limit.json\"\nladder = [1, 2, 3]\nout = \"report\"\n");
  const auto r = cli_run({"limit-check", "--config", (dir / "cosq1_experiment.toml").string()});
  const double t = seconds_since(t0);
  auto has = [&](const std::string& s) { return r.out.find(s) != std::string::npos; };
  bool ranks_ok = false;
  std::size_t levels = 0;
  if (fs::exists(dir / "report" / "limit_check.json")) {
    const auto j = nlohmann::json::parse(read_text(dir / "report" / "limit_check.json"));
    ranks_ok = true;
    for (const auto& level : j["levels"]) {
      ++levels;
      std::vector<int> radii;
      for (const auto& rr : level["report"]["radii"]) {
        radii.push_back(rr["radius"]);
        ranks_ok = ranks_ok && rr["ranks"][0].get<int>() >= 1;
      }
      ranks_ok = ranks_ok && radii == std::vector<int>{1, 2, 3};
    }
  }
  o.pass = r.code == 0 && has("decreasing=true\n") && has("spec_size=2\n") && has("cl=3\n") &&
           has("verdict=nontrivial\n") && !has("verdict=trivial") && levels == 2 && ranks_ok && t < 120;
  o.detail = "exit " + std::to_string(r.code) + ", " + std::to_string(levels) + " levels, " + std::to_string(t) + " s";
  if (!o.pass) o.detail += "\n" + r.out;
  return o;
}

Outcome ac9(const fs::path& dir) {
  Outcome o;
  const int n = 16;
  write_text(dir / "cosq1.csv", function_to_csv(grid_fn(n, [](double a, double) { return std::cos(a); })));
  write_text(dir / "morse.csv",
             function_to_csv(grid_fn(n, [](double a, double b) { return std::cos(a) + 0.5 * std::cos(b); })));
  const std::vector<std::string> cos_args{"ls-check", "--model", "T2", "--resolution", "16", "--function",
                                          (dir / "cosq1.csv").string()};
  const std::vector<std::string> morse_args{"ls-check", "--model", "T2", "--resolution", "16", "--function",
                                            (dir / "morse.csv").string()};
  const auto c1 = cli_run(cos_args), c2 = cli_run(cos_args);
  const auto m1 = cli_run(morse_args), m2 = cli_run(morse_args);
  const auto ess = cli_run({"essential", "--model", "T2", "--resolution", "16", "--function",
                            (dir / "morse.csv").string()});
  const auto essential_count = std::count(ess.out.begin(), ess.out.end(), '\n');
  const bool cos_ok = c1.code == 0 && c1.out.find("coincidence alpha=") != std::string::npos &&
                      c1.out.find("verdict=nontrivial") != std::string::npos &&
                      c1.out.find("verdict=trivial") == std::string::npos;
  const bool morse_ok = m1.code == 0 && m1.out == "no coincidence\n" && essential_count == 4;
  o.pass = cos_ok && morse_ok && c1.out == c2.out && m1.out == m2.out;
  o.detail = std::string("cos q1 ") + (cos_ok ? "coincidence, nontrivial" : "unexpected") + "; Morse " +
             std::to_string(essential_count) + " essential values, " + (morse_ok ? "no coincidence" : "unexpected") +
             "; repeat runs " + (c1.out == c2.out && m1.out == m2.out ? "identical" : "differ");
  return o;
}

Outcome ac10() {
  Outcome o;
  oracle::Gen g(0x5eed10);
  const int n = 16, m = 9, steps = 10;
  int families = 0, violations = 0;
  std::size_t moved = 0;
  for (int trial = 0; trial < 6; ++trial, ++families) {
    const int k = 1 + trial % 2;
    const auto s0 = random_family(g, n, k, m, {trial % 2, k - trial % 2});
    const SpectralSelector sel0(s0);
    const auto& crit = sel0.critical_values();
    // Nodes whose value keeps a margin of 2 eta from every critical value.
    const double eta = 1.0 / 256;
    std::vector<double> direction(s0.values().size(), 0.0);
    for (std::size_t i = 0; i < direction.size(); ++i) {
      const double v = s0.values()[i];
      auto it = std::lower_bound(crit.begin(), crit.end(), v);
      double gap = INFINITY;
      if (it != crit.end()) gap = std::min(gap, *it - v);
      if (it != crit.begin()) gap = std::min(gap, v - *std::prev(it));
      if (gap > 2 * eta) {
        direction[i] = eta * g.uniform(-1, 1);
        ++moved;
      }
    }
    std::vector<double> reference;
    for (const auto& a : HomologyClass::all_nonzero(sel0.base_betti())) reference.push_back(sel0.ell(a));
    for (int step = 1; step <= steps; ++step) {
      auto values = s0.values();
      for (std::size_t i = 0; i < values.size(); ++i) values[i] += direction[i] * step / steps;
      const SpectralSelector sel(s0.with_values(values));
      std::size_t idx = 0;
      for (const auto& a : HomologyClass::all_nonzero(sel.base_betti())) {
        if (sel.ell(a) != reference[idx++]) ++violations;
      }
    }
  }
  o.pass = violations == 0 && moved > 0;
  o.detail = std::to_string(families) + " families x " + std::to_string(steps) + " steps, " + std::to_string(moved) +
             " nodes moved, " + std::to_string(violations) + " violations";
  return o;
}

}  // namespace

int main() {
  const auto dir = workdir();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"built-in homology", ac1},
      {"cup-length", ac2},
      {"selector properties", ac3},
      {"oracle equivalence", ac4},
      {"ell(f + Q) = c_ls(f)", ac5},
      {"triangle inequality", ac6},
      {"Lipschitz stability", ac7},
      {"limit experiment", [&] { return ac8(dir / "limit"); }},
      {"ls-check", [&] { return ac9(dir); }},
      {"deformation invariance", ac10},
  };
  fs::create_directories(dir / "limit");
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "AC" << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
