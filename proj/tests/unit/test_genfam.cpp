#include <doctest.h>

#include <cmath>
#include <numbers>

#include "legspec/builtins.hpp"
#include "legspec/errors.hpp"
#include "legspec/genfam.hpp"
#include "legspec/io.hpp"
#include "legspec/products.hpp"
#include "oracles.hpp"

using namespace legspec;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> torus_fn(int n, double (*fn)(double, double)) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v.push_back(fn(2 * kPi * i / n, 2 * kPi * j / n));
  }
  return v;
}
double cos_q1(double a, double) { return std::cos(a); }
double morse(double a, double b) { return std::cos(a) + 0.5 * std::cos(b); }

GeneratingFamily zero_q(std::vector<int> base, int k, int m, Signature sig) {
  std::size_t n = 1;
  for (int r : base) n *= static_cast<std::size_t>(r);
  return GeneratingFamily::quadratic_plus(std::move(base), std::vector<double>(n, 0.0), k, m, 2.0, sig);
}

}  // namespace

TEST_CASE("family validation") {
  const std::vector<double> v(4 * 3, 0.0);
  CHECK_THROWS_AS((void)GeneratingFamily({4}, 1, 3, 1.0, {1, 1}, 0, v), InputError);
  CHECK_THROWS_AS((void)GeneratingFamily({2}, 1, 3, 1.0, {1, 0}, 0, std::vector<double>(6, 0.0)), InputError);
  CHECK_THROWS_AS((void)GeneratingFamily({4}, 1, 3, 1.0, {1, 0}, 0, std::vector<double>(5, 0.0)), InputError);
  // Q(±1) = -1 on the outer layer, so zero values miss it by 1
  CHECK_THROWS_AS((void)GeneratingFamily({4}, 1, 3, 1.0, {1, 0}, 0.5, v), InputError);
  CHECK_NOTHROW((void)GeneratingFamily({4}, 1, 3, 1.0, {1, 0}, 1.0, v));
  try {
    (void)GeneratingFamily({4}, 1, 3, 1.0, {1, 1}, 0, v);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("signature") != std::string::npos);
  }
}

TEST_CASE("quadratic form and grids") {
  const auto s = zero_q({4, 5}, 2, 5, {1, 1});
  CHECK(s.fiber_nodes() == 25);
  CHECK(s.fiber_coordinate(0) == -2.0);
  CHECK(s.fiber_coordinate(4) == 2.0);
  // fiber node (x0, x1) = (0, 4): e = (-2, 2), Q = -4 + 4
  CHECK(s.quadratic(4) == 0.0);
  CHECK(s.quadratic(12) == 0.0);
  CHECK(s.quadratic(2) == -4.0 + 0.0);
  CHECK(s.product_grid().cell_count() == s.base_grid().cell_count() * s.fiber_grid().cell_count());
}

TEST_CASE("Thom cycle and cocycle") {
  for (auto sig : {Signature{0, 2}, Signature{1, 1}, Signature{2, 0}}) {
    const auto s = zero_q({4}, 2, 5, sig);
    const auto theta = thom_cycle(s);
    const auto psi = thom_cocycle(s);
    CHECK(pairing(psi, theta));
    const auto fiber = s.fiber_grid();
    for (auto c : theta) CHECK(fiber.cell_dim(c) == sig.negative);
  }
}

TEST_CASE("spectral invariants of S = Q") {
  for (auto sig : {Signature{0, 1}, Signature{1, 0}, Signature{1, 1}}) {
    const auto s = zero_q({6, 6}, sig.negative + sig.positive, 5, sig);
    const SpectralSelector sel(s);
    for (const auto& a : HomologyClass::all_nonzero(sel.base_betti())) CHECK(sel.ell(a) == 0.0);
    CHECK(sel.gamma() == 0.0);
  }
}

TEST_CASE("ell(f + Q) is c_ls(f) and shifts with constants") {
  oracle::Gen g(41);
  const auto t2 = torus(2, 6);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = g.dyadic_values(36);
    const SampledFunction sf(t2, f);
    for (auto sig : {Signature{0, 1}, Signature{1, 0}, Signature{1, 1}, Signature{2, 0}}) {
      const auto s = GeneratingFamily::quadratic_plus({6, 6}, f, sig.negative + sig.positive, 5, 1.5, sig);
      const SpectralSelector sel(s);
      const SpectralSelector shifted(s.shifted(0.75));
      for (const auto& a : HomologyClass::all_nonzero(sel.base_betti())) {
        CHECK(sel.ell(a) == c_ls(a, sf));
        CHECK(shifted.ell(a) == sel.ell(a) + 0.75);
      }
      CHECK(sel.gamma() == sf.max() - sf.min());
      CHECK(shifted.gamma() == sel.gamma());
    }
  }
}

TEST_CASE("ell lies in the critical values") {
  oracle::Gen g(8);
  const auto s0 = zero_q({5, 5}, 1, 5, {1, 0});
  auto values = s0.values();
  for (auto& v : values) v += 0.3 * g.uniform(-1, 1);
  const SpectralSelector sel(s0.with_values(values));
  const auto& crit = sel.critical_values();
  for (const auto& a : HomologyClass::all_nonzero(sel.base_betti())) {
    CHECK(std::binary_search(crit.begin(), crit.end(), sel.ell(a)));
  }
  CHECK_THROWS_AS((void)sel.ell(HomologyClass::zero(sel.base_betti())), InputError);
  CHECK_THROWS_AS((void)SpectralSelector(zero_q({4, 4, 4}, 1, 3, {0, 1})), CapabilityError);
}

TEST_CASE("fronts") {
  SUBCASE("S = Q gives the zero section") {
    const auto s = zero_q({8, 8}, 1, 5, {1, 0});
    const auto cloud = front(s);
    CHECK(cloud.points.size() == 64);
    for (const auto& p : cloud.points) {
      CHECK(p.z == 0.0);
      CHECK(p.p == std::vector<double>{0.0, 0.0});
    }
  }
  SUBCASE("S = f + Q gives the 1-jet graph") {
    const int n = 32;
    const auto s = GeneratingFamily::quadratic_plus({n, n}, torus_fn(n, morse), 1, 5, 2.0, {0, 1});
    const auto cloud = front(s);
    CHECK(cloud.points.size() == static_cast<std::size_t>(n * n));
    const double h = 2 * kPi / n;
    for (const auto& p : cloud.points) {
      CHECK(p.z == doctest::Approx(morse(p.q[0], p.q[1])).epsilon(1e-12));
      CHECK(std::abs(p.p[0] + std::sin(p.q[0])) <= h * h);
      CHECK(std::abs(p.p[1] + 0.5 * std::sin(p.q[1])) <= h * h);
    }
  }
  SUBCASE("sheared family on the circle") {
    // S = -e sin q + e^2: the fiber critical point is e = sin(q)/2, where
    // S = -sin^2(q)/4 and dS/dq = -sin(2q)/4.
    const int n = 32, m = 41;
    const double r = 1.0;
    std::vector<double> v(static_cast<std::size_t>(n * m));
    for (int b = 0; b < n; ++b) {
      for (int e = 0; e < m; ++e) {
        const double q = 2 * kPi * b / n, x = r * (2.0 * e - (m - 1)) / (m - 1);
        v[static_cast<std::size_t>(b * m + e)] = -x * std::sin(q) + x * x;
      }
    }
    const GeneratingFamily s({n}, 1, m, r, {0, 1}, r, v);
    const auto cloud = front(s);
    CHECK(cloud.points.size() >= static_cast<std::size_t>(n));
    const double he = 2 * r / (m - 1), hq = 2 * kPi / n;
    for (const auto& p : cloud.points) {
      CHECK(std::abs(p.z + std::pow(std::sin(p.q[0]), 2) / 4) <= he);
      CHECK(std::abs(p.p[0] + std::sin(2 * p.q[0]) / 4) <= he + hq * hq);
    }
  }
}

TEST_CASE("spectra") {
  SUBCASE("zero section") {
    const auto cloud = front(zero_q({8}, 1, 3, {1, 0}));
    CHECK(spectrum(cloud, default_tolerances(cloud)).values == std::vector<double>{0.0});
  }
  SUBCASE("cos q1 on the torus") {
    const auto cloud = front(GeneratingFamily::quadratic_plus({32, 32}, torus_fn(32, cos_q1), 1, 5, 2.0, {1, 0}));
    const auto tol = default_tolerances(cloud);
    const auto spec = spectrum(cloud, tol);
    REQUIRE(spec.values.size() == 2);
    CHECK(spec.values[0] == doctest::Approx(-1).epsilon(0.02));
    CHECK(spec.values[1] == doctest::Approx(1).epsilon(0.02));
    CHECK(spec.values[1] - spec.values[0] > tol.delta_z);
  }
  SUBCASE("nothing on the zero wall") {
    FrontCloud cloud;
    cloud.base_dim = 1;
    cloud.points = {{{0.0}, {1.0}, 0.0}, {{1.0}, {-2.0}, 0.5}};
    CHECK(spectrum(cloud, 0.5, 0.1).values.empty());
  }
  SUBCASE("overrides") {
    const auto cloud = front(zero_q({8}, 1, 3, {1, 0}));
    const auto tol = default_tolerances(cloud, 0.25, 0.125);
    CHECK(tol.eps_p == 0.25);
    CHECK(tol.delta_z == 0.125);
  }
}

TEST_CASE("sums of families") {
  oracle::Gen g(17);
  const auto f = g.dyadic_values(36);
  const auto h = g.dyadic_values(36);
  SUBCASE("adding a pure quadratic leaves the front alone") {
    const auto s = GeneratingFamily::quadratic_plus({6, 6}, f, 1, 5, 2.0, {1, 0});
    const auto sum = oplus(s, zero_q({6, 6}, 1, 5, {0, 1}));
    const auto a = front(s), b = front(sum);
    REQUIRE(a.points.size() == b.points.size());
    CHECK(hausdorff(a, b) == 0.0);
  }
  SUBCASE("(f + Q) + (g + Q') = (f + g) + (Q + Q')") {
    const auto s = GeneratingFamily::quadratic_plus({6, 6}, f, 1, 5, 2.0, {1, 0});
    const auto t = GeneratingFamily::quadratic_plus({6, 6}, h, 1, 5, 2.0, {0, 1});
    std::vector<double> fh(36);
    for (std::size_t i = 0; i < 36; ++i) fh[i] = f[i] + h[i];
    const auto direct = GeneratingFamily::quadratic_plus({6, 6}, fh, 2, 5, 2.0, {1, 1});
    const auto sum = oplus(s, t);
    CHECK(sum.signature() == Signature{1, 1});
    CHECK(sum.max_abs_difference(direct) <= 1e-12);
  }
  SUBCASE("mismatched grids") {
    CHECK_THROWS_AS((void)oplus(zero_q({6, 6}, 1, 5, {1, 0}), zero_q({5, 6}, 1, 5, {1, 0})), InputError);
  }
}

TEST_CASE("Hausdorff distance") {
  const auto a = front(zero_q({8, 8}, 1, 3, {1, 0}));
  CHECK(hausdorff(a, a) == 0.0);
  FrontCloud x, y;
  x.base_dim = y.base_dim = 1;
  x.points = {{{1.0}, {0.0}, 0.0}};
  y.points = {{{1.0}, {0.0}, 0.375}};
  CHECK(hausdorff(x, y) == 0.375);
  // the flat torus wraps q
  y.points = {{{2 * kPi - 0.25}, {0.0}, 0.0}};
  x.points = {{{0.25}, {0.0}, 0.0}};
  CHECK(hausdorff(x, y) == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)hausdorff(x, FrontCloud{}), InputError);

  SUBCASE("f/n + Q fronts approach the zero section") {
    const int n = 16;
    const auto f = torus_fn(n, morse);
    double prev = INFINITY;
    for (int k = 1; k <= 6; ++k) {
      std::vector<double> fk(f);
      for (auto& v : fk) v /= k;
      const auto cloud = front(GeneratingFamily::quadratic_plus({n, n}, fk, 1, 3, 2.0, {1, 0}));
      double bound = 0;
      for (const auto& p : cloud.points) bound = std::max(bound, std::hypot(p.p[0], p.p[1], p.z));
      const double d = hausdorff(cloud, front(zero_q({n, n}, 1, 3, {1, 0})));
      CHECK(d <= bound + 1e-12);
      CHECK(d <= std::hypot(1.5, 1.0, 0.5) / k);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("limit verification") {
  SUBCASE("Morse sequence does not meet the hypothesis") {
    const int n = 16;
    const auto f = torus_fn(n, morse);
    std::vector<FrontCloud> seq;
    for (int k = 1; k <= 4; ++k) {
      std::vector<double> fk(f);
      for (auto& v : fk) v *= 1.0 + 1.0 / k;
      seq.push_back(front(GeneratingFamily::quadratic_plus({n, n}, fk, 1, 3, 2.0, {1, 0})));
    }
    const auto limit = front(GeneratingFamily::quadratic_plus({n, n}, f, 1, 3, 2.0, {1, 0}));
    const auto report = verify_limit(seq, limit, {n, n}, default_tolerances(limit), {1, 2, 3});
    CHECK(report.limit_spectrum.values.size() >= 3);
    CHECK_FALSE(report.hypothesis_met);
    CHECK(report.verdict() == "hypothesis not met");
  }
  SUBCASE("zero section on the circle") {
    const auto limit = front(zero_q({16}, 1, 3, {1, 0}));
    const auto report = verify_limit({limit}, limit, {16}, default_tolerances(limit), {1, 2});
    CHECK(report.limit_spectrum.values == std::vector<double>{0.0});
    CHECK(report.cup_length == 2);
    CHECK(report.hypothesis_met);
    REQUIRE(report.levels.size() == 1);
    CHECK(report.levels[0].snapped_vertices == 16);
    CHECK(report.verdict() == "nontrivial");
  }
}

TEST_CASE("family and front files") {
  const auto s = GeneratingFamily::quadratic_plus({4, 4}, std::vector<double>(16, 0.5), 1, 3, 2.0, {1, 0});
  const auto back = family_from_json(family_to_json(s));
  CHECK(back.values() == s.values());
  CHECK(back.signature() == s.signature());
  CHECK(back.boundary_tolerance() == s.boundary_tolerance());

  const auto cloud = front(s);
  const auto again = front_from_csv(front_to_csv(cloud));
  REQUIRE(again.points.size() == cloud.points.size());
  CHECK(hausdorff(cloud, again) == 0.0);
  CHECK_THROWS_AS((void)front_from_csv("q1,p1\n0,0\n"), InputError);
  CHECK_THROWS_AS((void)front_from_csv(""), InputError);

  auto j = family_to_json(s);
  j["signature"] = {2, 0};
  CHECK_THROWS_AS((void)family_from_json(j), InputError);
}

TEST_CASE("svg output") {
  const auto cloud = front(zero_q({8}, 1, 3, {1, 0}));
  CHECK(front_svg(cloud).find("<svg") == 0);
  CHECK(spectrum_svg(spectrum(cloud, default_tolerances(cloud))).find("crimson") != std::string::npos);
  CHECK_THROWS_AS((void)front_svg(front(zero_q({4, 4}, 1, 3, {1, 0}))), CapabilityError);
}
