#include "legspec/genfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "legspec/builtins.hpp"
#include "legspec/errors.hpp"
#include "legspec/products.hpp"

namespace legspec {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::size_t power(int base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Row-major digits of a fiber node, axis 0 slowest.
void fiber_digits(std::size_t node, int k, int m, int* x) {
  for (int i = k - 1; i >= 0; --i) {
    x[i] = static_cast<int>(node % static_cast<std::size_t>(m));
    node /= static_cast<std::size_t>(m);
  }
}

double torus_delta(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

GeneratingFamily::GeneratingFamily(std::vector<int> base_resolution, int fiber_dim, int fiber_resolution,
                                   double radius, Signature signature, double boundary_tolerance,
                                   std::vector<double> values)
    : base_resolution_(std::move(base_resolution)),
      fiber_dim_(fiber_dim),
      fiber_resolution_(fiber_resolution),
      radius_(radius),
      signature_(signature),
      boundary_tolerance_(boundary_tolerance),
      values_(std::move(values)) {
  if (base_resolution_.empty() || base_resolution_.size() > 2) {
    throw CapabilityError("base: only the tori T1 and T2 are supported as gfqi bases");
  }
  for (std::size_t i = 0; i < base_resolution_.size(); ++i) {
    if (base_resolution_[i] < 3) {
      throw InputError("base.resolution[" + std::to_string(i) + "]: must be at least 3");
    }
  }
  if (fiber_dim_ < 0 || fiber_dim_ > 4) throw InputError("fiber_dim: must be in 0..4");
  if (fiber_dim_ > 0 && fiber_resolution_ < 3) throw InputError("fiber_resolution: must be at least 3");
  if (!(radius_ > 0) || !std::isfinite(radius_)) throw InputError("fiber_box_radius: must be positive");
  if (signature_.negative < 0 || signature_.positive < 0 || signature_.negative + signature_.positive != fiber_dim_) {
    throw InputError("signature: i_minus + i_plus must equal fiber_dim");
  }
  if (!(boundary_tolerance_ >= 0)) throw InputError("boundary_tolerance: must be nonnegative");
  if (values_.size() != base_nodes() * fiber_nodes()) {
    throw InputError("values: expected " + std::to_string(base_nodes() * fiber_nodes()) + " entries, got " +
                     std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw InputError("values[" + std::to_string(i) + "]: not a finite number");
  }
  int x[8];
  for (std::size_t e = 0; e < fiber_nodes() && fiber_dim_ > 0; ++e) {
    fiber_digits(e, fiber_dim_, fiber_resolution_, x);
    bool outer = false;
    for (int i = 0; i < fiber_dim_; ++i) outer = outer || x[i] == 0 || x[i] == fiber_resolution_ - 1;
    if (!outer) continue;
    const double q = quadratic(e);
    for (std::size_t b = 0; b < base_nodes(); ++b) {
      if (std::abs(value(b, e) - q) > boundary_tolerance_) {
        throw InputError("values[" + std::to_string(b * fiber_nodes() + e) +
                         "]: differs from the quadratic form on the outer fiber layer by more than "
                         "boundary_tolerance");
      }
    }
  }
}

GeneratingFamily GeneratingFamily::quadratic_plus(std::vector<int> base_resolution, const std::vector<double>& f,
                                                  int fiber_dim, int fiber_resolution, double radius,
                                                  Signature signature) {
  std::size_t nb = 1;
  for (int n : base_resolution) nb *= static_cast<std::size_t>(std::max(n, 0));
  if (f.size() != nb) throw InputError("function: expected one value per base node");
  const std::size_t nf = power(fiber_resolution, fiber_dim);
  // Evaluate Q once through a probe family with zero values.
  GeneratingFamily probe(base_resolution, fiber_dim, fiber_resolution, radius, signature,
                         std::numeric_limits<double>::max(), std::vector<double>(nb * nf, 0.0));
  // The bound is measured after rounding, so (f + Q) - Q never exceeds it.
  double bound = 0;
  std::vector<double> values(nb * nf);
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t e = 0; e < nf; ++e) {
      values[b * nf + e] = f[b] + probe.quadratic(e);
      bound = std::max(bound, std::abs(values[b * nf + e] - probe.quadratic(e)));
    }
  }
  return GeneratingFamily(std::move(base_resolution), fiber_dim, fiber_resolution, radius, signature, bound,
                          std::move(values));
}

std::size_t GeneratingFamily::base_nodes() const {
  std::size_t n = 1;
  for (int r : base_resolution_) n *= static_cast<std::size_t>(r);
  return n;
}

std::size_t GeneratingFamily::fiber_nodes() const { return power(fiber_resolution_, fiber_dim_); }

double GeneratingFamily::base_coordinate(int axis, int position) const {
  return kTwoPi * position / base_resolution_[axis];
}

double GeneratingFamily::fiber_coordinate(int position) const {
  const int m = fiber_resolution_ - 1;
  return radius_ * static_cast<double>(2 * position - m) / m;
}

double GeneratingFamily::quadratic(std::size_t fiber_node) const {
  int x[8];
  fiber_digits(fiber_node, fiber_dim_, fiber_resolution_, x);
  double q = 0;
  for (int i = 0; i < fiber_dim_; ++i) {
    const double e = fiber_coordinate(x[i]);
    q += (i < signature_.negative ? -1.0 : 1.0) * e * e;
  }
  return q;
}

CubicalGrid GeneratingFamily::base_grid() const { return CubicalGrid::torus(base_resolution_); }

CubicalGrid GeneratingFamily::fiber_grid() const {
  return CubicalGrid(std::vector<int>(fiber_dim_, fiber_resolution_), std::vector<bool>(fiber_dim_, false));
}

CubicalGrid GeneratingFamily::product_grid() const {
  auto res = base_resolution_;
  std::vector<bool> periodic(res.size(), true);
  for (int i = 0; i < fiber_dim_; ++i) {
    res.push_back(fiber_resolution_);
    periodic.push_back(false);
  }
  return CubicalGrid(std::move(res), std::move(periodic));
}

GeneratingFamily GeneratingFamily::shifted(double c) const {
  auto v = values_;
  for (auto& x : v) x += c;
  return GeneratingFamily(base_resolution_, fiber_dim_, fiber_resolution_, radius_, signature_,
                          boundary_tolerance_ + std::abs(c), std::move(v));
}

GeneratingFamily GeneratingFamily::with_values(std::vector<double> values) const {
  GeneratingFamily probe(base_resolution_, fiber_dim_, fiber_resolution_, radius_, signature_,
                         std::numeric_limits<double>::max(), std::move(values));
  // The tolerance becomes the largest outer-layer deviation of the new values.
  double tol = 0;
  int x[8];
  for (std::size_t e = 0; e < fiber_nodes() && fiber_dim_ > 0; ++e) {
    fiber_digits(e, fiber_dim_, fiber_resolution_, x);
    bool outer = false;
    for (int i = 0; i < fiber_dim_; ++i) outer = outer || x[i] == 0 || x[i] == fiber_resolution_ - 1;
    if (!outer) continue;
    for (std::size_t b = 0; b < base_nodes(); ++b) tol = std::max(tol, std::abs(probe.value(b, e) - quadratic(e)));
  }
  probe.boundary_tolerance_ = tol;
  return probe;
}

double GeneratingFamily::max_abs_difference(const GeneratingFamily& other) const {
  if (other.values_.size() != values_.size() || other.base_resolution_ != base_resolution_ ||
      other.fiber_dim_ != fiber_dim_ || other.fiber_resolution_ != fiber_resolution_) {
    throw InputError("families live on different grids");
  }
  double d = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) d = std::max(d, std::abs(values_[i] - other.values_[i]));
  return d;
}

GeneratingFamily oplus(const GeneratingFamily& s, const GeneratingFamily& t) {
  if (s.base_resolution() != t.base_resolution()) throw InputError("oplus: the families have different bases");
  if (s.fiber_dim() > 0 && t.fiber_dim() > 0 &&
      (s.fiber_resolution() != t.fiber_resolution() || s.radius() != t.radius())) {
    throw InputError("oplus: fiber_resolution and fiber_box_radius must agree");
  }
  const int k = s.fiber_dim() + t.fiber_dim();
  if (k > 4) throw CapabilityError("oplus: combined fiber dimension above 4");
  const int m = s.fiber_dim() > 0 ? s.fiber_resolution() : t.fiber_resolution();
  const double radius = s.fiber_dim() > 0 ? s.radius() : t.radius();
  const Signature sig{s.signature().negative + t.signature().negative,
                      s.signature().positive + t.signature().positive};
  // New axis order: negatives of s, negatives of t, positives of s, positives of t.
  std::vector<std::pair<int, int>> source(k);  // (family, axis)
  int a = 0;
  for (int i = 0; i < s.signature().negative; ++i) source[a++] = {0, i};
  for (int i = 0; i < t.signature().negative; ++i) source[a++] = {1, i};
  for (int i = s.signature().negative; i < s.fiber_dim(); ++i) source[a++] = {0, i};
  for (int i = t.signature().negative; i < t.fiber_dim(); ++i) source[a++] = {1, i};

  const std::size_t nb = s.base_nodes();
  const std::size_t nf = power(m, k);
  std::vector<double> values(nb * nf);
  int x[8];
  for (std::size_t e = 0; e < nf; ++e) {
    fiber_digits(e, k, m, x);
    std::size_t es = 0;
    std::size_t et = 0;
    // Rebuild each factor's row-major index from its own axes in order.
    std::vector<int> xs(s.fiber_dim());
    std::vector<int> xt(t.fiber_dim());
    for (int i = 0; i < k; ++i) (source[i].first == 0 ? xs[source[i].second] : xt[source[i].second]) = x[i];
    for (int v : xs) es = es * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    for (int v : xt) et = et * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    for (std::size_t b = 0; b < nb; ++b) values[b * nf + e] = s.value(b, es) + t.value(b, et);
  }
  GeneratingFamily out(s.base_resolution(), k, m, radius, sig, std::numeric_limits<double>::max(),
                       std::move(values));
  return out.with_values(out.values());
}

// ---------------------------------------------------------------- Thom data

namespace {

// Doubled fiber coordinates of the centre cell for the negative axes (an
// edge) and positive axes (a vertex).
int centre_vertex(int m) { return (m - 1) / 2; }

}  // namespace

Chain thom_cycle(const GeneratingFamily& s) {
  const auto grid = s.fiber_grid();
  const int k = s.fiber_dim();
  if (k == 0) return {0};
  const int neg = s.signature().negative;
  const int m = s.fiber_resolution();
  Chain out;
  std::vector<int> y(k);
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    grid.coordinates(c, y);
    bool in = true;
    for (int i = 0; i < k && in; ++i) {
      in = i < neg ? (y[i] & 1) == 1 : y[i] == 2 * centre_vertex(m);
    }
    if (in) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

Cochain thom_cocycle(const GeneratingFamily& s) {
  const auto grid = s.fiber_grid();
  const int k = s.fiber_dim();
  if (k == 0) return {0};
  const int neg = s.signature().negative;
  const int m = s.fiber_resolution();
  Cochain out;
  std::vector<int> y(k);
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    grid.coordinates(c, y);
    bool in = true;
    for (int i = 0; i < k && in; ++i) {
      in = i < neg ? y[i] == 2 * centre_vertex(m) + 1 : (y[i] & 1) == 0;
    }
    if (in) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<std::uint8_t> negative_boundary_mask(const GeneratingFamily& s) {
  const auto grid = s.product_grid();
  const int d = s.base_dim();
  const int neg = s.signature().negative;
  const int last = 2 * (s.fiber_resolution() - 1);
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  if (neg == 0) return mask;
  std::vector<int> y(grid.axes());
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    grid.coordinates(c, y);
    for (int i = 0; i < neg; ++i) {
      if (y[d + i] == 0 || y[d + i] == last) {
        mask[c] = 1;
        break;
      }
    }
  }
  return mask;
}

// ---------------------------------------------------------------- selector

namespace {

FiltrationSweep make_sweep(const GeneratingFamily& s, std::vector<int>& betti) {
  const auto base = s.base_grid();
  const auto fiber = s.fiber_grid();
  const auto grid = s.product_grid();
  const auto base_basis = cubical_canonical_basis(base);
  betti = base_basis.betti();

  std::vector<double> cell_values(grid.cell_count());
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    double v = -std::numeric_limits<double>::infinity();
    grid.for_each_vertex(c, [&](std::size_t vc) { v = std::max(v, s.values()[grid.cell_vertex(vc)]); });
    cell_values[c] = v;
  }

  const auto psi = thom_cocycle(s);
  const std::size_t nf = s.fiber_dim() > 0 ? fiber.cell_count() : 1;
  const int shift = s.signature().negative;
  std::vector<std::vector<Cochain>> cocycles(grid.axes() + 1);
  for (std::size_t d = 0; d < base_basis.cocycles.size(); ++d) {
    for (const auto& phi : base_basis.cocycles[d]) {
      Cochain product;
      for (auto b : phi) {
        for (auto e : psi) product.push_back(static_cast<std::uint32_t>(b * nf + e));
      }
      std::sort(product.begin(), product.end());
      cocycles[d + shift].push_back(std::move(product));
    }
  }
  return FiltrationSweep(grid, cell_values, negative_boundary_mask(s), cocycles);
}

}  // namespace

SpectralSelector::SpectralSelector(const GeneratingFamily& s)
    : shift_(s.signature().negative), sweep_(make_sweep(s, betti_)) {}

double SpectralSelector::ell(const HomologyClass& a) const {
  if (a.betti() != betti_) throw InputError("class: does not belong to the base of this family");
  if (a.is_zero()) throw InputError("class: the selector is undefined on the zero class");
  std::optional<double> best;
  for (int d = 0; d <= a.max_degree(); ++d) {
    const auto v = sweep_.entry_value(d + shift_, a.bits(d));
    if (v) best = best ? std::max(*best, *v) : *v;
  }
  return *best;
}

double SpectralSelector::gamma() const {
  return ell(HomologyClass::fundamental(betti_)) - ell(HomologyClass::point(betti_));
}

double ell(const HomologyClass& a, const GeneratingFamily& s) { return SpectralSelector(s).ell(a); }

double gamma(const GeneratingFamily& s) { return SpectralSelector(s).gamma(); }

// ---------------------------------------------------------------- fronts

FrontCloud front(const GeneratingFamily& s) {
  FrontCloud cloud;
  cloud.base_dim = s.base_dim();
  cloud.source = FrontCloud::Source::extracted;
  cloud.base_resolution = s.base_resolution();
  const int d = s.base_dim();
  const int k = s.fiber_dim();
  const int m = s.fiber_resolution();
  const std::size_t nb = s.base_nodes();
  const std::size_t nf = s.fiber_nodes();
  const auto& res = s.base_resolution();

  std::vector<std::size_t> fstride(k);
  for (int i = k - 1, st = 1; i >= 0; --i, st *= m) fstride[i] = static_cast<std::size_t>(st);
  std::vector<long> bstride(d, 1);
  for (int i = d - 2; i >= 0; --i) bstride[i] = bstride[i + 1] * res[i + 1];

  auto interior = [&](const int* x) {
    for (int i = 0; i < k; ++i) {
      if (x[i] < 1 || x[i] > m - 2) return false;
    }
    return true;
  };
  // Central difference along fiber axis i at an interior node.
  auto fiber_diff = [&](std::size_t b, std::size_t e, int i) {
    return s.value(b, e + fstride[i]) - s.value(b, e - fstride[i]);
  };
  auto is_zero = [&](std::size_t b, std::size_t e, int i) {
    const double a = s.value(b, e + fstride[i]);
    const double c = s.value(b, e - fstride[i]);
    return std::abs(a - c) <= 1e-12 * (std::abs(a) + std::abs(c) + 1.0);
  };

  int x[8];
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<int> bx(d);
    for (int i = d - 1, r = static_cast<int>(b); i >= 0; --i) {
      bx[i] = r % res[i];
      r /= res[i];
    }
    for (std::size_t e = 0; e < nf; ++e) {
      fiber_digits(e, k, m, x);
      if (!interior(x)) continue;
      bool critical = true;
      for (int i = 0; i < k && critical; ++i) {
        if (is_zero(b, e, i)) continue;
        const double g = fiber_diff(b, e, i);
        bool flips = false;
        for (int dir : {-1, 1}) {
          const int xn = x[i] + dir;
          if (xn < 1 || xn > m - 2) continue;
          const std::size_t en = dir > 0 ? e + fstride[i] : e - fstride[i];
          const double gn = fiber_diff(b, en, i);
          flips = flips || (g > 0 && gn < 0) || (g < 0 && gn > 0);
        }
        critical = flips;
      }
      if (!critical) continue;
      FrontPoint pt;
      pt.z = s.value(b, e);
      for (int i = 0; i < d; ++i) {
        pt.q.push_back(s.base_coordinate(i, bx[i]));
        const long here = static_cast<long>(b);
        const auto up = static_cast<std::size_t>(here + ((bx[i] + 1) % res[i] - bx[i]) * bstride[i]);
        const auto down = static_cast<std::size_t>(here + ((bx[i] + res[i] - 1) % res[i] - bx[i]) * bstride[i]);
        const double h = kTwoPi / res[i];
        pt.p.push_back((s.value(up, e) - s.value(down, e)) / (2 * h));
      }
      cloud.points.push_back(std::move(pt));
    }
  }
  return cloud;
}

// ---------------------------------------------------------------- spectra

namespace {

std::vector<double> grid_spacing(const FrontCloud& cloud) {
  std::vector<double> h(cloud.base_dim, kTwoPi);
  if (static_cast<int>(cloud.base_resolution.size()) == cloud.base_dim) {
    for (int i = 0; i < cloud.base_dim; ++i) h[i] = kTwoPi / cloud.base_resolution[i];
    return h;
  }
  for (int i = 0; i < cloud.base_dim; ++i) {
    std::vector<double> q;
    for (const auto& p : cloud.points) q.push_back(p.q[i]);
    std::sort(q.begin(), q.end());
    for (std::size_t a = 1; a < q.size(); ++a) {
      const double gap = q[a] - q[a - 1];
      if (gap > 1e-12) h[i] = std::min(h[i], gap);
    }
  }
  return h;
}

std::vector<std::pair<double, double>> clusters(std::vector<double> z, double gap) {
  std::sort(z.begin(), z.end());
  std::vector<std::pair<double, double>> out;
  for (double v : z) {
    if (out.empty() || v - out.back().second > gap) {
      out.emplace_back(v, v);
    } else {
      out.back().second = v;
    }
  }
  return out;
}

std::vector<double> wall_values(const FrontCloud& cloud, double eps_p) {
  std::vector<double> z;
  for (const auto& pt : cloud.points) {
    double norm = 0;
    for (double v : pt.p) norm = std::max(norm, std::abs(v));
    if (norm <= eps_p) z.push_back(pt.z);
  }
  return z;
}

}  // namespace

Tolerances default_tolerances(const FrontCloud& cloud, std::optional<double> eps_p, std::optional<double> delta_z) {
  const auto h = grid_spacing(cloud);
  double hmax = 0;
  double hsum = 0;
  for (double v : h) {
    hmax = std::max(hmax, v);
    hsum += v;
  }
  Tolerances t;
  if (eps_p) {
    t.eps_p = *eps_p;
  } else {
    // Group points by grid node, then take the steepest p change to the
    // closest point of each adjacent node.
    std::map<std::vector<long>, std::vector<std::size_t>> nodes;
    auto key_of = [&](const FrontPoint& p) {
      std::vector<long> key(cloud.base_dim);
      for (int i = 0; i < cloud.base_dim; ++i) {
        const long n = std::lround(kTwoPi / h[i]);
        key[i] = ((std::lround(p.q[i] / h[i]) % n) + n) % n;
      }
      return key;
    };
    for (std::size_t a = 0; a < cloud.points.size(); ++a) nodes[key_of(cloud.points[a])].push_back(a);
    double kappa = 0;
    for (const auto& pt : cloud.points) {
      const auto key = key_of(pt);
      for (int i = 0; i < cloud.base_dim; ++i) {
        const long n = std::lround(kTwoPi / h[i]);
        for (int dir : {-1, 1}) {
          auto nk = key;
          nk[i] = ((nk[i] + dir) % n + n) % n;
          const auto it = nodes.find(nk);
          if (it == nodes.end()) continue;
          double best = std::numeric_limits<double>::infinity();
          for (auto b : it->second) {
            double dp = 0;
            for (int j = 0; j < cloud.base_dim; ++j) dp = std::max(dp, std::abs(pt.p[j] - cloud.points[b].p[j]));
            best = std::min(best, dp);
          }
          kappa = std::max(kappa, best / h[i]);
        }
      }
    }
    t.eps_p = std::max(hmax * kappa, 1e-9);
  }
  if (delta_z) {
    t.delta_z = *delta_z;
  } else {
    const double delta0 = std::max(t.eps_p * hsum, 1e-12);
    const auto provisional = clusters(wall_values(cloud, t.eps_p), delta0);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 1; a < provisional.size(); ++a) {
      gap = std::min(gap, provisional[a].first - provisional[a - 1].second);
    }
    t.delta_z = provisional.size() < 2 ? delta0 : std::max(delta0, gap / 2);
  }
  return t;
}

Spectrum spectrum(const FrontCloud& cloud, double eps_p, double delta_z) {
  if (!(eps_p >= 0)) throw InputError("eps_p: must be nonnegative");
  if (!(delta_z >= 0)) throw InputError("delta_z: must be nonnegative");
  Spectrum out;
  out.eps_p = eps_p;
  out.delta_z = delta_z;
  for (const auto& [lo, hi] : clusters(wall_values(cloud, eps_p), delta_z)) out.values.push_back((lo + hi) / 2);
  return out;
}

Spectrum spectrum(const FrontCloud& cloud, const Tolerances& tolerances) {
  return spectrum(cloud, tolerances.eps_p, tolerances.delta_z);
}

double point_distance(const FrontPoint& a, const FrontPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.q.size(); ++i) {
    const double d = torus_delta(a.q[i], b.q[i]);
    s += d * d;
  }
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    const double d = a.p[i] - b.p[i];
    s += d * d;
  }
  const double dz = a.z - b.z;
  return std::sqrt(s + dz * dz);
}

double directed_hausdorff(const FrontCloud& a, const FrontCloud& b) {
  if (a.points.empty() || b.points.empty()) throw InputError("hausdorff: both clouds must be nonempty");
  if (a.base_dim != b.base_dim) throw InputError("hausdorff: clouds over different base dimensions");
  double sup = 0;
  for (const auto& x : a.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : b.points) best = std::min(best, point_distance(x, y));
    sup = std::max(sup, best);
  }
  return sup;
}

double hausdorff(const FrontCloud& a, const FrontCloud& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

// ---------------------------------------------------------------- limit check

bool LimitReport::nontrivial() const {
  return hypothesis_met && std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.report.nontrivial; });
}

std::string LimitReport::verdict() const {
  if (!hypothesis_met) return "hypothesis not met";
  return nontrivial() ? "nontrivial" : "trivial";
}

LimitReport verify_limit(const std::vector<FrontCloud>& sequence, const FrontCloud& limit,
                                 const std::vector<int>& base_resolution, const Tolerances& tolerances,
                                 const std::vector<int>& ladder, bool relaxed) {
  const int d = static_cast<int>(base_resolution.size());
  if (d < 1 || d > 3) throw CapabilityError("limit check: the base must be a torus of dimension 1..3");
  if (limit.base_dim != d) throw InputError("limit: base dimension does not match the model");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i].base_dim != d) {
      throw InputError("sequence[" + std::to_string(i) + "]: base dimension does not match the model");
    }
  }
  const auto base = CellComplex(CubicalGrid::torus(base_resolution), "T" + std::to_string(d));

  LimitReport report;
  report.relaxed = relaxed;
  for (const auto& member : sequence) {
    report.distances.push_back(relaxed ? directed_hausdorff(member, limit) : hausdorff(member, limit));
  }
  report.decreasing = true;
  for (std::size_t i = 1; i < report.distances.size(); ++i) {
    report.decreasing = report.decreasing && report.distances[i] < report.distances[i - 1];
  }
  report.limit_spectrum = spectrum(limit, tolerances);
  report.cup_length = cup_length(base);
  report.hypothesis_met = static_cast<int>(report.limit_spectrum.values.size()) < report.cup_length;
  if (!report.hypothesis_met) return report;

  const auto& grid = *base.cubical();
  for (double lambda : report.limit_spectrum.values) {
    LevelVerdict level;
    level.lambda = lambda;
    std::vector<std::uint32_t> cells;
    std::vector<int> pos(d);
    for (const auto& pt : limit.points) {
      double norm = 0;
      for (double v : pt.p) norm = std::max(norm, std::abs(v));
      if (norm > tolerances.eps_p || std::abs(pt.z - lambda) > tolerances.delta_z) continue;
      ++level.points;
      for (int i = 0; i < d; ++i) {
        const int n = base_resolution[i];
        const long x = std::lround(pt.q[i] * n / kTwoPi);
        pos[i] = static_cast<int>(((x % n) + n) % n);
      }
      cells.push_back(static_cast<std::uint32_t>(grid.vertex_cell(grid.vertex_index(pos))));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    level.snapped_vertices = cells.size();
    level.report = is_homologically_nontrivial(Subcomplex::closure(base, cells), ladder);
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace legspec
