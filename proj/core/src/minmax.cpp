#include "legspec/minmax.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "legspec/errors.hpp"
#include "legspec/filtered_reduction.hpp"
#include "legspec/homology.hpp"
#include "legspec/products.hpp"

namespace legspec {

SampledFunction::SampledFunction(const CellComplex& complex, std::vector<double> values)
    : complex_(&complex), values_(std::move(values)) {
  if (values_.size() != complex.vertex_count()) {
    throw InputError("values: expected " + std::to_string(complex.vertex_count()) + " vertex values, got " +
                     std::to_string(values_.size()));
  }
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (!std::isfinite(values_[v])) throw InputError("values[" + std::to_string(v) + "]: not a finite number");
  }
}

double SampledFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double SampledFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

double SampledFunction::cell_value(std::size_t cell) const {
  double v = -std::numeric_limits<double>::infinity();
  complex_->for_each_vertex(cell, [&](std::size_t vc) { v = std::max(v, values_[complex_->cell_vertex(vc)]); });
  return v;
}

std::vector<double> SampledFunction::cell_values() const {
  std::vector<double> out(complex_->cell_count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = cell_value(c);
  return out;
}

std::vector<double> SampledFunction::distinct_values() const {
  auto v = values_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SampledFunction SampledFunction::shifted(double c) const {
  auto v = values_;
  for (auto& x : v) x += c;
  return SampledFunction(*complex_, std::move(v));
}

Subcomplex sublevel(const SampledFunction& f, double a) {
  const auto& complex = f.complex();
  std::vector<std::uint8_t> mask(complex.cell_count(), 0);
  for (std::size_t c = 0; c < mask.size(); ++c) mask[c] = f.cell_value(c) < a ? 1 : 0;
  return Subcomplex(complex, std::move(mask));
}

// ---------------------------------------------------------------- sweep

FiltrationSweep::FiltrationSweep(const SampledFunction& f) {
  const auto& complex = f.complex();
  run(
      complex.cell_count(), [&](std::size_t c, auto&& fn) { complex.for_each_face(c, [&](std::size_t g, int) { fn(g); }); },
      [&](std::size_t c) { return complex.cell_dim(c); }, f.cell_values(), {}, complex.basis().cocycles);
}

FiltrationSweep::FiltrationSweep(const CubicalGrid& grid, const std::vector<double>& cell_values,
                                 const std::vector<std::uint8_t>& excluded,
                                 const std::vector<std::vector<Cochain>>& cocycles) {
  if (cell_values.size() != grid.cell_count()) throw InputError("sweep: one value per cell required");
  run(
      grid.cell_count(), [&](std::size_t c, auto&& fn) { grid.for_each_face(c, [&](std::size_t g, int) { fn(g); }); },
      [&](std::size_t c) { return grid.cell_dim(c); }, cell_values, excluded, cocycles);
}

template <class Faces, class Dim>
void FiltrationSweep::run(std::size_t cell_count, Faces&& faces, Dim&& dim, const std::vector<double>& cell_values,
                          const std::vector<std::uint8_t>& excluded,
                          const std::vector<std::vector<Cochain>>& cocycles) {
  const auto included = [&](std::size_t c) { return excluded.empty() || excluded[c] == 0; };
  std::vector<std::uint32_t> order;
  order.reserve(cell_count);
  std::vector<std::uint8_t> dims(cell_count);
  int top = 0;
  for (std::size_t c = 0; c < cell_count; ++c) {
    dims[c] = static_cast<std::uint8_t>(dim(c));
    top = std::max<int>(top, dims[c]);
    if (included(c)) order.push_back(static_cast<std::uint32_t>(c));
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cell_values[a] != cell_values[b]) return cell_values[a] < cell_values[b];
    if (dims[a] != dims[b]) return dims[a] < dims[b];
    return a < b;
  });
  constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> position(cell_count, kAbsent);
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<std::uint32_t>(k);

  std::vector<std::uint64_t> cell_tags(cell_count, 0);
  for (std::size_t d = 0; d < cocycles.size(); ++d) {
    if (cocycles[d].size() > 64) throw CapabilityError("sweep: more than 64 classes in one degree");
    for (std::size_t k = 0; k < cocycles[d].size(); ++k) {
      for (auto c : cocycles[d][k]) {
        if (dims[c] != d) throw std::logic_error("sweep: cocycle cell of the wrong dimension");
        cell_tags[c] |= std::uint64_t{1} << k;
      }
    }
  }

  FilteredBoundary boundary;
  boundary.offsets.reserve(order.size() + 1);
  boundary.dims.reserve(order.size());
  boundary.rows.reserve(order.size() * 4);
  std::vector<std::uint64_t> tags(order.size());
  std::vector<std::uint32_t> column;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto c = order[k];
    column.clear();
    faces(c, [&](std::size_t f) {
      if (position[f] != kAbsent) column.push_back(position[f]);
    });
    std::sort(column.begin(), column.end());
    boundary.push_back(dims[c], column);
    tags[k] = cell_tags[c];
  }
  const auto red = reduce_filtered(boundary, tags);

  thresholds_.clear();
  for (auto c : order) {
    if (thresholds_.empty() || thresholds_.back() != cell_values[c]) thresholds_.push_back(cell_values[c]);
  }

  const int degrees = std::max<int>(top + 1, static_cast<int>(cocycles.size()));
  births_.assign(degrees, {});
  std::vector<std::vector<std::uint64_t>> essential_tags(degrees);
  for (std::size_t e = 0; e < red.essential.size(); ++e) {
    const auto k = red.essential[e];
    births_[boundary.dims[k]].push_back(cell_values[order[k]]);
    essential_tags[boundary.dims[k]].push_back(red.essential_tags[e]);
  }

  solvers_.assign(degrees, {});
  for (int d = 0; d < degrees; ++d) {
    const std::size_t expected = d < static_cast<int>(cocycles.size()) ? cocycles[d].size() : 0;
    if (births_[d].size() != expected) {
      throw std::logic_error("sweep: cocycle basis does not match homology in degree " + std::to_string(d));
    }
    auto& solver = solvers_[d];
    for (std::size_t j = 0; j < essential_tags[d].size(); ++j) {
      std::uint64_t v = essential_tags[d][j];
      std::uint64_t combo = std::uint64_t{1} << j;
      for (std::size_t s = 0; s < solver.vectors.size(); ++s) {
        const int lead = 63 - std::countl_zero(solver.vectors[s]);
        if ((v >> lead) & 1u) {
          v ^= solver.vectors[s];
          combo ^= solver.combos[s];
        }
      }
      if (v == 0) throw std::logic_error("sweep: essential cycles are dependent in degree " + std::to_string(d));
      // Keep vectors sorted by descending leading bit.
      const int lead = 63 - std::countl_zero(v);
      std::size_t at = 0;
      while (at < solver.vectors.size() && 63 - std::countl_zero(solver.vectors[at]) > lead) ++at;
      solver.vectors.insert(solver.vectors.begin() + static_cast<std::ptrdiff_t>(at), v);
      solver.combos.insert(solver.combos.begin() + static_cast<std::ptrdiff_t>(at), combo);
    }
  }

  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto p = red.partner[k];
    if (p < 0) continue;
    if (static_cast<std::size_t>(p) < k && cell_values[order[p]] != cell_values[order[k]]) {
      critical_.push_back(cell_values[order[p]]);
      critical_.push_back(cell_values[order[k]]);
    }
  }
  for (const auto& b : births_) critical_.insert(critical_.end(), b.begin(), b.end());
  std::sort(critical_.begin(), critical_.end());
  critical_.erase(std::unique(critical_.begin(), critical_.end()), critical_.end());
}

std::vector<int> FiltrationSweep::betti() const {
  std::vector<int> b;
  for (const auto& d : births_) b.push_back(static_cast<int>(d.size()));
  return b;
}

std::optional<double> FiltrationSweep::entry_value(int degree, std::uint64_t coordinates) const {
  if (coordinates == 0) return std::nullopt;
  if (degree < 0 || degree >= static_cast<int>(solvers_.size())) {
    throw InputError("class: no homology in degree " + std::to_string(degree));
  }
  const auto& solver = solvers_[degree];
  std::uint64_t v = coordinates;
  std::uint64_t combo = 0;
  for (std::size_t s = 0; s < solver.vectors.size(); ++s) {
    const int lead = 63 - std::countl_zero(solver.vectors[s]);
    if ((v >> lead) & 1u) {
      v ^= solver.vectors[s];
      combo ^= solver.combos[s];
    }
  }
  if (v != 0) throw InputError("class: coordinates outside the homology in degree " + std::to_string(degree));
  double value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < births_[degree].size(); ++j) {
    if ((combo >> j) & 1u) value = std::max(value, births_[degree][j]);
  }
  return value;
}

double FiltrationSweep::entry_value(const HomologyClass& cls) const {
  std::optional<double> best;
  for (int d = 0; d <= cls.max_degree(); ++d) {
    if (cls.in_degree(d).size() > 64) throw CapabilityError("class: more than 64 coefficients in one degree");
    const auto v = entry_value(d, cls.bits(d));
    if (v) best = best ? std::max(*best, *v) : *v;
  }
  if (!best) throw InputError("class: the selector is undefined on the zero class");
  return *best;
}

double c_ls(const HomologyClass& alpha, const SampledFunction& f) {
  if (alpha.is_zero()) throw InputError("class: the selector is undefined on the zero class");
  if (alpha.betti() != f.complex().basis().betti()) throw InputError("class: does not belong to this complex");
  return FiltrationSweep(f).entry_value(alpha);
}

EssentialValues essential_values(const SampledFunction& f, Field field) {
  if (field != Field::f2) throw CapabilityError("essential values: class enumeration needs a finite field (f2)");
  const FiltrationSweep sweep(f);
  EssentialValues out;
  for (auto& cls : HomologyClass::all_nonzero(f.complex().basis().betti())) {
    const double v = sweep.entry_value(cls);
    out.values.push_back(v);
    out.table.emplace_back(std::move(cls), v);
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

std::vector<double> critical_values(const SampledFunction& f) {
  return FiltrationSweep(f).critical_values();
}

// ---------------------------------------------------------------- non-triviality

std::string NontrivialityReport::verdict() const {
  if (nontrivial) return "nontrivial";
  return "trivial at radius " + std::to_string(first_failing_radius.value_or(0));
}

NontrivialityReport is_homologically_nontrivial(const Subcomplex& a, const std::vector<int>& ladder) {
  if (a.is_empty()) throw InputError("non-triviality: the set A is empty");
  if (ladder.empty()) throw InputError("ladder: at least one radius is required");
  for (int r : ladder) {
    if (r < 0) throw InputError("ladder: radii must be nonnegative");
  }
  NontrivialityReport report;
  report.nontrivial = true;
  const int n = a.parent().dimension();
  for (int r : ladder) {
    const auto u = a.star_neighborhood(r);
    RadiusReport rr;
    rr.radius = r;
    rr.cells = u.size();
    for (int j = 1; j <= n; ++j) {
      const int rank = induced_map(u, j).rank;
      rr.ranks.push_back(rank);
      rr.nontrivial = rr.nontrivial || rank > 0;
    }
    if (!rr.nontrivial && report.nontrivial) {
      report.nontrivial = false;
      report.first_failing_radius = r;
    }
    report.radii.push_back(std::move(rr));
  }
  return report;
}

double critical_band(const SampledFunction& f) {
  const auto v = f.distinct_values();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < v.size(); ++k) gap = std::min(gap, v[k] - v[k - 1]);
  return v.size() < 2 ? 0.0 : gap / 2;
}

Subcomplex critical_set(const SampledFunction& f, double lambda, double h) {
  const auto& complex = f.complex();
  std::vector<std::uint32_t> cells;
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    const double v = f.cell_value(c);
    if (v >= lambda - h && v <= lambda + h) cells.push_back(static_cast<std::uint32_t>(c));
  }
  return Subcomplex::closure(complex, cells);
}

LsCheckReport ls_check(const SampledFunction& f, const std::vector<int>& ladder) {
  const auto& complex = f.complex();
  const IntersectionTable table(complex);
  const FiltrationSweep sweep(f);
  const auto betti = complex.basis().betti();
  LsCheckReport report;
  report.band = critical_band(f);
  report.ladder = ladder;

  std::vector<HomologyClass> betas;
  for (int d = 0; d < complex.dimension(); ++d) {
    for (auto& b : HomologyClass::all_nonzero_in_degree(betti, d)) betas.push_back(std::move(b));
  }
  std::map<double, NontrivialityReport> by_level;
  for (const auto& alpha : HomologyClass::all_nonzero(betti)) {
    const double ca = sweep.entry_value(alpha);
    for (const auto& beta : betas) {
      auto product = table.product(alpha, beta);
      if (product.is_zero() || sweep.entry_value(product) != ca) continue;
      auto it = by_level.find(ca);
      if (it == by_level.end()) {
        it = by_level.emplace(ca, is_homologically_nontrivial(critical_set(f, ca, report.band), ladder)).first;
      }
      report.coincidences.push_back({alpha, beta, std::move(product), ca, it->second});
    }
  }
  return report;
}

}  // namespace legspec
