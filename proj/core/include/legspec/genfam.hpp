#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legspec/cell_complex.hpp"
#include "legspec/minmax.hpp"

namespace legspec {

struct Signature {
  int negative = 0;
  int positive = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Function S on T^d × [-R, R]^k sampled on a grid: the base torus has
/// `base_resolution[i]` nodes per axis (q_i = 2π x_i / n_i) and every fiber
/// axis has m nodes (e = R (2x - (m - 1)) / (m - 1)). The first
/// `signature.negative` fiber axes are negative for Q(e) = -Σ e_i² + Σ e_j².
/// Values are row-major over (base node, fiber node), base-major.
class GeneratingFamily {
 public:
  /// Validates shapes and the outer-layer bound |S - Q| <= boundary_tolerance.
  /// Throws InputError naming the offending field.
  GeneratingFamily(std::vector<int> base_resolution, int fiber_dim, int fiber_resolution, double radius,
                   Signature signature, double boundary_tolerance, std::vector<double> values);

  /// S(q, e) = f(q) + Q(e), with f given on the base nodes.
  static GeneratingFamily quadratic_plus(std::vector<int> base_resolution, const std::vector<double>& f,
                                         int fiber_dim, int fiber_resolution, double radius, Signature signature);

  [[nodiscard]] const std::vector<int>& base_resolution() const { return base_resolution_; }
  [[nodiscard]] int base_dim() const { return static_cast<int>(base_resolution_.size()); }
  [[nodiscard]] int fiber_dim() const { return fiber_dim_; }
  [[nodiscard]] int fiber_resolution() const { return fiber_resolution_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] const Signature& signature() const { return signature_; }
  [[nodiscard]] double boundary_tolerance() const { return boundary_tolerance_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }

  [[nodiscard]] std::size_t base_nodes() const;
  [[nodiscard]] std::size_t fiber_nodes() const;
  [[nodiscard]] double value(std::size_t base_node, std::size_t fiber_node) const {
    return values_[base_node * fiber_nodes() + fiber_node];
  }
  [[nodiscard]] double base_coordinate(int axis, int position) const;
  [[nodiscard]] double fiber_coordinate(int position) const;
  [[nodiscard]] double quadratic(std::size_t fiber_node) const;

  [[nodiscard]] CubicalGrid base_grid() const;
  /// Box grid of the fiber; empty when fiber_dim is 0.
  [[nodiscard]] CubicalGrid fiber_grid() const;
  [[nodiscard]] CubicalGrid product_grid() const;

  [[nodiscard]] GeneratingFamily shifted(double c) const;
  /// Same grids, values replaced; the tolerance becomes the outer-layer deviation of the new values.
  [[nodiscard]] GeneratingFamily with_values(std::vector<double> values) const;
  [[nodiscard]] double max_abs_difference(const GeneratingFamily& other) const;

 private:
  std::vector<int> base_resolution_;
  int fiber_dim_;
  int fiber_resolution_;
  double radius_;
  Signature signature_;
  double boundary_tolerance_;
  std::vector<double> values_;
};

/// S ⊕ S'(q, e, e') = S(q, e) + S'(q, e'), fiber axes reordered so the
/// negative ones come first. Requires equal base, fiber resolution and radius.
[[nodiscard]] GeneratingFamily oplus(const GeneratingFamily& s, const GeneratingFamily& t);

/// Relative cycle θ of the fiber box: the negative-axes disk through the
/// centre, rel the faces where a negative coordinate is ±R.
[[nodiscard]] Chain thom_cycle(const GeneratingFamily& s);
/// Cocycle ψ dual to θ.
[[nodiscard]] Cochain thom_cocycle(const GeneratingFamily& s);
/// Cells of the product grid lying over the negative faces of the box.
[[nodiscard]] std::vector<std::uint8_t> negative_boundary_mask(const GeneratingFamily& s);

/// One sweep over the product grid answers ℓ(a, S) for every class a of the
/// base torus: the entry value of a × θ in H_{deg a + i⁻}(X, A).
class SpectralSelector {
 public:
  explicit SpectralSelector(const GeneratingFamily& s);

  [[nodiscard]] const std::vector<int>& base_betti() const { return betti_; }
  /// Throws InputError for the zero class or a class of another base.
  [[nodiscard]] double ell(const HomologyClass& a) const;
  [[nodiscard]] double gamma() const;
  [[nodiscard]] const std::vector<double>& critical_values() const { return sweep_.critical_values(); }
  [[nodiscard]] const FiltrationSweep& sweep() const { return sweep_; }

 private:
  std::vector<int> betti_;
  int shift_;
  FiltrationSweep sweep_;
};

[[nodiscard]] double ell(const HomologyClass& a, const GeneratingFamily& s);
[[nodiscard]] double gamma(const GeneratingFamily& s);

struct FrontPoint {
  std::vector<double> q;
  std::vector<double> p;
  double z = 0;
};

/// Finite subset of J¹T^d.
struct FrontCloud {
  enum class Source { extracted, loaded };
  int base_dim = 0;
  std::vector<FrontPoint> points;
  Source source = Source::loaded;
  /// Base grid the points were extracted on, when known.
  std::vector<int> base_resolution;
};

/// Nodes where every fiber-axis central difference vanishes or changes sign
/// against an interior neighbour, with p and z from the base central
/// difference and the value.
[[nodiscard]] FrontCloud front(const GeneratingFamily& s);

struct Tolerances {
  double eps_p = 0;
  double delta_z = 0;
};

struct Spectrum {
  std::vector<double> values;
  double eps_p = 0;
  double delta_z = 0;
};

/// eps_p = h·κ with h the coarsest base spacing and κ the largest p-slope
/// between neighbouring points; delta_z = max(eps_p Σ h_i, half the smallest
/// gap between the clusters that forms). Explicit values override either.
[[nodiscard]] Tolerances default_tolerances(const FrontCloud& cloud, std::optional<double> eps_p = std::nullopt,
                                            std::optional<double> delta_z = std::nullopt);
/// Midpoints of the single-linkage clusters (gap delta_z) of the z values of
/// points with |p|_∞ <= eps_p.
[[nodiscard]] Spectrum spectrum(const FrontCloud& cloud, double eps_p, double delta_z);
[[nodiscard]] Spectrum spectrum(const FrontCloud& cloud, const Tolerances& tolerances);

/// Flat-torus distance on q, Euclidean on p and z.
[[nodiscard]] double point_distance(const FrontPoint& a, const FrontPoint& b);
/// sup over a of the distance to b. Throws InputError when either is empty.
[[nodiscard]] double directed_hausdorff(const FrontCloud& a, const FrontCloud& b);
[[nodiscard]] double hausdorff(const FrontCloud& a, const FrontCloud& b);

struct LevelVerdict {
  double lambda = 0;
  std::size_t points = 0;
  std::size_t snapped_vertices = 0;
  NontrivialityReport report;
};

struct LimitReport {
  std::vector<double> distances;  // to the limit; directed when relaxed
  bool relaxed = false;
  bool decreasing = false;        // strictly
  Spectrum limit_spectrum;
  int cup_length = 0;
  bool hypothesis_met = false;
  std::vector<LevelVerdict> levels;
  [[nodiscard]] bool nontrivial() const;
  [[nodiscard]] std::string verdict() const;
};

/// Checks the sequence against the limit on the base torus of the given
/// resolution. With `relaxed`, convergence is measured by the directed
/// distance from each member to the limit.
[[nodiscard]] LimitReport verify_limit(const std::vector<FrontCloud>& sequence, const FrontCloud& limit,
                                               const std::vector<int>& base_resolution, const Tolerances& tolerances,
                                               const std::vector<int>& ladder, bool relaxed = false);

}  // namespace legspec
