#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legspec/cell_complex.hpp"
#include "legspec/field.hpp"

namespace legspec {

/// Real values on the vertices of a complex, extended to cells by the lower
/// star rule (a cell takes the max of its vertex values).
class SampledFunction {
 public:
  /// Throws InputError on a length mismatch or a non-finite value.
  SampledFunction(const CellComplex& complex, std::vector<double> values);
  SampledFunction(CellComplex&&, std::vector<double>) = delete;  // would dangle

  [[nodiscard]] const CellComplex& complex() const { return *complex_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] double min() const;
  [[nodiscard]] double max() const;
  [[nodiscard]] double cell_value(std::size_t cell) const;
  [[nodiscard]] std::vector<double> cell_values() const;
  /// Distinct vertex values, ascending.
  [[nodiscard]] std::vector<double> distinct_values() const;
  [[nodiscard]] SampledFunction shifted(double c) const;

 private:
  const CellComplex* complex_;
  std::vector<double> values_;
};

/// Cells all of whose vertex values are < a.
[[nodiscard]] Subcomplex sublevel(const SampledFunction& f, double a);

/// One pass of persistence over the lower-star filtration, ordered by
/// (value, dim, index). Essential cycles are tracked by their pairings with
/// a cocycle basis, so the entry value of any class is read off without
/// re-reducing. Cells marked in `excluded` form a subcomplex A and the sweep
/// computes H_*(X^t, A) -> H_*(X, A).
class FiltrationSweep {
 public:
  explicit FiltrationSweep(const SampledFunction& f);
  /// Sweep on a cubical grid; `cocycles[d]` must be dual to a basis of
  /// H_d(X, A) (at most 64 per degree).
  FiltrationSweep(const CubicalGrid& grid, const std::vector<double>& cell_values,
                  const std::vector<std::uint8_t>& excluded, const std::vector<std::vector<Cochain>>& cocycles);

  /// Distinct cell values, strictly increasing.
  [[nodiscard]] const std::vector<double>& thresholds() const { return thresholds_; }
  /// Births of the essential classes per degree.
  [[nodiscard]] const std::vector<std::vector<double>>& essential_births() const { return births_; }
  [[nodiscard]] std::vector<int> betti() const;

  /// inf{a : the class with these coordinates is in the image of H_d(X^a)};
  /// nullopt for the zero vector.
  [[nodiscard]] std::optional<double> entry_value(int degree, std::uint64_t coordinates) const;
  /// Max over the homogeneous components. Throws InputError for the zero class.
  [[nodiscard]] double entry_value(const HomologyClass& cls) const;
  /// Values of cells in pairs of positive persistence and births of
  /// essential classes, ascending and distinct.
  [[nodiscard]] const std::vector<double>& critical_values() const { return critical_; }

 private:
  template <class Faces, class Dim>
  void run(std::size_t cell_count, Faces&& faces, Dim&& dim, const std::vector<double>& cell_values,
           const std::vector<std::uint8_t>& excluded, const std::vector<std::vector<Cochain>>& cocycles);

  struct XorBasis {
    std::vector<std::uint64_t> vectors;  // distinct leading bits, descending
    std::vector<std::uint64_t> combos;   // which essential columns make up each vector
  };

  std::vector<double> thresholds_;
  std::vector<std::vector<double>> births_;
  std::vector<XorBasis> solvers_;
  std::vector<double> critical_;
};

/// c_LS(alpha, f). Throws InputError for the zero class.
[[nodiscard]] double c_ls(const HomologyClass& alpha, const SampledFunction& f);

struct EssentialValues {
  std::vector<double> values;
  std::vector<std::pair<HomologyClass, double>> table;
};
/// c_LS over every nonzero F2 class. Throws CapabilityError for field Q.
[[nodiscard]] EssentialValues essential_values(const SampledFunction& f, Field field = Field::f2);
[[nodiscard]] std::vector<double> critical_values(const SampledFunction& f);

struct RadiusReport {
  int radius = 0;
  std::size_t cells = 0;
  std::vector<int> ranks;  // rank of H_j(U) -> H_j(M) for j = 1..dim
  bool nontrivial = false;
};

struct NontrivialityReport {
  std::vector<RadiusReport> radii;
  bool nontrivial = false;  // at every tested radius
  std::optional<int> first_failing_radius;
  [[nodiscard]] std::string verdict() const;
};

/// Tests U_r = r closed-star steps around A for every r of the ladder.
/// Throws InputError for an empty A, an empty ladder or a negative radius.
[[nodiscard]] NontrivialityReport is_homologically_nontrivial(const Subcomplex& a, const std::vector<int>& ladder);

/// Cells with lower-star value in [lambda - h, lambda + h], closed under faces.
[[nodiscard]] Subcomplex critical_set(const SampledFunction& f, double lambda, double h);
/// Half the minimal gap between distinct vertex values; 0 for a constant.
[[nodiscard]] double critical_band(const SampledFunction& f);

struct Coincidence {
  HomologyClass alpha;
  HomologyClass beta;
  HomologyClass product;
  double lambda = 0;
  NontrivialityReport report;
};

struct LsCheckReport {
  double band = 0;
  std::vector<int> ladder;
  std::vector<Coincidence> coincidences;
};

/// Every (alpha, beta) with deg beta < dim, alpha ∩ beta != 0 and
/// c_LS(alpha ∩ beta) = c_LS(alpha), with the critical set at that level
/// run through the non-triviality test.
[[nodiscard]] LsCheckReport ls_check(const SampledFunction& f, const std::vector<int>& ladder = {1, 2, 3});

}  // namespace legspec
