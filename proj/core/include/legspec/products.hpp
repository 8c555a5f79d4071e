#pragma once

#include <map>
#include <utility>
#include <vector>

#include "legspec/cell_complex.hpp"

namespace legspec {

/// Intersection products of canonical basis elements. `entry(p, i, q, j)` is
/// the class b_p:i ∩ b_q:j, of degree p + q - dim.
class IntersectionTable {
 public:
  /// Table for a cubical torus (closed form) or a simplicial closed
  /// F2-manifold (Alexander-Whitney cup product and Poincare duality).
  /// Throws CapabilityError for other complexes.
  explicit IntersectionTable(const CellComplex& complex);

  /// The same construction forced through cup products on a simplicial model.
  static IntersectionTable from_cup_products(const CellComplex& complex);

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] const std::vector<int>& betti() const { return betti_; }
  [[nodiscard]] const HomologyClass& entry(int p, int i, int q, int j) const;
  [[nodiscard]] HomologyClass product(const HomologyClass& a, const HomologyClass& b) const;

 private:
  IntersectionTable() = default;

  int dimension_ = 0;
  std::vector<int> betti_;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, HomologyClass> entries_;
  HomologyClass zero_;
};

/// a ∩ b on a supported model. Throws CapabilityError otherwise.
[[nodiscard]] HomologyClass intersection_product(const CellComplex& complex, const HomologyClass& a,
                                                 const HomologyClass& b);

/// Largest k + 1 such that k classes of degree below dim have a nonzero
/// intersection; 1 when no such class exists.
[[nodiscard]] int cup_length(const CellComplex& complex);
[[nodiscard]] int cup_length(const IntersectionTable& table);

/// Cubical cross product a × b as a chain on the product grid, whose cell
/// index is `a * |B| + b`. Throws CapabilityError for non-cubical input.
[[nodiscard]] Chain cross_cycle(const CellComplex& a_complex, const Chain& a, const CellComplex& b_complex,
                                const Chain& b);
[[nodiscard]] Chain cross_cycle(const CubicalGrid& a_grid, const Chain& a, const CubicalGrid& b_grid, const Chain& b);

/// Alexander-Whitney cup product of cochains on a simplicial complex.
[[nodiscard]] Cochain cup(const SimplicialComplex& complex, const Cochain& u, int p, const Cochain& v, int q);
/// Cap product [σ] ∩ u = u(front p-face) · back face, extended linearly.
[[nodiscard]] Chain cap(const SimplicialComplex& complex, const Chain& sigma, const Cochain& u, int p);

}  // namespace legspec
