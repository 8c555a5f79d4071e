#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "legspec/cubical_grid.hpp"
#include "legspec/simplicial_complex.hpp"

namespace legspec {

/// F2 chain or cochain: sorted, duplicate-free cell indices.
using Chain = std::vector<std::uint32_t>;
using Cochain = std::vector<std::uint32_t>;

/// Pairing <cochain, chain> over F2.
[[nodiscard]] bool pairing(const Cochain& cochain, const Chain& chain);
/// Sum of two F2 chains.
[[nodiscard]] Chain add(const Chain& a, const Chain& b);

/// Fixed homology basis with dual cocycles: <cocycles[d][i], cycles[d][j]> = [i == j].
struct CanonicalBasis {
  std::vector<std::vector<Chain>> cycles;
  std::vector<std::vector<Cochain>> cocycles;
  std::vector<std::vector<std::string>> labels;

  [[nodiscard]] std::vector<int> betti() const;
  [[nodiscard]] int betti(int degree) const;
  [[nodiscard]] int total() const;
};

enum class ComplexKind { simplicial, cubical };

/// Immutable cell complex: a simplicial complex or a cubical grid (the
/// built-in tori are periodic cubical grids). The boundary operator is
/// verified to square to zero at construction.
class CellComplex {
 public:
  /// Canonical basis computed by column reduction.
  explicit CellComplex(SimplicialComplex complex, std::string name = "simplicial");
  /// Canonical cycles supplied by the caller (built-in models); each must be
  /// a cycle and together they must form a homology basis.
  CellComplex(SimplicialComplex complex, std::vector<std::vector<Chain>> cycles,
              std::vector<std::vector<std::string>> labels, std::string name);
  explicit CellComplex(CubicalGrid grid, std::string name = "cubical");

  [[nodiscard]] ComplexKind kind() const;
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const SimplicialComplex* simplicial() const { return std::get_if<SimplicialComplex>(&model_); }
  [[nodiscard]] const CubicalGrid* cubical() const { return std::get_if<CubicalGrid>(&model_); }
  [[nodiscard]] bool is_cubical_torus() const;

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] std::size_t cell_count() const { return dims_.size(); }
  [[nodiscard]] int cell_dim(std::size_t cell) const { return dims_[cell]; }
  [[nodiscard]] std::size_t vertex_count() const;
  [[nodiscard]] std::size_t vertex_cell(std::size_t vertex) const;
  [[nodiscard]] std::size_t cell_vertex(std::size_t cell) const;

  template <class Fn>
  void for_each_face(std::size_t cell, Fn&& fn) const {
    std::visit([&](const auto& m) { m.for_each_face(cell, fn); }, model_);
  }
  template <class Fn>
  void for_each_vertex(std::size_t cell, Fn&& fn) const {
    if (const auto* s = simplicial()) {
      s->for_each_vertex(cell, fn);
    } else {
      cubical()->for_each_vertex(cell, fn);
    }
  }
  template <class Fn>
  void for_each_coface(std::size_t cell, Fn&& fn) const {
    std::visit([&](const auto& m) { m.for_each_coface(cell, fn); }, model_);
  }

  [[nodiscard]] Chain boundary(const Chain& chain) const;
  [[nodiscard]] bool is_cycle(const Chain& chain) const { return boundary(chain).empty(); }
  [[nodiscard]] const CanonicalBasis& basis() const { return basis_; }

 private:
  void index_cells();
  void verify_boundary_squares_to_zero() const;

  std::variant<SimplicialComplex, CubicalGrid> model_;
  std::string name_;
  int dimension_ = 0;
  std::vector<std::uint8_t> dims_;
  CanonicalBasis basis_;
};

/// Canonical basis of a cubical grid: for every set I of periodic axes, the
/// coordinate subtorus spanned by I through the origin, and the dual cocycle
/// of I-spanning cells at position 0 along I.
[[nodiscard]] CanonicalBasis cubical_canonical_basis(const CubicalGrid& grid);

/// Element of H_*(M; F2) in the canonical basis, stored per degree. Classes
/// may be inhomogeneous; `degree()` is set only for homogeneous nonzero ones.
class HomologyClass {
 public:
  HomologyClass() = default;
  explicit HomologyClass(std::vector<std::vector<std::uint8_t>> coefficients);

  static HomologyClass zero(const std::vector<int>& betti);
  static HomologyClass basis_element(const std::vector<int>& betti, int degree, int index);
  static HomologyClass point(const std::vector<int>& betti);
  /// Top-degree generator; requires a one-dimensional top homology.
  static HomologyClass fundamental(const std::vector<int>& betti);
  /// Coefficients concatenated over degrees 0, 1, ...
  static HomologyClass from_flat(const std::vector<int>& betti, const std::vector<std::uint8_t>& flat);
  /// All 2^total - 1 nonzero classes, ordered by their flat bit pattern.
  static std::vector<HomologyClass> all_nonzero(const std::vector<int>& betti);
  /// All nonzero homogeneous classes of the given degree.
  static std::vector<HomologyClass> all_nonzero_in_degree(const std::vector<int>& betti, int degree);

  [[nodiscard]] int max_degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  [[nodiscard]] const std::vector<std::uint8_t>& in_degree(int degree) const { return coefficients_.at(degree); }
  [[nodiscard]] std::uint64_t bits(int degree) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_zero_in_degree(int degree) const;
  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] std::vector<std::uint8_t> flat() const;
  [[nodiscard]] std::vector<int> betti() const;
  /// Compact label such as "b0:0+b1:1", or "0".
  [[nodiscard]] std::string to_string() const;

  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend bool operator<(const HomologyClass& a, const HomologyClass& b) { return a.flat() < b.flat(); }

 private:
  std::vector<std::vector<std::uint8_t>> coefficients_;
};

/// Coordinates of a cycle of the given degree in the canonical basis.
[[nodiscard]] std::vector<std::uint8_t> coordinates(const CellComplex& complex, const Chain& cycle, int degree);
/// Sum of canonical cycles selected by the class in `degree`.
[[nodiscard]] Chain representative(const CellComplex& complex, const HomologyClass& cls, int degree);

/// Face-closed set of cells of a parent complex. The parent must outlive it.
class Subcomplex {
 public:
  /// Throws InputError unless the mask is closed under faces.
  Subcomplex(const CellComplex& parent, std::vector<std::uint8_t> mask);
  Subcomplex(CellComplex&&, std::vector<std::uint8_t>) = delete;  // would dangle

  static Subcomplex empty(const CellComplex& parent);
  static Subcomplex full(const CellComplex& parent);
  /// Smallest subcomplex containing the cells.
  static Subcomplex closure(const CellComplex& parent, const std::vector<std::uint32_t>& cells);

  [[nodiscard]] const CellComplex& parent() const { return *parent_; }
  [[nodiscard]] bool contains(std::size_t cell) const { return mask_[cell] != 0; }
  [[nodiscard]] const std::vector<std::uint8_t>& mask() const { return mask_; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool is_empty() const { return size() == 0; }

  /// Closure of every cell sharing a vertex with this subcomplex, repeated
  /// `steps` times.
  [[nodiscard]] Subcomplex star_neighborhood(int steps) const;

 private:
  const CellComplex* parent_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace legspec
