#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace legspec {

/// Finite abstract simplicial complex. Every simplex stores its vertices in
/// strictly increasing order, which fixes the global vertex order used by
/// Alexander-Whitney. Cells are sorted by dimension, then lexicographically,
/// so cell v is vertex v.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closes the given simplices under faces. Vertices 0..vertex_count-1 are
  /// always present. Throws InputError on out-of-range or repeated vertices.
  static SimplicialComplex from_simplices(int vertex_count, const std::vector<std::vector<int>>& simplices);

  [[nodiscard]] std::size_t cell_count() const { return cells_.size(); }
  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] int cell_dim(std::size_t cell) const { return static_cast<int>(cells_[cell].size()) - 1; }
  [[nodiscard]] const std::vector<int>& vertices(std::size_t cell) const { return cells_[cell]; }
  [[nodiscard]] std::optional<std::size_t> find(const std::vector<int>& sorted_vertices) const;
  /// Maximal simplices, for serialization.
  [[nodiscard]] std::vector<std::vector<int>> maximal_simplices() const;

  /// fn(face, sign) with sign (-1)^i for the face omitting vertex i.
  template <class Fn>
  void for_each_face(std::size_t cell, Fn&& fn) const {
    const auto& s = cells_[cell];
    if (s.size() < 2) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      fn(faces_[cell][i], (i % 2 == 0) ? 1 : -1);
    }
  }

  template <class Fn>
  void for_each_vertex(std::size_t cell, Fn&& fn) const {
    for (int v : cells_[cell]) fn(static_cast<std::size_t>(v));
  }

  template <class Fn>
  void for_each_coface(std::size_t cell, Fn&& fn) const {
    for (auto c : cofaces_[cell]) fn(c);
  }

 private:
  int vertex_count_ = 0;
  int dimension_ = -1;
  std::vector<std::vector<int>> cells_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

}  // namespace legspec
