#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace legspec {

/// Cubical complex on a rectangular grid with per-axis periodicity.
///
/// Axis i has `resolution[i]` vertices. Cells are addressed by doubled
/// coordinates y: even y_i is a vertex position, odd y_i an edge spanning
/// positions (y_i - 1)/2 and (y_i + 1)/2 (wrapping on periodic axes). The cell
/// index is the row-major rank of y, axis 0 slowest, so the product of two
/// grids indexes its cells as `a * b.cell_count() + b`.
class CubicalGrid {
 public:
  static constexpr int kMaxAxes = 8;

  CubicalGrid() = default;
  /// Throws InputError if an axis has fewer than 3 vertices.
  CubicalGrid(std::vector<int> resolution, std::vector<bool> periodic);

  static CubicalGrid torus(std::vector<int> resolution);
  static CubicalGrid box(int axes, int resolution);
  static CubicalGrid product(const CubicalGrid& a, const CubicalGrid& b);

  [[nodiscard]] int axes() const { return static_cast<int>(resolution_.size()); }
  [[nodiscard]] const std::vector<int>& resolution() const { return resolution_; }
  [[nodiscard]] const std::vector<bool>& periodic() const { return periodic_; }
  [[nodiscard]] bool is_torus() const;
  [[nodiscard]] std::size_t cell_count() const { return cell_count_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] int cells_along(int axis) const { return extent_[axis]; }

  [[nodiscard]] int cell_dim(std::size_t cell) const;
  /// Doubled coordinates of a cell.
  void coordinates(std::size_t cell, std::span<int> y) const;
  [[nodiscard]] std::size_t cell_at(std::span<const int> y) const;

  /// Vertex index is the row-major rank of vertex positions, axis 0 slowest.
  [[nodiscard]] std::size_t vertex_cell(std::size_t vertex) const;
  [[nodiscard]] std::size_t vertex_index(std::span<const int> position) const;
  void vertex_position(std::size_t vertex, std::span<int> position) const;
  /// Vertex index of a 0-cell.
  [[nodiscard]] std::size_t cell_vertex(std::size_t cell) const;

  /// Calls fn(face, sign) for each codimension-one face. Signs follow the
  /// cubical convention (-1)^k (upper - lower) for the k-th spanned axis.
  template <class Fn>
  void for_each_face(std::size_t cell, Fn&& fn) const {
    int y[kMaxAxes];
    coordinates(cell, {y, static_cast<std::size_t>(axes())});
    int k = 0;
    for (int i = 0; i < axes(); ++i) {
      if ((y[i] & 1) == 0) continue;
      const int sign = (k % 2 == 0) ? 1 : -1;
      const std::size_t stride = stride_[i];
      const std::size_t lower = cell - stride;
      const std::size_t upper = (y[i] + 1 == extent_[i]) ? cell - static_cast<std::size_t>(y[i]) * stride
                                                         : cell + stride;
      fn(lower, -sign);
      fn(upper, sign);
      ++k;
    }
  }

  /// Calls fn(vertex_cell) for each of the 2^dim vertices of a cell.
  template <class Fn>
  void for_each_vertex(std::size_t cell, Fn&& fn) const {
    int y[kMaxAxes];
    coordinates(cell, {y, static_cast<std::size_t>(axes())});
    int odd[kMaxAxes];
    int count = 0;
    for (int i = 0; i < axes(); ++i) {
      if (y[i] & 1) odd[count++] = i;
    }
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
      std::size_t c = cell;
      for (int b = 0; b < count; ++b) {
        const int i = odd[b];
        if (mask & (1u << b)) {
          c = (y[i] + 1 == extent_[i]) ? c - static_cast<std::size_t>(y[i]) * stride_[i] : c + stride_[i];
        } else {
          c -= stride_[i];
        }
      }
      fn(c);
    }
  }

  /// Calls fn(coface) for each codimension-one coface.
  template <class Fn>
  void for_each_coface(std::size_t cell, Fn&& fn) const {
    int y[kMaxAxes];
    coordinates(cell, {y, static_cast<std::size_t>(axes())});
    for (int i = 0; i < axes(); ++i) {
      if (y[i] & 1) continue;
      const std::size_t stride = stride_[i];
      if (y[i] + 1 < extent_[i]) fn(cell + stride);
      if (y[i] > 0) {
        fn(cell - stride);
      } else if (periodic_[i]) {
        fn(cell + static_cast<std::size_t>(extent_[i] - 1) * stride);
      }
    }
  }

  friend bool operator==(const CubicalGrid& a, const CubicalGrid& b) {
    return a.resolution_ == b.resolution_ && a.periodic_ == b.periodic_;
  }

 private:
  std::vector<int> resolution_;
  std::vector<bool> periodic_;
  std::vector<int> extent_;           // cells along each axis in doubled coordinates
  std::vector<std::size_t> stride_;   // cell index stride per axis
  std::vector<std::size_t> vstride_;  // vertex index stride per axis
  std::size_t cell_count_ = 0;
  std::size_t vertex_count_ = 0;
};

}  // namespace legspec
