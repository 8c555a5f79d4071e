#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace legspec {

/// Boundary matrix over F2 with columns in filtration order, stored as CSR.
/// Row indices of column j refer to earlier columns (faces precede cofaces).
struct FilteredBoundary {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> rows;
  std::vector<std::uint8_t> dims;

  [[nodiscard]] std::size_t size() const { return dims.size(); }
  [[nodiscard]] std::span<const std::uint32_t> column(std::size_t j) const {
    return {rows.data() + offsets[j], rows.data() + offsets[j + 1]};
  }
  /// Appends a column; `faces` must be sorted ascending.
  void push_back(std::uint8_t dim, std::span<const std::uint32_t> faces);
};

struct FilteredReduction {
  /// Paired column for every column, -1 when essential.
  std::vector<std::int64_t> partner;
  /// Columns whose reduced column vanishes and that never become a pivot:
  /// they carry the classes that survive to the full complex.
  std::vector<std::uint32_t> essential;
  /// For each essential column, the XOR of the tags of every column in its
  /// cycle representative. With tags = values of a cocycle basis on each
  /// cell, this gives the coordinates of the essential cycle.
  std::vector<std::uint64_t> essential_tags;
};

/// Standard column reduction with clearing, processing dimensions top-down.
/// `tags` has one 64-bit word per column.
[[nodiscard]] FilteredReduction reduce_filtered(const FilteredBoundary& boundary,
                                                std::span<const std::uint64_t> tags);

}  // namespace legspec
