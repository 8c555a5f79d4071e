#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "legspec/field.hpp"

namespace legspec {

template <class F>
struct Entry {
  std::uint32_t row;
  F value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Column-major sparse matrix. Each column holds its nonzero entries sorted by
/// strictly increasing row index; zero values are never stored.
template <class F>
class SparseColumnMatrix {
 public:
  using Column = std::vector<Entry<F>>;

  SparseColumnMatrix() = default;
  SparseColumnMatrix(std::size_t rows, std::size_t cols);

  static SparseColumnMatrix identity(std::size_t n);
  /// Builds from a dense row-major table.
  static SparseColumnMatrix from_dense(const std::vector<std::vector<F>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const Column& column(std::size_t j) const { return columns_.at(j); }
  [[nodiscard]] F at(std::size_t row, std::size_t col) const;

  /// Replaces column j. Throws InputError when the column violates the
  /// sorted / nonzero / in-range invariants.
  void set_column(std::size_t j, Column column);
  void push_back(Column column);

  [[nodiscard]] std::vector<std::vector<F>> to_dense() const;
  [[nodiscard]] SparseColumnMatrix transpose() const;

  friend bool operator==(const SparseColumnMatrix&, const SparseColumnMatrix&) = default;

 private:
  void check_column(const Column& column) const;

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Largest row index of a nonzero column, or -1.
template <class F>
[[nodiscard]] std::int64_t low(const SparseColumnMatrix<F>& m, std::size_t j) {
  const auto& column = m.column(j);
  return column.empty() ? -1 : static_cast<std::int64_t>(column.back().row);
}

/// Column-echelon form `reduced = input * transform` where `low` is injective
/// on the nonzero columns of `reduced`.
template <class F>
struct Reduction {
  SparseColumnMatrix<F> reduced;
  SparseColumnMatrix<F> transform;
  std::vector<std::int64_t> pivot_column_of_row;  // -1 when the row is no pivot

  [[nodiscard]] std::size_t rank() const;
};

template <class F>
[[nodiscard]] Reduction<F> reduce(const SparseColumnMatrix<F>& m);

template <class F>
struct ImageQuery {
  bool member = false;
  std::vector<F> coefficients;  // length cols(m); set only when member
};

/// Reduces once; answers any number of membership queries against the
/// column span of the matrix.
template <class F>
class ImageOracle {
 public:
  explicit ImageOracle(const SparseColumnMatrix<F>& m);

  [[nodiscard]] ImageQuery<F> query(std::span<const F> v) const;
  [[nodiscard]] std::size_t rank() const { return reduction_.rank(); }

 private:
  Reduction<F> reduction_;
};

template <class F>
[[nodiscard]] ImageQuery<F> in_image(const SparseColumnMatrix<F>& m, std::span<const F> v);

template <class F>
[[nodiscard]] std::size_t rank(const SparseColumnMatrix<F>& m);

/// Basis of the null space, as dense vectors of length cols(m).
template <class F>
[[nodiscard]] std::vector<std::vector<F>> kernel_basis(const SparseColumnMatrix<F>& m);

extern template class SparseColumnMatrix<F2>;
extern template class SparseColumnMatrix<Rational>;
extern template class ImageOracle<F2>;
extern template class ImageOracle<Rational>;

}  // namespace legspec
