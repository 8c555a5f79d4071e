#include "legspec/sparse_matrix.hpp"

#include <string>
#include <utility>

#include "legspec/errors.hpp"

namespace legspec {
namespace {

// target <- target - factor * source, keeping rows sorted and dropping zeros.
template <class F>
void subtract_scaled(typename SparseColumnMatrix<F>::Column& target,
                     const typename SparseColumnMatrix<F>::Column& source, const F& factor) {
  typename SparseColumnMatrix<F>::Column out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->row < b->row)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->row < a->row) {
      out.push_back({b->row, F(0) - factor * b->value});
      ++b;
    } else {
      F v = a->value - factor * b->value;
      if (!is_zero(v)) out.push_back({a->row, v});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class F>
typename SparseColumnMatrix<F>::Column dense_to_column(std::span<const F> v) {
  typename SparseColumnMatrix<F>::Column column;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) column.push_back({static_cast<std::uint32_t>(i), v[i]});
  }
  return column;
}

}  // namespace

template <class F>
SparseColumnMatrix<F>::SparseColumnMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

template <class F>
SparseColumnMatrix<F> SparseColumnMatrix<F>::identity(std::size_t n) {
  SparseColumnMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    m.columns_[j].push_back({static_cast<std::uint32_t>(j), F(1)});
  }
  return m;
}

template <class F>
SparseColumnMatrix<F> SparseColumnMatrix<F>::from_dense(const std::vector<std::vector<F>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  SparseColumnMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("from_dense: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!is_zero(rows[i][j])) m.columns_[j].push_back({static_cast<std::uint32_t>(i), rows[i][j]});
    }
  }
  return m;
}

template <class F>
F SparseColumnMatrix<F>::at(std::size_t row, std::size_t col) const {
  for (const auto& e : columns_.at(col)) {
    if (e.row == row) return e.value;
    if (e.row > row) break;
  }
  return F(0);
}

template <class F>
void SparseColumnMatrix<F>::check_column(const Column& column) const {
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (column[k].row >= rows_) throw InputError("sparse column: row index out of range");
    if (is_zero(column[k].value)) throw InputError("sparse column: stored zero entry");
    if (k > 0 && column[k - 1].row >= column[k].row) {
      throw InputError("sparse column: row indices not strictly increasing");
    }
  }
}

template <class F>
void SparseColumnMatrix<F>::set_column(std::size_t j, Column column) {
  check_column(column);
  columns_.at(j) = std::move(column);
}

template <class F>
void SparseColumnMatrix<F>::push_back(Column column) {
  check_column(column);
  columns_.push_back(std::move(column));
}

template <class F>
std::vector<std::vector<F>> SparseColumnMatrix<F>::to_dense() const {
  std::vector<std::vector<F>> out(rows_, std::vector<F>(cols(), F(0)));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out[e.row][j] = e.value;
  }
  return out;
}

template <class F>
SparseColumnMatrix<F> SparseColumnMatrix<F>::transpose() const {
  SparseColumnMatrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) {
      t.columns_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
    }
  }
  return t;
}

template <class F>
std::size_t Reduction<F>::rank() const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < reduced.cols(); ++j) {
    if (!reduced.column(j).empty()) ++r;
  }
  return r;
}

template <class F>
Reduction<F> reduce(const SparseColumnMatrix<F>& m) {
  const std::size_t cols = m.cols();
  std::vector<typename SparseColumnMatrix<F>::Column> r(cols);
  std::vector<typename SparseColumnMatrix<F>::Column> v(cols);
  std::vector<std::int64_t> pivot(m.rows(), -1);

  for (std::size_t j = 0; j < cols; ++j) {
    r[j] = m.column(j);
    v[j] = {{static_cast<std::uint32_t>(j), F(1)}};
    while (!r[j].empty()) {
      const auto p = r[j].back().row;
      const auto i = pivot[p];
      if (i < 0) break;
      const F factor = r[j].back().value / r[i].back().value;
      subtract_scaled<F>(r[j], r[i], factor);
      subtract_scaled<F>(v[j], v[i], factor);
    }
    if (!r[j].empty()) pivot[r[j].back().row] = static_cast<std::int64_t>(j);
  }

  Reduction<F> out{SparseColumnMatrix<F>(m.rows(), cols), SparseColumnMatrix<F>(cols, cols), std::move(pivot)};
  for (std::size_t j = 0; j < cols; ++j) {
    out.reduced.set_column(j, std::move(r[j]));
    out.transform.set_column(j, std::move(v[j]));
  }
  return out;
}

template <class F>
ImageOracle<F>::ImageOracle(const SparseColumnMatrix<F>& m) : reduction_(reduce(m)) {}

template <class F>
ImageQuery<F> ImageOracle<F>::query(std::span<const F> v) const {
  const auto& red = reduction_.reduced;
  if (v.size() != red.rows()) {
    throw InputError("in_image: vector length " + std::to_string(v.size()) +
                     " does not match row count " + std::to_string(red.rows()));
  }
  auto w = dense_to_column<F>(v);
  // Coefficients with respect to the reduced columns.
  typename SparseColumnMatrix<F>::Column in_reduced;
  std::vector<F> by_reduced(red.cols(), F(0));
  while (!w.empty()) {
    const auto p = w.back().row;
    const auto i = reduction_.pivot_column_of_row[p];
    if (i < 0) return {};
    const F factor = w.back().value / red.column(i).back().value;
    subtract_scaled<F>(w, red.column(i), factor);
    by_reduced[i] += factor;
  }
  // reduced = m * transform, so v = m * (transform * by_reduced).
  ImageQuery<F> out{true, std::vector<F>(red.cols(), F(0))};
  for (std::size_t i = 0; i < by_reduced.size(); ++i) {
    if (is_zero(by_reduced[i])) continue;
    for (const auto& e : reduction_.transform.column(i)) {
      out.coefficients[e.row] += by_reduced[i] * e.value;
    }
  }
  return out;
}

template <class F>
ImageQuery<F> in_image(const SparseColumnMatrix<F>& m, std::span<const F> v) {
  if (v.size() != m.rows()) {
    throw InputError("in_image: vector length " + std::to_string(v.size()) +
                     " does not match row count " + std::to_string(m.rows()));
  }
  return ImageOracle<F>(m).query(v);
}

template <class F>
std::size_t rank(const SparseColumnMatrix<F>& m) {
  return reduce(m).rank();
}

template <class F>
std::vector<std::vector<F>> kernel_basis(const SparseColumnMatrix<F>& m) {
  const auto red = reduce(m);
  std::vector<std::vector<F>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!red.reduced.column(j).empty()) continue;
    std::vector<F> vec(m.cols(), F(0));
    for (const auto& e : red.transform.column(j)) vec[e.row] = e.value;
    basis.push_back(std::move(vec));
  }
  return basis;
}

#define LEGSPEC_INSTANTIATE(F)                                                              \
  template class SparseColumnMatrix<F>;                                                     \
  template struct Reduction<F>;                                                             \
  template class ImageOracle<F>;                                                            \
  template Reduction<F> reduce<F>(const SparseColumnMatrix<F>&);                            \
  template ImageQuery<F> in_image<F>(const SparseColumnMatrix<F>&, std::span<const F>);     \
  template std::size_t rank<F>(const SparseColumnMatrix<F>&);                               \
  template std::vector<std::vector<F>> kernel_basis<F>(const SparseColumnMatrix<F>&);

LEGSPEC_INSTANTIATE(F2)
LEGSPEC_INSTANTIATE(Rational)

#undef LEGSPEC_INSTANTIATE

}  // namespace legspec
