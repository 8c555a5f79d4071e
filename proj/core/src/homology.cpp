#include "legspec/homology.hpp"

#include <algorithm>
#include <string>

#include "legspec/errors.hpp"
#include "legspec/filtered_reduction.hpp"
#include "legspec/sparse_matrix.hpp"

namespace legspec {
namespace {

// Cells of the mask ordered by (dim, index), with faces renumbered.
struct MaskedBoundary {
  FilteredBoundary boundary;
  std::vector<std::uint32_t> cells;
};

MaskedBoundary masked_boundary(const CellComplex& complex, const std::vector<std::uint8_t>& mask) {
  MaskedBoundary out;
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (std::size_t c = 0; c < complex.cell_count(); ++c) {
      if (mask[c] && complex.cell_dim(c) == d) out.cells.push_back(static_cast<std::uint32_t>(c));
    }
  }
  std::vector<std::uint32_t> position(complex.cell_count(), 0);
  for (std::size_t k = 0; k < out.cells.size(); ++k) position[out.cells[k]] = static_cast<std::uint32_t>(k);
  std::vector<std::uint32_t> faces;
  for (auto c : out.cells) {
    faces.clear();
    complex.for_each_face(c, [&](std::size_t f, int) { faces.push_back(position[f]); });
    std::sort(faces.begin(), faces.end());
    // Periodic grids with three vertices never repeat a face, but keep the
    // column an F2 set regardless.
    std::vector<std::uint32_t> reduced;
    for (std::size_t k = 0; k < faces.size();) {
      std::size_t m = k;
      while (m < faces.size() && faces[m] == faces[k]) ++m;
      if ((m - k) % 2 == 1) reduced.push_back(faces[k]);
      k = m;
    }
    out.boundary.push_back(static_cast<std::uint8_t>(complex.cell_dim(c)), reduced);
  }
  return out;
}

std::vector<int> betti_f2(const CellComplex& complex) {
  const auto mb = masked_boundary(complex, std::vector<std::uint8_t>(complex.cell_count(), 1));
  const auto red = reduce_filtered(mb.boundary, std::vector<std::uint64_t>(mb.cells.size(), 0));
  std::vector<int> betti(complex.dimension() + 1, 0);
  for (auto j : red.essential) ++betti[mb.boundary.dims[j]];
  return betti;
}

std::vector<int> betti_q(const CellComplex& complex) {
  const int n = complex.dimension();
  std::vector<std::vector<std::uint32_t>> cells(n + 1);
  std::vector<std::uint32_t> local(complex.cell_count());
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    const int d = complex.cell_dim(c);
    local[c] = static_cast<std::uint32_t>(cells[d].size());
    cells[d].push_back(static_cast<std::uint32_t>(c));
  }
  // rank of the boundary map C_d -> C_{d-1}
  std::vector<std::size_t> ranks(n + 2, 0);
  for (int d = 1; d <= n; ++d) {
    SparseColumnMatrix<Rational> m(cells[d - 1].size(), cells[d].size());
    for (std::size_t j = 0; j < cells[d].size(); ++j) {
      std::vector<std::pair<std::uint32_t, int>> entries;
      complex.for_each_face(cells[d][j], [&](std::size_t f, int s) { entries.emplace_back(local[f], s); });
      std::sort(entries.begin(), entries.end());
      SparseColumnMatrix<Rational>::Column col;
      for (std::size_t k = 0; k < entries.size();) {
        int sum = 0;
        std::size_t m2 = k;
        while (m2 < entries.size() && entries[m2].first == entries[k].first) sum += entries[m2++].second;
        if (sum != 0) col.push_back({entries[k].first, Rational(sum)});
        k = m2;
      }
      m.set_column(j, std::move(col));
    }
    ranks[d] = rank(m);
  }
  std::vector<int> betti(n + 1);
  for (int d = 0; d <= n; ++d) {
    betti[d] = static_cast<int>(cells[d].size() - ranks[d] - ranks[d + 1]);
  }
  return betti;
}

}  // namespace

Homology homology(const CellComplex& complex) {
  return {complex.basis().betti(), &complex.basis()};
}

std::vector<int> betti_numbers(const CellComplex& complex, Field field) {
  return field == Field::f2 ? betti_f2(complex) : betti_q(complex);
}

InducedMap induced_map(const Subcomplex& u, int degree) {
  if (degree < 0) throw InputError("induced_map: negative degree");
  const auto& complex = u.parent();
  const auto& basis = complex.basis();
  InducedMap out;
  out.degree = degree;
  const int target = basis.betti(degree);
  if (target > 64) throw CapabilityError("induced_map: Betti number above 64");

  const auto mb = masked_boundary(complex, u.mask());
  std::vector<std::uint64_t> tags(mb.cells.size(), 0);
  if (target > 0) {
    for (int k = 0; k < target; ++k) {
      for (auto c : basis.cocycles[degree][k]) {
        if (!u.contains(c)) continue;
        const auto pos = std::lower_bound(mb.cells.begin(), mb.cells.end(), c,
                                          [&](std::uint32_t a, std::uint32_t b) {
                                            const int da = complex.cell_dim(a);
                                            const int db = complex.cell_dim(b);
                                            return da != db ? da < db : a < b;
                                          });
        tags[pos - mb.cells.begin()] |= std::uint64_t{1} << k;
      }
    }
  }
  const auto red = reduce_filtered(mb.boundary, tags);

  std::vector<std::uint64_t> columns;
  for (std::size_t e = 0; e < red.essential.size(); ++e) {
    if (mb.boundary.dims[red.essential[e]] == degree) columns.push_back(red.essential_tags[e]);
  }
  out.source_dimension = static_cast<int>(columns.size());

  // Reduced column-echelon form with pivots on the lowest-index rows.
  int rank = 0;
  for (int row = 0; row < target; ++row) {
    const std::uint64_t bit = std::uint64_t{1} << row;
    std::size_t pivot = columns.size();
    for (std::size_t j = rank; j < columns.size(); ++j) {
      if (columns[j] & bit) {
        pivot = j;
        break;
      }
    }
    if (pivot == columns.size()) continue;
    std::swap(columns[rank], columns[pivot]);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j != static_cast<std::size_t>(rank) && (columns[j] & bit)) columns[j] ^= columns[rank];
    }
    ++rank;
  }
  out.rank = rank;
  out.matrix.assign(target, std::vector<std::uint8_t>(columns.size(), 0));
  for (int row = 0; row < target; ++row) {
    for (std::size_t j = 0; j < columns.size(); ++j) out.matrix[row][j] = (columns[j] >> row) & 1u;
  }
  return out;
}

}  // namespace legspec
