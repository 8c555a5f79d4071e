#include "legspec/cell_complex.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "legspec/errors.hpp"
#include "legspec/sparse_matrix.hpp"

namespace legspec {

bool pairing(const Cochain& cochain, const Chain& chain) {
  std::size_t count = 0;
  auto a = cochain.begin();
  auto b = chain.begin();
  while (a != cochain.end() && b != chain.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return (count & 1) != 0;
}

Chain add(const Chain& a, const Chain& b) {
  Chain out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> CanonicalBasis::betti() const {
  std::vector<int> b;
  for (const auto& c : cycles) b.push_back(static_cast<int>(c.size()));
  return b;
}

int CanonicalBasis::betti(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(cycles.size())) return 0;
  return static_cast<int>(cycles[degree].size());
}

int CanonicalBasis::total() const {
  int t = 0;
  for (const auto& c : cycles) t += static_cast<int>(c.size());
  return t;
}

namespace {

SparseColumnMatrix<F2> full_boundary_f2(const CellComplex& complex) {
  SparseColumnMatrix<F2> m(complex.cell_count(), complex.cell_count());
  std::vector<std::uint32_t> faces;
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    faces.clear();
    complex.for_each_face(c, [&](std::size_t f, int) { faces.push_back(static_cast<std::uint32_t>(f)); });
    std::sort(faces.begin(), faces.end());
    SparseColumnMatrix<F2>::Column col;
    for (auto f : faces) col.push_back({f, F2(1)});
    m.set_column(c, std::move(col));
  }
  return m;
}

// Homology basis from a reduction of the full boundary matrix: the transform
// columns of zero reduced columns that are not pivots.
std::vector<std::vector<Chain>> reduction_cycles(const CellComplex& complex) {
  const auto red = reduce(full_boundary_f2(complex));
  std::vector<std::vector<Chain>> cycles(complex.dimension() + 1);
  for (std::size_t j = 0; j < complex.cell_count(); ++j) {
    if (!red.reduced.column(j).empty() || red.pivot_column_of_row[j] >= 0) continue;
    Chain chain;
    for (const auto& e : red.transform.column(j)) chain.push_back(e.row);
    cycles[complex.cell_dim(j)].push_back(std::move(chain));
  }
  return cycles;
}

// Cocycles dual to the given cycles, by solving delta(phi) = 0 together with
// <phi, h_i> = [i == j].
std::vector<std::vector<Cochain>> dual_cocycles(const CellComplex& complex,
                                               const std::vector<std::vector<Chain>>& cycles) {
  const int top = complex.dimension();
  std::vector<std::vector<std::uint32_t>> cells_of_dim(top + 2);
  std::vector<std::uint32_t> local(complex.cell_count());
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    const int d = complex.cell_dim(c);
    local[c] = static_cast<std::uint32_t>(cells_of_dim[d].size());
    cells_of_dim[d].push_back(static_cast<std::uint32_t>(c));
  }
  std::vector<std::vector<Cochain>> out(cycles.size());
  for (int d = 0; d < static_cast<int>(cycles.size()); ++d) {
    const auto& basis = cycles[d];
    if (basis.empty()) continue;
    const auto& cols = cells_of_dim[d];
    const auto& cofaces = cells_of_dim[d + 1];
    const std::size_t rows = cofaces.size() + basis.size();
    // Rows: coboundary equations, then pairings with the basis cycles.
    std::vector<std::vector<std::uint32_t>> col_rows(cols.size());
    for (std::size_t r = 0; r < cofaces.size(); ++r) {
      complex.for_each_face(cofaces[r], [&](std::size_t f, int) {
        col_rows[local[f]].push_back(static_cast<std::uint32_t>(r));
      });
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (auto c : basis[i]) {
        col_rows[local[c]].push_back(static_cast<std::uint32_t>(cofaces.size() + i));
      }
    }
    SparseColumnMatrix<F2> system(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto& rr = col_rows[j];
      std::sort(rr.begin(), rr.end());
      SparseColumnMatrix<F2>::Column col;
      for (std::size_t k = 0; k < rr.size();) {
        std::size_t m = k;
        while (m < rr.size() && rr[m] == rr[k]) ++m;
        if ((m - k) % 2 == 1) col.push_back({rr[k], F2(1)});
        k = m;
      }
      system.set_column(j, std::move(col));
    }
    const ImageOracle<F2> oracle(system);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<F2> rhs(rows, F2(0));
      rhs[cofaces.size() + i] = F2(1);
      const auto q = oracle.query(rhs);
      if (!q.member) {
        throw InputError("canonical_basis: degree " + std::to_string(d) +
                         " cycles are not independent in homology");
      }
      Cochain phi;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!q.coefficients[j].is_zero()) phi.push_back(cols[j]);
      }
      std::sort(phi.begin(), phi.end());
      out[d].push_back(std::move(phi));
    }
  }
  return out;
}

std::vector<std::vector<std::string>> default_labels(const std::vector<std::vector<Chain>>& cycles) {
  std::vector<std::vector<std::string>> labels(cycles.size());
  for (std::size_t d = 0; d < cycles.size(); ++d) {
    for (std::size_t i = 0; i < cycles[d].size(); ++i) {
      labels[d].push_back("b" + std::to_string(d) + ":" + std::to_string(i));
    }
  }
  return labels;
}

}  // namespace

CellComplex::CellComplex(SimplicialComplex complex, std::string name)
    : model_(std::move(complex)), name_(std::move(name)) {
  index_cells();
  verify_boundary_squares_to_zero();
  basis_.cycles = reduction_cycles(*this);
  basis_.cocycles = dual_cocycles(*this, basis_.cycles);
  basis_.labels = default_labels(basis_.cycles);
}

CellComplex::CellComplex(SimplicialComplex complex, std::vector<std::vector<Chain>> cycles,
                         std::vector<std::vector<std::string>> labels, std::string name)
    : model_(std::move(complex)), name_(std::move(name)) {
  index_cells();
  verify_boundary_squares_to_zero();
  cycles.resize(dimension_ + 1);
  for (auto& per_degree : cycles) {
    for (auto& c : per_degree) {
      std::sort(c.begin(), c.end());
      if (!is_cycle(c)) throw InputError("canonical_basis: supplied chain is not a cycle");
    }
  }
  const auto reference = reduction_cycles(*this);
  for (int d = 0; d <= dimension_; ++d) {
    if (reference[d].size() != cycles[d].size()) {
      throw InputError("canonical_basis: degree " + std::to_string(d) + " needs " +
                       std::to_string(reference[d].size()) + " cycles");
    }
  }
  basis_.cocycles = dual_cocycles(*this, cycles);
  basis_.cycles = std::move(cycles);
  basis_.labels = labels.empty() ? default_labels(basis_.cycles) : std::move(labels);
}

CellComplex::CellComplex(CubicalGrid grid, std::string name) : model_(std::move(grid)), name_(std::move(name)) {
  index_cells();
  verify_boundary_squares_to_zero();
  basis_ = cubical_canonical_basis(*cubical());
}

ComplexKind CellComplex::kind() const {
  return simplicial() != nullptr ? ComplexKind::simplicial : ComplexKind::cubical;
}

bool CellComplex::is_cubical_torus() const {
  return cubical() != nullptr && cubical()->is_torus();
}

std::size_t CellComplex::vertex_count() const {
  if (const auto* s = simplicial()) return static_cast<std::size_t>(s->vertex_count());
  return cubical()->vertex_count();
}

std::size_t CellComplex::vertex_cell(std::size_t vertex) const {
  if (simplicial() != nullptr) return vertex;
  return cubical()->vertex_cell(vertex);
}

std::size_t CellComplex::cell_vertex(std::size_t cell) const {
  if (const auto* s = simplicial()) return static_cast<std::size_t>(s->vertices(cell).front());
  return cubical()->cell_vertex(cell);
}

void CellComplex::index_cells() {
  std::visit(
      [&](const auto& m) {
        dims_.resize(m.cell_count());
        dimension_ = 0;
        for (std::size_t c = 0; c < m.cell_count(); ++c) {
          dims_[c] = static_cast<std::uint8_t>(m.cell_dim(c));
          dimension_ = std::max<int>(dimension_, dims_[c]);
        }
      },
      model_);
}

void CellComplex::verify_boundary_squares_to_zero() const {
  std::vector<std::pair<std::size_t, int>> acc;
  for (std::size_t c = 0; c < cell_count(); ++c) {
    if (dims_[c] < 2) continue;
    acc.clear();
    for_each_face(c, [&](std::size_t f, int s) {
      for_each_face(f, [&](std::size_t g, int t) { acc.emplace_back(g, s * t); });
    });
    std::sort(acc.begin(), acc.end());
    for (std::size_t k = 0; k < acc.size();) {
      int sum = 0;
      std::size_t m = k;
      while (m < acc.size() && acc[m].first == acc[k].first) sum += acc[m++].second;
      if (sum != 0) throw InputError("complex: boundary of boundary is nonzero at cell " + std::to_string(c));
      k = m;
    }
  }
}

Chain CellComplex::boundary(const Chain& chain) const {
  std::vector<std::uint32_t> faces;
  for (auto c : chain) {
    for_each_face(c, [&](std::size_t f, int) { faces.push_back(static_cast<std::uint32_t>(f)); });
  }
  std::sort(faces.begin(), faces.end());
  Chain out;
  for (std::size_t k = 0; k < faces.size();) {
    std::size_t m = k;
    while (m < faces.size() && faces[m] == faces[k]) ++m;
    if ((m - k) % 2 == 1) out.push_back(faces[k]);
    k = m;
  }
  return out;
}

CanonicalBasis cubical_canonical_basis(const CubicalGrid& grid) {
  const int n = grid.axes();
  std::vector<int> periodic_axes;
  for (int i = 0; i < n; ++i) {
    if (grid.periodic()[i]) periodic_axes.push_back(i);
  }
  const int p = static_cast<int>(periodic_axes.size());
  CanonicalBasis basis;
  basis.cycles.resize(n + 1);
  basis.cocycles.resize(n + 1);
  basis.labels.resize(n + 1);

  // Subsets of periodic axes, by size then lexicographically.
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < p; ++b) {
      if (mask & (1u << b)) s.push_back(periodic_axes[b]);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<int> y(n);
  for (const auto& subset : subsets) {
    std::vector<bool> in(n, false);
    for (int i : subset) in[i] = true;
    Chain cycle;
    Cochain cocycle;
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
      grid.coordinates(c, y);
      bool in_cycle = true;
      bool in_cocycle = true;
      for (int i = 0; i < n; ++i) {
        const bool odd = (y[i] & 1) != 0;
        if (odd != in[i]) {
          in_cycle = in_cocycle = false;
          break;
        }
        if (in[i]) {
          in_cocycle = in_cocycle && y[i] == 1;
        } else {
          in_cycle = in_cycle && y[i] == 0;
        }
      }
      if (in_cycle) cycle.push_back(static_cast<std::uint32_t>(c));
      if (in_cocycle) cocycle.push_back(static_cast<std::uint32_t>(c));
    }
    const auto d = subset.size();
    std::string label;
    if (d == 0) {
      label = "pt";
    } else if (static_cast<int>(d) == n) {
      label = "fund";
    } else {
      label = "T{";
      for (std::size_t k = 0; k < subset.size(); ++k) label += (k ? "," : "") + std::to_string(subset[k]);
      label += "}";
    }
    basis.cycles[d].push_back(std::move(cycle));
    basis.cocycles[d].push_back(std::move(cocycle));
    basis.labels[d].push_back(std::move(label));
  }
  return basis;
}

// ---------------------------------------------------------------- classes

HomologyClass::HomologyClass(std::vector<std::vector<std::uint8_t>> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& d : coefficients_) {
    for (auto& c : d) c &= 1;
  }
}

HomologyClass HomologyClass::zero(const std::vector<int>& betti) {
  std::vector<std::vector<std::uint8_t>> c;
  for (int b : betti) c.emplace_back(static_cast<std::size_t>(b), 0);
  return HomologyClass(std::move(c));
}

HomologyClass HomologyClass::basis_element(const std::vector<int>& betti, int degree, int index) {
  if (degree < 0 || degree >= static_cast<int>(betti.size()) || index < 0 || index >= betti[degree]) {
    throw InputError("class: no basis element b" + std::to_string(degree) + ":" + std::to_string(index));
  }
  auto z = zero(betti);
  z.coefficients_[degree][index] = 1;
  return z;
}

HomologyClass HomologyClass::point(const std::vector<int>& betti) {
  if (betti.empty() || betti[0] != 1) throw CapabilityError("class pt: the complex must be connected");
  return basis_element(betti, 0, 0);
}

HomologyClass HomologyClass::fundamental(const std::vector<int>& betti) {
  if (betti.empty() || betti.back() != 1) {
    throw CapabilityError("class fund: top homology is not one-dimensional");
  }
  return basis_element(betti, static_cast<int>(betti.size()) - 1, 0);
}

HomologyClass HomologyClass::from_flat(const std::vector<int>& betti, const std::vector<std::uint8_t>& flat) {
  int total = 0;
  for (int b : betti) total += b;
  if (static_cast<int>(flat.size()) != total) {
    throw InputError("class: expected " + std::to_string(total) + " coefficients, got " +
                     std::to_string(flat.size()));
  }
  auto z = zero(betti);
  std::size_t k = 0;
  for (auto& d : z.coefficients_) {
    for (auto& c : d) c = flat[k++] & 1;
  }
  return z;
}

std::vector<HomologyClass> HomologyClass::all_nonzero(const std::vector<int>& betti) {
  int total = 0;
  for (int b : betti) total += b;
  if (total > 24) throw CapabilityError("class enumeration: total Betti number above 24");
  std::vector<HomologyClass> out;
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<std::uint8_t> flat(total);
    for (int k = 0; k < total; ++k) flat[k] = (mask >> k) & 1u;
    out.push_back(from_flat(betti, flat));
  }
  return out;
}

std::vector<HomologyClass> HomologyClass::all_nonzero_in_degree(const std::vector<int>& betti, int degree) {
  std::vector<HomologyClass> out;
  if (degree < 0 || degree >= static_cast<int>(betti.size())) return out;
  const int b = betti[degree];
  if (b > 24) throw CapabilityError("class enumeration: Betti number above 24");
  for (std::uint32_t mask = 1; mask < (1u << b); ++mask) {
    auto z = zero(betti);
    for (int k = 0; k < b; ++k) z.coefficients_[degree][k] = (mask >> k) & 1u;
    out.push_back(std::move(z));
  }
  return out;
}

std::uint64_t HomologyClass::bits(int degree) const {
  if (degree < 0 || degree > max_degree()) return 0;
  std::uint64_t b = 0;
  const auto& c = coefficients_[degree];
  for (std::size_t k = 0; k < c.size() && k < 64; ++k) b |= static_cast<std::uint64_t>(c[k]) << k;
  return b;
}

bool HomologyClass::is_zero() const {
  for (int d = 0; d <= max_degree(); ++d) {
    if (!is_zero_in_degree(d)) return false;
  }
  return true;
}

bool HomologyClass::is_zero_in_degree(int degree) const {
  const auto& c = coefficients_.at(degree);
  return std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; });
}

std::optional<int> HomologyClass::degree() const {
  std::optional<int> deg;
  for (int d = 0; d <= max_degree(); ++d) {
    if (is_zero_in_degree(d)) continue;
    if (deg) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::vector<std::uint8_t> HomologyClass::flat() const {
  std::vector<std::uint8_t> out;
  for (const auto& d : coefficients_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::vector<int> HomologyClass::betti() const {
  std::vector<int> b;
  for (const auto& d : coefficients_) b.push_back(static_cast<int>(d.size()));
  return b;
}

std::string HomologyClass::to_string() const {
  std::string s;
  for (int d = 0; d <= max_degree(); ++d) {
    for (std::size_t k = 0; k < coefficients_[d].size(); ++k) {
      if (!coefficients_[d][k]) continue;
      if (!s.empty()) s += "+";
      s += "b" + std::to_string(d) + ":" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
  if (a.betti() != b.betti()) throw InputError("class sum: classes live in different homologies");
  auto out = a;
  for (std::size_t d = 0; d < out.coefficients_.size(); ++d) {
    for (std::size_t k = 0; k < out.coefficients_[d].size(); ++k) out.coefficients_[d][k] ^= b.coefficients_[d][k];
  }
  return out;
}

std::vector<std::uint8_t> coordinates(const CellComplex& complex, const Chain& cycle, int degree) {
  std::vector<std::uint8_t> out;
  const auto& basis = complex.basis();
  if (degree < 0 || degree >= static_cast<int>(basis.cocycles.size())) return out;
  for (const auto& phi : basis.cocycles[degree]) out.push_back(pairing(phi, cycle) ? 1 : 0);
  return out;
}

Chain representative(const CellComplex& complex, const HomologyClass& cls, int degree) {
  Chain out;
  const auto& basis = complex.basis();
  if (degree < 0 || degree > cls.max_degree()) return out;
  const auto& c = cls.in_degree(degree);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k]) out = add(out, basis.cycles[degree][k]);
  }
  return out;
}

// ---------------------------------------------------------------- subcomplexes

Subcomplex::Subcomplex(const CellComplex& parent, std::vector<std::uint8_t> mask)
    : parent_(&parent), mask_(std::move(mask)) {
  if (mask_.size() != parent.cell_count()) throw InputError("subcomplex: mask length does not match complex");
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (!mask_[c]) continue;
    bool closed = true;
    parent.for_each_face(c, [&](std::size_t f, int) { closed = closed && mask_[f] != 0; });
    if (!closed) throw InputError("subcomplex: not closed under faces at cell " + std::to_string(c));
  }
}

Subcomplex Subcomplex::empty(const CellComplex& parent) {
  return Subcomplex(parent, std::vector<std::uint8_t>(parent.cell_count(), 0));
}

Subcomplex Subcomplex::full(const CellComplex& parent) {
  return Subcomplex(parent, std::vector<std::uint8_t>(parent.cell_count(), 1));
}

Subcomplex Subcomplex::closure(const CellComplex& parent, const std::vector<std::uint32_t>& cells) {
  std::vector<std::uint8_t> mask(parent.cell_count(), 0);
  std::vector<std::size_t> stack(cells.begin(), cells.end());
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    if (c >= mask.size()) throw InputError("subcomplex: cell index out of range");
    if (mask[c]) continue;
    mask[c] = 1;
    parent.for_each_face(c, [&](std::size_t f, int) { stack.push_back(f); });
  }
  return Subcomplex(parent, std::move(mask));
}

std::size_t Subcomplex::size() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

Subcomplex Subcomplex::star_neighborhood(int steps) const {
  auto mask = mask_;
  const auto& c = *parent_;
  for (int s = 0; s < steps; ++s) {
    std::vector<std::uint8_t> vertex_in(c.cell_count(), 0);
    for (std::size_t cell = 0; cell < mask.size(); ++cell) {
      if (mask[cell] && c.cell_dim(cell) == 0) vertex_in[cell] = 1;
    }
    std::vector<std::uint32_t> cells;
    for (std::size_t cell = 0; cell < c.cell_count(); ++cell) {
      bool touches = false;
      c.for_each_vertex(cell, [&](std::size_t v) { touches = touches || vertex_in[v] != 0; });
      if (touches) cells.push_back(static_cast<std::uint32_t>(cell));
    }
    mask = Subcomplex::closure(c, cells).mask_;
  }
  return Subcomplex(c, std::move(mask));
}

}  // namespace legspec
