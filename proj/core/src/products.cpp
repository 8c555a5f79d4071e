#include "legspec/products.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "legspec/errors.hpp"

namespace legspec {
namespace {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

// Inverse over F2 of a square matrix; empty optional-like result when singular.
bool invert(BitMatrix m, BitMatrix& inverse) {
  const std::size_t n = m.size();
  inverse.assign(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inverse[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !m[pivot][col]) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(inverse[pivot], inverse[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || !m[r][col]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] ^= m[col][k];
        inverse[r][k] ^= inverse[col][k];
      }
    }
  }
  return true;
}

bool contains(const Cochain& u, std::size_t cell) {
  return std::binary_search(u.begin(), u.end(), static_cast<std::uint32_t>(cell));
}

std::vector<std::vector<int>> torus_subsets(int axes) {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << axes); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < axes; ++b) {
      if (mask & (1u << b)) s.push_back(b);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return subsets;
}

}  // namespace

Cochain cup(const SimplicialComplex& complex, const Cochain& u, int p, const Cochain& v, int q) {
  Cochain out;
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    if (complex.cell_dim(c) != p + q) continue;
    const auto& s = complex.vertices(c);
    const std::vector<int> front(s.begin(), s.begin() + p + 1);
    const std::vector<int> back(s.begin() + p, s.end());
    if (contains(u, *complex.find(front)) && contains(v, *complex.find(back))) {
      out.push_back(static_cast<std::uint32_t>(c));
    }
  }
  return out;
}

Chain cap(const SimplicialComplex& complex, const Chain& sigma, const Cochain& u, int p) {
  Chain out;
  for (auto c : sigma) {
    const auto& s = complex.vertices(c);
    if (static_cast<int>(s.size()) < p + 1) continue;
    const std::vector<int> front(s.begin(), s.begin() + p + 1);
    if (!contains(u, *complex.find(front))) continue;
    const std::vector<int> back(s.begin() + p, s.end());
    out = add(out, Chain{static_cast<std::uint32_t>(*complex.find(back))});
  }
  return out;
}

IntersectionTable::IntersectionTable(const CellComplex& complex) {
  if (complex.simplicial() != nullptr) {
    *this = from_cup_products(complex);
    return;
  }
  if (!complex.is_cubical_torus()) {
    throw CapabilityError("intersection product: no product data for a cubical grid with boundary");
  }
  dimension_ = complex.dimension();
  betti_ = complex.basis().betti();
  zero_ = HomologyClass::zero(betti_);
  const auto subsets = torus_subsets(dimension_);
  std::vector<std::pair<int, int>> index_of(subsets.size());
  std::vector<int> seen(dimension_ + 1, 0);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const int d = static_cast<int>(subsets[s].size());
    index_of[s] = {d, seen[d]++};
  }
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (std::size_t t = 0; t < subsets.size(); ++t) {
      std::vector<int> uni;
      std::vector<int> inter;
      std::set_union(subsets[s].begin(), subsets[s].end(), subsets[t].begin(), subsets[t].end(),
                     std::back_inserter(uni));
      if (static_cast<int>(uni.size()) != dimension_) continue;
      std::set_intersection(subsets[s].begin(), subsets[s].end(), subsets[t].begin(), subsets[t].end(),
                            std::back_inserter(inter));
      const auto k = static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), inter) - subsets.begin());
      entries_[{index_of[s], index_of[t]}] =
          HomologyClass::basis_element(betti_, index_of[k].first, index_of[k].second);
    }
  }
}

IntersectionTable IntersectionTable::from_cup_products(const CellComplex& complex) {
  const auto* sc = complex.simplicial();
  if (sc == nullptr) throw CapabilityError("cup products: a simplicial model is required");
  const int n = complex.dimension();
  const auto& basis = complex.basis();
  if (basis.betti(n) != 1) throw CapabilityError("cup products: top homology is not one-dimensional");
  Chain fundamental;
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    if (complex.cell_dim(c) == n) fundamental.push_back(static_cast<std::uint32_t>(c));
  }
  if (!complex.is_cycle(fundamental)) throw CapabilityError("cup products: the complex is not a closed manifold");

  IntersectionTable table;
  table.dimension_ = n;
  table.betti_ = basis.betti();
  table.zero_ = HomologyClass::zero(table.betti_);

  // duality[q]: H^q -> H_{n-q}, column i is [M] ∩ phi^q_i.
  std::vector<BitMatrix> inverse_duality(n + 1);
  for (int q = 0; q <= n; ++q) {
    const int b = basis.betti(q);
    if (b != basis.betti(n - q)) throw CapabilityError("cup products: Betti numbers violate Poincare duality");
    BitMatrix duality(b, std::vector<std::uint8_t>(b, 0));
    for (int i = 0; i < b; ++i) {
      const auto coords = coordinates(complex, cap(*sc, fundamental, basis.cocycles[q][i], q), n - q);
      for (int r = 0; r < b; ++r) duality[r][i] = coords[r];
    }
    if (!invert(duality, inverse_duality[q])) {
      throw CapabilityError("cup products: cap with the fundamental class is not invertible");
    }
  }
  // Cocycle Poincare dual to b_p:i, of degree n - p.
  auto dual_cocycle = [&](int p, int i) {
    const int q = n - p;
    Cochain u;
    for (int k = 0; k < basis.betti(q); ++k) {
      if (inverse_duality[q][k][i]) u = add(u, basis.cocycles[q][k]);
    }
    return u;
  };
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const int deg = p + q - n;
      if (deg < 0) continue;
      for (int i = 0; i < basis.betti(p); ++i) {
        const auto u = dual_cocycle(p, i);
        for (int j = 0; j < basis.betti(q); ++j) {
          const auto v = dual_cocycle(q, j);
          const auto w = cup(*sc, u, n - p, v, n - q);
          const auto coords = coordinates(complex, cap(*sc, fundamental, w, n - deg), deg);
          auto cls = table.zero_;
          for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k]) cls = cls + HomologyClass::basis_element(table.betti_, deg, static_cast<int>(k));
          }
          if (!cls.is_zero()) table.entries_[{{p, i}, {q, j}}] = cls;
        }
      }
    }
  }
  return table;
}

const HomologyClass& IntersectionTable::entry(int p, int i, int q, int j) const {
  const auto it = entries_.find({{p, i}, {q, j}});
  return it == entries_.end() ? zero_ : it->second;
}

HomologyClass IntersectionTable::product(const HomologyClass& a, const HomologyClass& b) const {
  if (a.betti() != betti_ || b.betti() != betti_) {
    throw InputError("intersection product: class does not belong to this complex");
  }
  auto out = zero_;
  for (int p = 0; p <= a.max_degree(); ++p) {
    const auto& ca = a.in_degree(p);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (!ca[i]) continue;
      for (int q = 0; q <= b.max_degree(); ++q) {
        const auto& cb = b.in_degree(q);
        for (std::size_t j = 0; j < cb.size(); ++j) {
          if (cb[j]) out = out + entry(p, static_cast<int>(i), q, static_cast<int>(j));
        }
      }
    }
  }
  return out;
}

HomologyClass intersection_product(const CellComplex& complex, const HomologyClass& a, const HomologyClass& b) {
  return IntersectionTable(complex).product(a, b);
}

int cup_length(const IntersectionTable& table) {
  const auto& betti = table.betti();
  std::vector<HomologyClass> generators;
  for (int d = 0; d < table.dimension(); ++d) {
    for (auto& c : HomologyClass::all_nonzero_in_degree(betti, d)) generators.push_back(std::move(c));
  }
  int k = 0;
  std::set<HomologyClass> level(generators.begin(), generators.end());
  while (!level.empty()) {
    ++k;
    std::set<HomologyClass> next;
    for (const auto& x : level) {
      // Degree-0 products cannot be extended by classes of positive codegree.
      if (x.degree() == 0) continue;
      for (const auto& a : generators) {
        auto y = table.product(x, a);
        if (!y.is_zero()) next.insert(std::move(y));
      }
    }
    level = std::move(next);
  }
  return k + 1;
}

int cup_length(const CellComplex& complex) {
  return cup_length(IntersectionTable(complex));
}

Chain cross_cycle(const CubicalGrid& a_grid, const Chain& a, const CubicalGrid& b_grid, const Chain& b) {
  (void)a_grid;
  Chain out;
  out.reserve(a.size() * b.size());
  const auto nb = b_grid.cell_count();
  for (auto x : a) {
    for (auto y : b) out.push_back(static_cast<std::uint32_t>(static_cast<std::size_t>(x) * nb + y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain cross_cycle(const CellComplex& a_complex, const Chain& a, const CellComplex& b_complex, const Chain& b) {
  if (a_complex.cubical() == nullptr || b_complex.cubical() == nullptr) {
    throw CapabilityError("cross_cycle: both complexes must be cubical");
  }
  return cross_cycle(*a_complex.cubical(), a, *b_complex.cubical(), b);
}

}  // namespace legspec
