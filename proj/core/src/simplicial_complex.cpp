#include "legspec/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "legspec/errors.hpp"

namespace legspec {

SimplicialComplex SimplicialComplex::from_simplices(int vertex_count,
                                                    const std::vector<std::vector<int>>& simplices) {
  if (vertex_count < 1) throw InputError("vertices: a simplicial complex needs at least one vertex");
  std::set<std::vector<int>> all;
  for (int v = 0; v < vertex_count; ++v) all.insert({v});
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    auto verts = simplices[s];
    if (verts.empty()) throw InputError("simplices[" + std::to_string(s) + "]: empty simplex");
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i] < 0 || verts[i] >= vertex_count) {
        throw InputError("simplices[" + std::to_string(s) + "]: vertex " + std::to_string(verts[i]) +
                         " out of range");
      }
      if (i > 0 && verts[i] == verts[i - 1]) {
        throw InputError("simplices[" + std::to_string(s) + "]: repeated vertex " + std::to_string(verts[i]));
      }
    }
    if (verts.size() > 16) throw CapabilityError("simplices: dimension above 15 not supported");
    // Every nonempty subset is a face.
    const unsigned n = static_cast<unsigned>(verts.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (unsigned b = 0; b < n; ++b) {
        if (mask & (1u << b)) face.push_back(verts[b]);
      }
      all.insert(std::move(face));
    }
  }

  SimplicialComplex sc;
  sc.vertex_count_ = vertex_count;
  sc.cells_.assign(all.begin(), all.end());
  std::stable_sort(sc.cells_.begin(), sc.cells_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (std::size_t c = 0; c < sc.cells_.size(); ++c) {
    sc.lookup_.emplace(sc.cells_[c], c);
    sc.dimension_ = std::max(sc.dimension_, static_cast<int>(sc.cells_[c].size()) - 1);
  }
  sc.faces_.resize(sc.cells_.size());
  sc.cofaces_.resize(sc.cells_.size());
  for (std::size_t c = 0; c < sc.cells_.size(); ++c) {
    const auto& s = sc.cells_[c];
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != i) face.push_back(s[k]);
      }
      const auto f = sc.lookup_.at(face);
      sc.faces_[c].push_back(f);
      sc.cofaces_[f].push_back(c);
    }
  }
  return sc;
}

std::optional<std::size_t> SimplicialComplex::find(const std::vector<int>& sorted_vertices) const {
  auto it = lookup_.find(sorted_vertices);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> SimplicialComplex::maximal_simplices() const {
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cofaces_[c].empty()) out.push_back(cells_[c]);
  }
  return out;
}

}  // namespace legspec
