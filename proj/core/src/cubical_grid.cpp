#include "legspec/cubical_grid.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "legspec/errors.hpp"

namespace legspec {

CubicalGrid::CubicalGrid(std::vector<int> resolution, std::vector<bool> periodic)
    : resolution_(std::move(resolution)), periodic_(std::move(periodic)) {
  if (resolution_.size() != periodic_.size()) {
    throw InputError("cubical grid: resolution and periodicity lengths differ");
  }
  if (resolution_.size() > static_cast<std::size_t>(kMaxAxes)) {
    throw CapabilityError("cubical grid: at most " + std::to_string(kMaxAxes) + " axes supported");
  }
  const int n = axes();
  extent_.resize(n);
  stride_.resize(n);
  vstride_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (resolution_[i] < 3) {
      throw InputError("resolution[" + std::to_string(i) + "]: each axis needs at least 3 vertices, got " +
                       std::to_string(resolution_[i]));
    }
    extent_[i] = periodic_[i] ? 2 * resolution_[i] : 2 * resolution_[i] - 1;
  }
  std::size_t cells = 1;
  std::size_t verts = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride_[i] = cells;
    vstride_[i] = verts;
    if (cells > std::numeric_limits<std::uint32_t>::max() / static_cast<std::size_t>(extent_[i])) {
      throw CapabilityError("cubical grid: more than 2^32 cells");
    }
    cells *= static_cast<std::size_t>(extent_[i]);
    verts *= static_cast<std::size_t>(resolution_[i]);
  }
  cell_count_ = cells;
  vertex_count_ = verts;
}

CubicalGrid CubicalGrid::torus(std::vector<int> resolution) {
  std::vector<bool> periodic(resolution.size(), true);
  return CubicalGrid(std::move(resolution), std::move(periodic));
}

CubicalGrid CubicalGrid::box(int axes, int resolution) {
  return CubicalGrid(std::vector<int>(axes, resolution), std::vector<bool>(axes, false));
}

CubicalGrid CubicalGrid::product(const CubicalGrid& a, const CubicalGrid& b) {
  auto res = a.resolution_;
  res.insert(res.end(), b.resolution_.begin(), b.resolution_.end());
  auto per = a.periodic_;
  per.insert(per.end(), b.periodic_.begin(), b.periodic_.end());
  return CubicalGrid(std::move(res), std::move(per));
}

bool CubicalGrid::is_torus() const {
  return std::all_of(periodic_.begin(), periodic_.end(), [](bool p) { return p; });
}

int CubicalGrid::cell_dim(std::size_t cell) const {
  int d = 0;
  for (int i = 0; i < axes(); ++i) {
    d += static_cast<int>((cell / stride_[i]) % static_cast<std::size_t>(extent_[i])) & 1;
  }
  return d;
}

void CubicalGrid::coordinates(std::size_t cell, std::span<int> y) const {
  for (int i = 0; i < axes(); ++i) {
    y[i] = static_cast<int>((cell / stride_[i]) % static_cast<std::size_t>(extent_[i]));
  }
}

std::size_t CubicalGrid::cell_at(std::span<const int> y) const {
  std::size_t c = 0;
  for (int i = 0; i < axes(); ++i) c += static_cast<std::size_t>(y[i]) * stride_[i];
  return c;
}

std::size_t CubicalGrid::vertex_cell(std::size_t vertex) const {
  std::size_t c = 0;
  for (int i = 0; i < axes(); ++i) {
    const auto x = (vertex / vstride_[i]) % static_cast<std::size_t>(resolution_[i]);
    c += 2 * x * stride_[i];
  }
  return c;
}

std::size_t CubicalGrid::vertex_index(std::span<const int> position) const {
  std::size_t v = 0;
  for (int i = 0; i < axes(); ++i) v += static_cast<std::size_t>(position[i]) * vstride_[i];
  return v;
}

void CubicalGrid::vertex_position(std::size_t vertex, std::span<int> position) const {
  for (int i = 0; i < axes(); ++i) {
    position[i] = static_cast<int>((vertex / vstride_[i]) % static_cast<std::size_t>(resolution_[i]));
  }
}

std::size_t CubicalGrid::cell_vertex(std::size_t cell) const {
  std::size_t v = 0;
  for (int i = 0; i < axes(); ++i) {
    const auto y = (cell / stride_[i]) % static_cast<std::size_t>(extent_[i]);
    v += (y / 2) * vstride_[i];
  }
  return v;
}

}  // namespace legspec
