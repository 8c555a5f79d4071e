#include "legspec/builtins.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "legspec/errors.hpp"

namespace legspec {
namespace {

struct Mesh {
  std::vector<std::array<double, 3>> positions;
  std::vector<std::array<int, 3>> triangles;
};

Mesh subdivided_tetrahedron(int level) {
  if (level < 0 || level > 6) throw CapabilityError("S2: subdivision level must be in 0..6");
  Mesh mesh;
  mesh.positions = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  mesh.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int round = 0; round < level; ++round) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const auto& pa = mesh.positions[a];
      const auto& pb = mesh.positions[b];
      mesh.positions.push_back({(pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, (pa[2] + pb[2]) / 2});
      const int id = static_cast<int>(mesh.positions.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& t : mesh.triangles) {
      const int ab = mid(t[0], t[1]);
      const int bc = mid(t[1], t[2]);
      const int ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.triangles = std::move(next);
  }
  for (auto& p : mesh.positions) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (auto& x : p) x /= r;
  }
  return mesh;
}

}  // namespace

CellComplex point() {
  return CellComplex(SimplicialComplex::from_simplices(1, {}), {{{0}}}, {{"pt"}}, "point");
}

CellComplex circle(int resolution) {
  return CellComplex(CubicalGrid::torus({resolution}), "S1");
}

CellComplex torus(int dimension, int resolution) {
  if (dimension < 1 || dimension > 3) throw CapabilityError("torus: dimension must be 1, 2 or 3");
  return CellComplex(CubicalGrid::torus(std::vector<int>(dimension, resolution)), "T" + std::to_string(dimension));
}

CellComplex sphere(int level) {
  const auto mesh = subdivided_tetrahedron(level);
  std::vector<std::vector<int>> simplices;
  for (const auto& t : mesh.triangles) simplices.push_back({t[0], t[1], t[2]});
  auto sc = SimplicialComplex::from_simplices(static_cast<int>(mesh.positions.size()), simplices);
  Chain fundamental;
  for (std::size_t c = 0; c < sc.cell_count(); ++c) {
    if (sc.cell_dim(c) == 2) fundamental.push_back(static_cast<std::uint32_t>(c));
  }
  return CellComplex(std::move(sc), {{{0}}, {}, {fundamental}}, {{"pt"}, {}, {"fund"}}, "S2");
}

std::vector<std::array<double, 3>> sphere_positions(int level) {
  return subdivided_tetrahedron(level).positions;
}

CellComplex simplicial_torus(int dimension, int resolution) {
  if (dimension < 1 || dimension > 3) throw CapabilityError("simplicial torus: dimension must be 1, 2 or 3");
  if (resolution < 3) throw InputError("simplicial torus: resolution must be at least 3");
  const int n = resolution;
  int vertex_count = 1;
  for (int i = 0; i < dimension; ++i) vertex_count *= n;
  auto index = [&](const std::vector<int>& x) {
    int v = 0;
    for (int i = 0; i < dimension; ++i) v = v * n + ((x[i] % n) + n) % n;
    return v;
  };
  std::vector<int> perm(dimension);
  std::vector<std::vector<int>> simplices;
  for (int v = 0; v < vertex_count; ++v) {
    std::vector<int> base(dimension);
    for (int i = dimension - 1, r = v; i >= 0; --i, r /= n) base[i] = r % n;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto x = base;
      std::vector<int> simplex{index(x)};
      for (int axis : perm) {
        ++x[axis];
        simplex.push_back(index(x));
      }
      simplices.push_back(std::move(simplex));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return CellComplex(SimplicialComplex::from_simplices(vertex_count, simplices),
                     "simplicial T" + std::to_string(dimension));
}

CellComplex builtin(const std::string& id, int resolution) {
  if (id == "point") return point();
  if (id == "S1") return circle(resolution);
  if (id == "T2") return torus(2, resolution);
  if (id == "T3") return torus(3, resolution);
  if (id == "S2") return sphere(resolution);
  throw CapabilityError("model '" + id + "': supported models are point, S1, T2, T3, S2");
}

int default_resolution(const std::string& id) {
  if (id == "S2") return 1;
  if (id == "T3") return 6;
  return 8;
}

}  // namespace legspec
