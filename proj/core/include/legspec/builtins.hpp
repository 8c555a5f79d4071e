#pragma once

#include <array>
#include <string>
#include <vector>

#include "legspec/cell_complex.hpp"

namespace legspec {

/// Single vertex.
[[nodiscard]] CellComplex point();
/// Periodic cubical circle with `resolution` vertices.
[[nodiscard]] CellComplex circle(int resolution = 8);
/// Periodic cubical torus T^d, the same resolution on every axis.
[[nodiscard]] CellComplex torus(int dimension, int resolution = 8);
/// Boundary of a tetrahedron with `level` rounds of 4-to-1 subdivision. The
/// canonical basis is vertex 0 and the sum of all triangles.
[[nodiscard]] CellComplex sphere(int level = 0);
/// Vertex positions of `sphere(level)` projected onto the unit sphere.
[[nodiscard]] std::vector<std::array<double, 3>> sphere_positions(int level = 0);
/// Freudenthal triangulation of the n^d grid torus (d <= 3).
[[nodiscard]] CellComplex simplicial_torus(int dimension, int resolution);

/// Built-in model by id: point, S1, T2, T3, S2. For tori `resolution` is the
/// vertex count per axis; for S2 it is the subdivision level. Throws
/// CapabilityError for unknown ids.
[[nodiscard]] CellComplex builtin(const std::string& id, int resolution);
[[nodiscard]] int default_resolution(const std::string& id);

}  // namespace legspec
