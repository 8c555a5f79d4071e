#pragma once

#include <cstdint>
#include <vector>

#include "legspec/cell_complex.hpp"
#include "legspec/field.hpp"

namespace legspec {

/// Betti numbers and the canonical F2 basis of a complex.
struct Homology {
  std::vector<int> betti;
  const CanonicalBasis* basis = nullptr;  // owned by the complex
};

[[nodiscard]] Homology homology(const CellComplex& complex);

/// Betti numbers over F2 or Q, from ranks of the signed boundary matrices.
[[nodiscard]] std::vector<int> betti_numbers(const CellComplex& complex, Field field = Field::f2);

/// Matrix of H_j(U) -> H_j(M). Columns are a basis of H_j(U) chosen so the
/// matrix is in reduced column-echelon form (the identity when U = M); rows
/// are the canonical basis of H_j(M).
struct InducedMap {
  int degree = 0;
  int source_dimension = 0;  // dim H_j(U)
  std::vector<std::vector<std::uint8_t>> matrix;  // rows x source_dimension
  int rank = 0;
};

/// Throws InputError if the degree is negative.
[[nodiscard]] InducedMap induced_map(const Subcomplex& u, int degree);

}  // namespace legspec
