#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posetahedra/rational.hpp"

namespace posetahedra::linalg {

using Matrix = std::vector<RationalVector>;

struct Echelon {
  Matrix rows;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix rows, std::size_t cols);
std::size_t rank(const Matrix& rows, std::size_t cols);

/// Dimension of the affine hull plus one; 0 for no points.
std::size_t affine_rank(const std::vector<RationalVector>& points);

/// Basis of {x : rows * x = 0}; each vector is 1 on its own free column and
/// 0 on the other free columns.
Matrix nullspace(const Matrix& rows, std::size_t cols);

/// The unique solution of rows * x = rhs, or nullopt if there is none or
/// it is not unique.
std::optional<RationalVector> solve_unique(const Matrix& rows, const RationalVector& rhs);

}  // namespace posetahedra::linalg
