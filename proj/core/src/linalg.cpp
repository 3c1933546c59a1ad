#include "posetahedra/linalg.hpp"

#include <utility>

#include "posetahedra/errors.hpp"

namespace posetahedra::linalg {

Echelon rref(Matrix rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const Matrix& rows, std::size_t cols) { return rref(rows, cols).pivots.size(); }

std::size_t affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) return 0;
  const std::size_t cols = points.front().size();
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(cols);
    for (std::size_t k = 0; k < cols; ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return rank(diffs, cols) + 1;
}

Matrix nullspace(const Matrix& rows, std::size_t cols) {
  Echelon e = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_unique(const Matrix& rows, const RationalVector& rhs) {
  if (rows.size() != rhs.size()) throw PreconditionError("solve_unique: row count mismatch");
  if (rows.empty()) return std::nullopt;
  const std::size_t cols = rows.front().size();
  Matrix aug = rows;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  Echelon e = rref(std::move(aug), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  if (e.pivots.size() != cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

}  // namespace posetahedra::linalg
