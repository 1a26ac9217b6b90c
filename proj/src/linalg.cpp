#include "klein/linalg.hpp"

#include <utility>

namespace klein {

std::vector<std::size_t> reduce_rows(Rows& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && sgn(rows[found][col]) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const Scalar inv = 1 / rows[next][col];
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || sgn(rows[r][col]) == 0) continue;
      const Scalar factor = -rows[r][col];
      axpy(rows[r], factor, rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t rank(Rows rows, std::size_t ncols) { return reduce_rows(rows, ncols).size(); }

Rows kernel(Rows matrix, std::size_t ncols) {
  const auto pivots = reduce_rows(matrix, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Rows basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -matrix[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_combination(const Rows& vectors, const Vector& target) {
  // Augmented system: columns are the given vectors, last column the target.
  const std::size_t m = vectors.size();
  const std::size_t n = target.size();
  Rows system(n, Vector(m + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) system[r][c] = vectors[c][r];
    system[r][m] = target[r];
  }
  const auto pivots = reduce_rows(system, m + 1);
  if (!pivots.empty() && pivots.back() == m) return std::nullopt;
  Vector coeffs(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = system[r][m];
  return coeffs;
}

}  // namespace klein
