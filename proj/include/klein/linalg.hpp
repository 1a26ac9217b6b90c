#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "klein/scalar.hpp"

namespace klein {

/// Brings `rows` (each of length `ncols`) to reduced row-echelon form with
/// unit pivots, dropping zero rows. Returns the pivot columns, increasing.
std::vector<std::size_t> reduce_rows(Rows& rows, std::size_t ncols);

std::size_t rank(Rows rows, std::size_t ncols);

/// Basis of {x in Q^ncols : M x = 0}, one vector per free column, in
/// increasing free-column order.
Rows kernel(Rows matrix, std::size_t ncols);

/// Coefficients c with sum_i c_i * vectors[i] == target, if any. `vectors`
/// need not be independent; when they are, the solution is unique.
std::optional<Vector> solve_combination(const Rows& vectors, const Vector& target);

}  // namespace klein
