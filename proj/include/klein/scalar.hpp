#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace klein {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, q > 0)
/// after every arithmetic operation.
using Scalar = mpq_class;

/// Coordinates of an element of an n-dimensional space.
using Vector = std::vector<Scalar>;

/// Row-major matrix as a list of rows.
using Rows = std::vector<Vector>;

/// Parses "p", "-p" or "p/q" (q != 0). Throws MalformedInput.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& a, const Vector& x);

}  // namespace klein
