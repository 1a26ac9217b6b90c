#pragma once

#include <initializer_list>
#include <random>
#include <string>

#include "klein/lie_algebra.hpp"
#include "klein/scalar.hpp"
#include "klein/subspace.hpp"

namespace klein::test {

inline Scalar frac(long p, long q) {
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Span of integer rows in Q^n.
inline Subspace rows(std::size_t n, std::initializer_list<std::initializer_list<long>> rs) {
  Rows gens;
  for (const auto& r : rs) gens.push_back(vec(r));
  return Subspace::span(gens, n);
}

/// Span of the zero-based unit vectors e_i.
inline Subspace units(std::size_t n, std::initializer_list<std::size_t> idx) {
  Rows gens;
  for (auto i : idx) gens.push_back(unit_vector(n, i));
  return Subspace::span(gens, n);
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

inline Subspace random_subspace(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(0, max_gens);
  Rows gens;
  const auto k = count(rng);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n));
  return Subspace::span(gens, n);
}

inline std::string data_path(const std::string& name) { return std::string(KLEIN_TEST_DATA_DIR) + "/" + name; }

}  // namespace klein::test
