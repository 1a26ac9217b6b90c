#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "klein/scalar.hpp"

namespace klein {

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial over Q in a fixed number of variables. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Scalar& c);
  static Polynomial monomial(const Scalar& c, Exponents exps);
  /// x_var
  static Polynomial variable(std::size_t num_vars, std::size_t var);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  /// Adds c * x^exps. Throws MalformedInput on a wrong exponent count.
  void add_term(const Scalar& c, const Exponents& exps);

  Polynomial derivative(std::size_t var) const;
  Scalar evaluate(const Vector& point) const;
  /// Coefficients of p(point + y) as a polynomial in y.
  Polynomial shifted(const Vector& point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t num_vars_;
  std::map<Exponents, Scalar> terms_;
};

/// All multi-indices in n variables with |alpha| <= k, ordered by total
/// degree and then lexicographically descending (x_1 first).
std::vector<Exponents> multi_indices(std::size_t n, std::size_t k);

}  // namespace klein
