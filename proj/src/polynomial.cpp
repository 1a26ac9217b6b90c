#include "klein/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "klein/errors.hpp"

namespace klein {

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar& c) {
  Polynomial p(num_vars);
  p.add_term(c, Exponents(num_vars, 0));
  return p;
}

Polynomial Polynomial::monomial(const Scalar& c, Exponents exps) {
  Polynomial p(exps.size());
  p.add_term(c, exps);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  Exponents e(num_vars, 0);
  e.at(var) = 1;
  return monomial(Scalar(1), std::move(e));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void Polynomial::add_term(const Scalar& c, const Exponents& exps) {
  if (exps.size() != num_vars_) {
    throw MalformedInput("monomial has " + std::to_string(exps.size()) + " exponents, expected " +
                         std::to_string(num_vars_));
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial d(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents de = e;
    de[var] -= 1;
    d.add_term(c * e[var], de);
  }
  return d;
}

Scalar Polynomial::evaluate(const Vector& point) const {
  if (point.size() != num_vars_) throw MalformedInput("evaluation point has wrong dimension");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (unsigned p = 0; p < e[i]; ++p) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::shifted(const Vector& point) const {
  if (point.size() != num_vars_) throw MalformedInput("shift point has wrong dimension");
  // (a_i + y_i)^b expanded with binomial coefficients, cached per (i, b).
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto binomial_power = [&](std::size_t i, unsigned b) -> const Polynomial& {
    auto [it, inserted] = powers.try_emplace({i, b}, num_vars_);
    if (inserted) {
      mpz_class binom = 1;
      for (unsigned g = 0; g <= b; ++g) {
        Scalar coef = Scalar(binom);
        for (unsigned p = g; p < b; ++p) coef *= point[i];
        Exponents e(num_vars_, 0);
        e[i] = g;
        it->second.add_term(coef, e);
        binom = binom * (b - g) / (g + 1);
      }
    }
    return it->second;
  };
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(num_vars_, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] > 0) term = term * binomial_power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw MalformedInput("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw MalformedInput("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw MalformedInput("polynomial variable count mismatch");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.num_vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(ca * cb, e);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Polynomial out(p.num_vars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, c * v);
  return out;
}

std::vector<Exponents> multi_indices(std::size_t n, std::size_t k) {
  std::vector<Exponents> out;
  Exponents current(n, 0);
  // Fill positions left to right, larger exponents first, for each degree.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t remaining) {
    if (pos + 1 == n) {
      current[pos] = static_cast<unsigned>(remaining);
      out.push_back(current);
      return;
    }
    for (std::size_t v = remaining + 1; v-- > 0;) {
      current[pos] = static_cast<unsigned>(v);
      fill(pos + 1, remaining - v);
    }
  };
  for (std::size_t d = 0; d <= k; ++d) {
    if (n == 0) {
      if (d == 0) out.emplace_back();
      continue;
    }
    fill(0, d);
  }
  return out;
}

}  // namespace klein
