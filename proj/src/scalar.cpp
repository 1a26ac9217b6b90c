#include "klein/scalar.hpp"

#include <cctype>

#include "klein/errors.hpp"

namespace klein {

namespace {

bool is_integer_text(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text, true)) {
    throw MalformedInput("not a rational: \"" + std::string(text) + "\"");
  }
  std::string num(num_text);
  if (num.front() == '+') num.erase(0, 1);
  if (slash == std::string_view::npos) {
    return Scalar(mpz_class(num, 10));
  }
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_text(den_text, false)) {
    throw MalformedInput("not a rational: \"" + std::string(text) + "\"");
  }
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw MalformedInput("zero denominator: \"" + std::string(text) + "\"");
  }
  Scalar value(mpz_class(num, 10), den);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v[index] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vector operator+(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(1), y);
  return r;
}

Vector operator-(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(-1), y);
  return r;
}

Vector operator*(const Scalar& a, const Vector& x) {
  Vector r(x.size());
  if (sgn(a) == 0) return r;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

}  // namespace klein
