#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klein {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent dimensions, unparsable scalars, bad file contents.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Stabilizer is not closed under the bracket.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

/// A check's hypotheses do not hold for the given input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// normalizer_tower seed spans an ideal.
class BadSeed : public Error {
 public:
  using Error::Error;
};

/// Vector-field family is not closed under the bracket (or not independent).
class ClosureError : public Error {
 public:
  ClosureError(std::string what, std::size_t first, std::size_t second)
      : Error(std::move(what)), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace klein
