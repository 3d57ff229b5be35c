#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gtlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different alphabets (puncture counts).
class MismatchedContext : public Error {
 public:
  using Error::Error;
};

// A precondition on the value of an argument was violated, e.g. exp of a
// series with non-zero constant term.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MissingCoefficient : public Error {
 public:
  explicit MissingCoefficient(int index)
      : Error("associator coefficient q_" + std::to_string(index) + " is missing"), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class ZeroParameter : public Error {
 public:
  using Error::Error;
};

// e1 + e2 differs from s(-z): the associator coefficients violate the
// Bernoulli constraint.
class InconsistentCoeffs : public Error {
 public:
  using Error::Error;
};

// The graded linear system of the expansion solver has no solution. This
// can only happen through an implementation bug.
class SolverInconsistent : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
      : Error(msg), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace gtlab
