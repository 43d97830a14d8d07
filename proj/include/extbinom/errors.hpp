#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace extbinom {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string reason)
      : Error("parse error at position " + std::to_string(position) + ": " +
              reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

// Sum of weights over an unbounded support.
class DivergentMass : public Error {
 public:
  using Error::Error;
};

// Bracket sums over an unbounded support.
class DivergentBracket : public Error {
 public:
  using Error::Error;
};

// c_f(n) is infinite once f(0) > 0.
class InfiniteCount : public Error {
 public:
  using Error::Error;
};

// An enumeration or summation cap was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

// Parameters outside the hypotheses of a theorem.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace extbinom
