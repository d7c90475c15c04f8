#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cstar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& what = "scalar rings do not match") : Error(what) {}
};

struct MissingGenerator : Error {
  explicit MissingGenerator(size_t index)
      : Error("no matrix assigned to generator " + std::to_string(index + 1)), index(index) {}
  size_t index;
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& what = "matrix sizes do not match") : Error(what) {}
};

struct MissingBound : Error {
  explicit MissingBound(size_t index)
      : Error("no norm bound for generator " + std::to_string(index + 1)), index(index) {}
  size_t index;
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

struct NotSelfAdjoint : Error {
  NotSelfAdjoint() : Error("matrix is not self-adjoint within tolerance") {}
};

struct DependentInput : Error {
  explicit DependentInput(size_t index)
      : Error("input vector " + std::to_string(index) + " is dependent on its predecessors"),
        index(index) {}
  size_t index;
};

struct NotAProjection : Error {
  NotAProjection() : Error("matrix is not a projection within tolerance") {}
};

struct BadTable : Error {
  explicit BadTable(const std::string& what) : Error("bad multiplication table: " + what) {}
};

struct BallOverflow : Error {
  explicit BallOverflow(size_t cap)
      : Error("word ball exceeds cap of " + std::to_string(cap) + " nodes") {}
};

struct CoverFailure : Error {
  explicit CoverFailure(const std::string& what) : Error("cover oracle failure: " + what) {}
};

struct NoUnit : Error {
  NoUnit() : Error("algebra has no two-sided unit in its span") {}
};

struct ToleranceFailure : Error {
  explicit ToleranceFailure(const std::string& what) : Error(what) {}
};

struct NotClosedUnderMultiplication : Error {
  NotClosedUnderMultiplication()
      : Error("basis span is not closed under multiplication within tolerance") {}
};

struct DegenerateChain : Error {
  explicit DegenerateChain(const std::string& what) : Error(what) {}
};

struct RingNotReal : Error {
  RingNotReal() : Error("operation requires a real ambient ring") {}
};

}  // namespace cstar
