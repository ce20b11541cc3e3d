#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct ZeroInput : Error {
  ZeroInput() : Error("zero input") {}
};

struct PoleAtZero : Error {
  PoleAtZero() : Error("pole at t = 0") {}
};

struct SizeLimit : Error {
  explicit SizeLimit(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct NotTriangular : Error {
  explicit NotTriangular(const std::string& what) : Error(what) {}
};

struct SingularDiagonal : Error {
  SingularDiagonal() : Error("triangular matrix has a zero diagonal entry") {}
};

// The k-th leading principal minor (1 <= k <= b) of the defining matrix is
// not invertible, so the LDU factorization does not exist.
struct Degenerate : Error {
  explicit Degenerate(int minor_size_)
      : Error("defining matrix is degenerate: leading " +
              std::to_string(minor_size_) + "x" + std::to_string(minor_size_) +
              " minor is not invertible"),
        minor_size(minor_size_) {}
  int minor_size;
};

struct NotDegenerate : Error {
  NotDegenerate() : Error("defining matrix is not degenerate") {}
};

struct PerturbationFailed : Error {
  PerturbationFailed()
      : Error("no perturbation direction produced a non-degenerate lift") {}
};

// Negative total pole order in the t = 0 evaluation.  Impossible for a true
// determinant; surfaced instead of clamped.
struct NegativePoleOrder : Error {
  NegativePoleOrder()
      : Error("negative total order at t = 0 in perturbed determinant") {}
};

struct BitBudgetExceeded : Error {
  BitBudgetExceeded()
      : Error("expanded determinant exceeds the bit budget; result stays "
              "factored") {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& what) : Error(what) {}
};

struct NotOddPrime : Error {
  explicit NotOddPrime(const std::string& what) : Error(what) {}
};

struct EvenBase : Error {
  EvenBase() : Error("base must be odd") {}
};

struct RangeTooLarge : Error {
  explicit RangeTooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(int line_, int column_, const std::string& what)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

struct NormalizationError : Error {
  NormalizationError() : Error("entry (0,0) of a defining matrix must be 1") {}
};

}  // namespace selfsim
