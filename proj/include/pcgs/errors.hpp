#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcgs {

/// Base class for all typed errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix Market input that is syntactically broken (bad header, bad counts,
/// out-of-range indices, truncated body).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Matrix Market input that is well formed but outside the supported subset
/// (complex/pattern/integer fields, array format, hermitian/skew symmetry).
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// Operand sizes do not conform (matvec, preconditioner apply, solve).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Matrix lacks structure a factorization requires (e.g. a structurally
/// missing diagonal entry).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A pivot became (numerically) zero or non-finite during factorization.
class PivotBreakdown : public Error {
 public:
  PivotBreakdown(std::size_t row, const std::string& what)
      : Error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// A linear-map application produced a non-finite entry.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The initial shadow residual vector is exactly orthogonal to the initial
/// residual form, so the bi-Lanczos recurrence cannot start.
class OrthogonalStartError : public Error {
 public:
  using Error::Error;
};

/// A stopping-criterion denominator is zero (b = 0, or x_exact = 0 for the
/// error criterion).
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcgs
