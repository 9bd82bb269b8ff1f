#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypcert {

// Base of every recoverable failure raised by this library. Callers that
// want the coarse outcome can catch this one type; the certification driver
// maps any subclass to an INAPPLICABLE verdict carrying the message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. The offset is the byte position in the parsed text
// at which the scanner gave up.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"),
        message_(message),
        offset_(offset) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Input file is neither the structured manifold format nor a transcript.
class UnknownFormat : public Error {
 public:
  using Error::Error;
};

// Row/column/shape counts disagree with each other or with the header.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A tetrahedron shape has nonpositive imaginary part. Index is 1-based.
class NonGeometricShape : public Error {
 public:
  NonGeometricShape(const std::string& message, int index)
      : Error(message), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Gaussian elimination met a pivot too small to trust at the working
// precision.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// A matrix handed to the eigenvalue routine produced roots with imaginary
// parts too large for a self-adjoint spectrum.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// A self-adjoint eigenvalue came out nonpositive where positive definite
// input was required.
class NonPositiveEigenvalue : public Error {
 public:
  using Error::Error;
};

// The polynomial root iteration failed to settle within its sweep budget.
class RootFindingError : public Error {
 public:
  using Error::Error;
};

// Row selection exhausted the candidate rows before reaching full rank, or
// a rank sanity check on the input blocks failed.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

// Surgery coefficients must be coprime and not both zero.
class NotCoprime : public Error {
 public:
  using Error::Error;
};

// A shape sits on or beside a logarithm branch cut, so derivative bounds
// are meaningless. Index is 1-based.
class BranchCutProximity : public Error {
 public:
  BranchCutProximity(const std::string& message, int index)
      : Error(message), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// The Jacobian at the approximate solution is numerically singular.
class SingularJacobian : public Error {
 public:
  using Error::Error;
};

// A stage was invoked whose preconditions depend on an earlier test that
// did not pass.
class PrereqTestFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace hypcert
