#pragma once

#include <stdexcept>
#include <string>

namespace wrlat {

/// Base class for all wrlat errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A symmetric form failed rational LDL^T certification (a pivot <= 0).
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

/// A square matrix with determinant zero was passed where an inverse is needed.
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// Flow event requested on a form whose minimal vectors already span R^n.
struct AlreadyWellRounded : Error {
  explicit AlreadyWellRounded(const std::string& what) : Error(what) {}
};

/// Flow time outside [1, r] of the current event.
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct DimensionTooSmall : Error {
  explicit DimensionTooSmall(const std::string& what) : Error(what) {}
};

struct NotUnitriangular : Error {
  explicit NotUnitriangular(const std::string& what) : Error(what) {}
};

/// Diagonal matrix is not positive with determinant one.
struct NotUnimodularDiagonal : Error {
  explicit NotUnimodularDiagonal(const std::string& what) : Error(what) {}
};

/// Malformed input (JSON shape, rational syntax, float entries, ...).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace wrlat
