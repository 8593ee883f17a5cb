#pragma once

#include <optional>
#include <vector>

#include "wrlat/matrix.hpp"

namespace wrlat {

struct LdltFactors {
  RatMatrix lower;         // unit lower-triangular
  std::vector<Rat> diag;   // positive pivots
};

/// L D L^T = Q exactly.  The factors are produced by the form's own
/// positive-definiteness certificate.
LdltFactors ldlt(const SymForm& q);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rat det(const RatMatrix& m);

/// Exact inverse; throws SingularMatrix when det = 0.
RatMatrix invert(const RatMatrix& m);

struct HnfResult {
  /// Canonical basis of the integer span, one column per basis vector
  /// (column-style Hermite normal form, nonzero columns only).
  std::vector<IntVec> basis;
  int rank = 0;
  /// Index of the span in Z^n; empty when rank < n (infinite index).
  std::optional<Int> index;
};

/// Hermite normal form of the span of `vectors` (nonempty, common length).
/// Deterministic: invariant under permuting or negating the input.
HnfResult hnf(const std::vector<IntVec>& vectors);

/// Rank of a symmetric positive semidefinite matrix via pivoted symmetric
/// elimination; nullopt if the matrix is not PSD.
std::optional<int> psd_rank(const RatMatrix& m);

}  // namespace wrlat
