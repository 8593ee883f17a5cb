#pragma once

#include <vector>

#include "wrlat/matrix.hpp"

namespace wrlat {

struct EnumOptions {
  /// Run an exact-arithmetic LLL pass on the form first and enumerate in the
  /// reduced basis.  Output is bit-identical either way; this only trades
  /// tree size for the reduction cost on skew forms.
  bool reduce_first = false;
};

struct ShortVector {
  IntVec v;      // canonical sign (first nonzero coordinate positive)
  Rat value_sq;  // v^T Q v
};

/// All integer vectors (one representative per +-pair) with form value at
/// most bound_sq, sorted by (value, output_lex).  Completeness is exact: the
/// depth-first traversal over the LDL^T cone prunes with rational
/// comparisons only.  A bound below the systole yields an empty list.
std::vector<ShortVector> enumerate_short(const SymForm& form, const Rat& bound_sq,
                                         const EnumOptions& options = {});

struct MinimalVectorData {
  Rat systole_sq;                // exact minimum of the form on Z^n \ {0}
  std::vector<IntVec> vectors;   // the set S, canonical sign, sorted
  int count_with_signs() const { return 2 * static_cast<int>(vectors.size()); }
};

/// The systole (squared) and the full set of minimal vectors.  The search
/// starts from min_i Q_ii (the value at the best coordinate vector) and
/// shrinks the bound as shorter vectors are found.
MinimalVectorData minimal_vectors(const SymForm& form, const EnumOptions& options = {});

/// Unimodular U (integer entries) such that U^T Q U is LLL-reduced, exact
/// rational arithmetic throughout.
RatMatrix reduce_unimodular(const SymForm& form);

/// U * v for an integer matrix stored as rationals.
IntVec apply_unimodular(const RatMatrix& u, const IntVec& v);

}  // namespace wrlat
