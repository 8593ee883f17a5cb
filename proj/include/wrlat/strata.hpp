#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>

#include "wrlat/enumerate.hpp"
#include "wrlat/matrix.hpp"

namespace wrlat {

/// High-precision (non-exact) reals, used only by the exhaustion function.
using Real = boost::multiprecision::cpp_bin_float_50;

Real rat_to_real(const Rat& x);

/// Where a lattice sits in the nested strata: k is the rank of the group
/// generated by its minimal vectors; in_X means the minimal vectors span a
/// finite-index subgroup of Z^n (the well-rounded locus), in_Y that they
/// generate all of Z^n.
struct StratumReport {
  int k = 0;
  bool in_x = false;
  bool in_y = false;
  std::optional<Int> index;  // index of <S> in Z^n; empty = infinite (k < n)
  Rat systole_sq;
  /// systole_sq^n / det(Q): invariant under Q -> c Q, strictly monotone
  /// along the retraction flow.
  Rat normalized_invariant;
};

StratumReport classify(const SymForm& form);

/// Truncated value of the proper exhaustion function
/// F(Q) = sum over v in Z^n of exp(-sqrt(v^T Q v)),
/// with a certified bound on the omitted tail.  This is the one place the
/// library leaves exact arithmetic.
struct ExhaustionValue {
  Real value;
  Real tail_bound;
  Rat truncation_radius_sq;
};

/// Grows the truncation radius (x4 per round, starting at 4 * systole_sq)
/// until the tail bound drops to `tolerance`.
ExhaustionValue exhaustion_value(const SymForm& form, const Real& tolerance);

/// Single truncation at a fixed radius; radius_sq = 0 keeps only the v = 0
/// term.  The tail bound counts lattice points in shells of unit width via
/// N(R) <= (2R/syst + 1)^n and closes the series geometrically.
ExhaustionValue exhaustion_truncated(const SymForm& form, const Rat& radius_sq);

}  // namespace wrlat
