#include "wrlat/strata.hpp"

#include "wrlat/errors.hpp"
#include "wrlat/linalg.hpp"

namespace wrlat {

Real rat_to_real(const Rat& x) {
  return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

StratumReport classify(const SymForm& form) {
  MinimalVectorData md = minimal_vectors(form);
  HnfResult h = hnf(md.vectors);
  StratumReport r;
  r.k = h.rank;
  r.in_x = h.rank == form.dim();
  r.index = h.index;
  r.in_y = h.index.has_value() && *h.index == 1;
  r.systole_sq = md.systole_sq;
  Rat num = 1;
  for (int i = 0; i < form.dim(); ++i) num *= md.systole_sq;
  r.normalized_invariant = num / form.det();
  return r;
}

namespace {

// Upper bound for sum over lattice vectors of norm > R of exp(-norm).
// Points of norm <= rho number at most (2 rho / syst + 1)^n; shell k of
// width one contributes at most (2(R+k+1)/s + 1)^n exp(-(R+k)).  Once the
// term ratio is certified below 1/2 the rest of the series is bounded by
// one extra term.
Real tail_over_radius(const Real& radius, const Real& syst, int n) {
  const Real two_over_s = 2 / syst;
  Real tail = 0;
  Real shell_start = radius;
  for (int k = 0;; ++k, shell_start += 1) {
    Real a = two_over_s * (shell_start + 1) + 1;
    Real term = pow(a, n) * exp(-shell_start);
    tail += term;
    Real rho = exp(Real(-1)) * pow((a + two_over_s) / a, n);
    if (rho < Real(1) / 2 && term < tail * Real("1e-40")) {
      tail += term;  // closes the remaining geometric series
      return tail;
    }
  }
}

ExhaustionValue truncated_with(const SymForm& form, const Rat& radius_sq,
                               const MinimalVectorData& md) {
  ExhaustionValue out;
  out.truncation_radius_sq = radius_sq;
  out.value = 1;  // the v = 0 term
  if (radius_sq > 0) {
    for (const ShortVector& h : enumerate_short(form, radius_sq))
      out.value += 2 * exp(-sqrt(rat_to_real(h.value_sq)));
  }
  Real syst = sqrt(rat_to_real(md.systole_sq));
  Real radius = sqrt(rat_to_real(radius_sq));
  out.tail_bound = tail_over_radius(radius, syst, form.dim());
  return out;
}

}  // namespace

ExhaustionValue exhaustion_value(const SymForm& form, const Real& tolerance) {
  if (tolerance <= 0) throw OutOfRange("tolerance must be positive");
  MinimalVectorData md = minimal_vectors(form);
  Rat radius_sq = 4 * md.systole_sq;
  for (;;) {
    ExhaustionValue ev = truncated_with(form, radius_sq, md);
    if (ev.tail_bound <= tolerance) return ev;
    radius_sq *= 4;
  }
}

ExhaustionValue exhaustion_truncated(const SymForm& form, const Rat& radius_sq) {
  if (radius_sq < 0) throw OutOfRange("truncation radius must be nonnegative");
  return truncated_with(form, radius_sq, minimal_vectors(form));
}

}  // namespace wrlat
