#include "wrlat/retraction.hpp"

#include <algorithm>

#include "wrlat/errors.hpp"
#include "wrlat/linalg.hpp"

namespace wrlat {

namespace {

FlowDecomposition decompose_with(const SymForm& form, const MinimalVectorData& md) {
  const int n = form.dim();
  HnfResult h = hnf(md.vectors);
  FlowDecomposition out;
  out.k = h.rank;
  if (h.rank == n) {
    out.span_part = form.to_matrix();
    out.complement_part = RatMatrix(n, n);
    return out;
  }
  RatMatrix w = RatMatrix::from_columns(h.basis);
  RatMatrix qw = form.to_matrix() * w;                       // n x k
  RatMatrix small = w.transposed() * qw;                     // W^T Q W, PD
  out.span_part = qw * invert(small) * qw.transposed();
  out.complement_part = form.to_matrix() - out.span_part;
  // Certify the split: both parts PSD of complementary ranks, and the
  // complement part vanishes on every minimal vector.
  if (psd_rank(out.span_part) != out.k ||
      psd_rank(out.complement_part) != form.dim() - out.k)
    throw Error("flow decomposition failed its rank certificate");
  for (const IntVec& v : md.vectors)
    if (quad_value(out.complement_part, v) != 0)
      throw Error("flow decomposition does not vanish on a minimal vector");
  return out;
}

SymForm deformed_form(const FlowDecomposition& dec, const Rat& t) {
  return SymForm::from_matrix(dec.span_part.scaled(t) + dec.complement_part);
}

// Requires dec.k < n.
FlowEvent event_with(const SymForm& form, const MinimalVectorData& md,
                     const FlowDecomposition& dec) {
  const Rat& s2 = md.systole_sq;
  FlowEvent ev;
  ev.k_before = dec.k;
  Rat best;
  for (Rat trial = 4;; trial *= trial) {
    // All vectors that join at ratio <= trial satisfy
    // v^T (trial*M1 + M2) v <= trial * s2, and nothing else does except the
    // current minimal vectors themselves.
    for (const ShortVector& h : enumerate_short(deformed_form(dec, trial), trial * s2)) {
      Rat q2 = quad_value(dec.complement_part, h.v);
      if (q2 == 0) continue;  // lies in the span: one of the minimal vectors
      Rat p2 = form.value(h.v) - q2;
      Rat ratio = q2 / (s2 - p2);
      if (ev.joining.empty() || ratio < best) {
        best = ratio;
        ev.joining.assign(1, h.v);
      } else if (ratio == best) {
        ev.joining.push_back(h.v);
      }
    }
    if (!ev.joining.empty()) break;
  }
  ev.ratio = best;
  std::sort(ev.joining.begin(), ev.joining.end(), output_lex_less);

  std::vector<IntVec> enlarged = md.vectors;
  enlarged.insert(enlarged.end(), ev.joining.begin(), ev.joining.end());
  ev.k_after = hnf(enlarged).rank;
  return ev;
}

struct Analysis {
  MinimalVectorData md;
  FlowDecomposition dec;
  FlowEvent event;
};

Analysis analyze(const SymForm& form) {
  Analysis a{minimal_vectors(form), {}, {}};
  a.dec = decompose_with(form, a.md);
  if (a.dec.k == form.dim())
    throw AlreadyWellRounded("minimal vectors already span R^n");
  a.event = event_with(form, a.md, a.dec);
  return a;
}

}  // namespace

FlowDecomposition decompose(const SymForm& form) {
  return decompose_with(form, minimal_vectors(form));
}

FlowEvent next_event(const SymForm& form) { return analyze(form).event; }

FlowStep flow_step(const SymForm& form) {
  Analysis a = analyze(form);
  return {deformed_form(a.dec, a.event.ratio), std::move(a.event)};
}

SymForm flow_at(const SymForm& form, const Rat& t) {
  if (t < 1) throw OutOfRange("flow time parameter below 1");
  Analysis a = analyze(form);
  if (t > a.event.ratio)
    throw OutOfRange("flow time parameter beyond the current event ratio " +
                     to_string(a.event.ratio));
  return deformed_form(a.dec, t);
}

RetractionTrace retract(const SymForm& form) {
  std::vector<RetractionStep> steps;
  SymForm current = form;
  const int n = form.dim();
  for (;;) {
    MinimalVectorData md = minimal_vectors(current);
    FlowDecomposition dec = decompose_with(current, md);
    if (dec.k == n) break;
    FlowEvent ev = event_with(current, md, dec);
    SymForm next = deformed_form(dec, ev.ratio);
    steps.push_back({current, std::move(ev), next});
    current = std::move(next);
    if (static_cast<int>(steps.size()) > n - 1)
      throw Error("retraction failed to terminate in n - 1 events");
  }
  return {std::move(steps), std::move(current)};
}

}  // namespace wrlat
