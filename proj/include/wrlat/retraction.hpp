#pragma once

#include <vector>

#include "wrlat/enumerate.hpp"
#include "wrlat/matrix.hpp"

namespace wrlat {

// The deformation flow scales the span of the minimal vectors up and its
// orthogonal complement down, volume-preserving.  On Gram matrices this is
// exactly rational: with t = e^{2n lambda}, a uniform rescaling of the
// flowed lattice has Gram matrix t * span_part + complement_part, where
// span_part is the Gram of the projections of the basis onto the minimal-
// vector span.  Uniform rescaling changes neither the minimal-vector set
// nor any stratum data, so the whole retraction stays in Q.

struct FlowDecomposition {
  RatMatrix span_part;        // PSD of rank k; zero on every minimal vector's complement
  RatMatrix complement_part;  // PSD of rank n - k; vanishes on the span
  int k = 0;                  // rank of <S>
};

/// Splits Q = span_part + complement_part along the minimal-vector span.
/// With W an integer basis of <S> (from the Hermite normal form),
/// span_part = (Q W)(W^T Q W)^{-1}(W^T Q).  For k = n this is Q itself.
FlowDecomposition decompose(const SymForm& form);

struct FlowEvent {
  /// Event ratio r > 1; the flow time is tau = ln(r) / (2n).
  Rat ratio;
  /// Vectors that newly achieve the systole at the event (canonical sign,
  /// sorted).  For such v with p2 = v^T M1 v and q2 = v^T M2 v,
  /// r (s2 - p2) = q2 holds exactly.
  std::vector<IntVec> joining;
  int k_before = 0;
  int k_after = 0;  // rank of <S union joining>, strictly larger
};

/// First event of the flow started at `form`.  A vector v with p2 < s2
/// would join at ratio q2 / (s2 - p2); candidates are certified complete by
/// enumerating the deformed form t*M1 + M2 below t*s2 for a growing trial
/// ratio t (4, then squared each round): every vector joining at or before
/// t lies in that ball.  Throws AlreadyWellRounded when k = n.
FlowEvent next_event(const SymForm& form);

struct FlowStep {
  SymForm next;  // r * span_part + complement_part, exactly
  FlowEvent event;
};

/// Runs the flow to its first event.  det(next) = r^k det(form).
FlowStep flow_step(const SymForm& form);

/// The rescaled Gram form at intermediate time t in [1, r]: t in this
/// parametrization is e^{2n lambda}.  Strictly inside the interval the
/// minimal-vector set is unchanged and the systole value scales by t.
SymForm flow_at(const SymForm& form, const Rat& t);

struct RetractionStep {
  SymForm input;
  FlowEvent event;
  SymForm output;
};

struct RetractionTrace {
  std::vector<RetractionStep> steps;  // at most n - 1
  SymForm final;                      // well-rounded
};

/// Iterates flow_step until the minimal vectors span R^n.
RetractionTrace retract(const SymForm& form);

}  // namespace wrlat
