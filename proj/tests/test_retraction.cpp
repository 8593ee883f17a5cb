#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wrlat/errors.hpp"
#include "wrlat/retraction.hpp"
#include "wrlat/strata.hpp"
#include "wrlat/verify.hpp"

using namespace wrlat;
using namespace wrlat::testing;

namespace {

Rat pow_rat(const Rat& x, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

TEST_CASE("decompose: skew diagonal splits along the short axis") {
  FlowDecomposition dec = decompose(SymForm::diagonal({Rat(4), make_rat(1, 4)}));
  CHECK(dec.k == 1);
  CHECK(dec.span_part == RatMatrix::diagonal({Rat(0), make_rat(1, 4)}));
  CHECK(dec.complement_part == RatMatrix::diagonal({Rat(4), Rat(0)}));
}

TEST_CASE("decompose: well-rounded forms decompose trivially") {
  SymForm id = SymForm::identity(4);
  FlowDecomposition dec = decompose(id);
  CHECK(dec.k == 4);
  CHECK(dec.span_part == id.to_matrix());
  CHECK(dec.complement_part == RatMatrix(4, 4));

  SymForm witness = SymForm::gram_of_basis(counterexample_basis(5).basis);
  FlowDecomposition wd = decompose(witness);
  CHECK(wd.k == 5);
  CHECK(wd.span_part == witness.to_matrix());
}

TEST_CASE("decompose invariants on random forms") {
  Rng rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    MinimalVectorData md = minimal_vectors(q);
    FlowDecomposition dec = decompose(q);
    CHECK(dec.span_part + dec.complement_part == q.to_matrix());
    CHECK(psd_rank(dec.span_part) == dec.k);
    CHECK(psd_rank(dec.complement_part) == n - dec.k);
    for (const IntVec& v : md.vectors) {
      CHECK(quad_value(dec.complement_part, v) == 0);
      CHECK(quad_value(dec.span_part, v) == md.systole_sq);
    }
  }
}

TEST_CASE("next_event: worked examples") {
  FlowEvent a = next_event(SymForm::diagonal({Rat(4), make_rat(1, 4)}));
  CHECK(a.ratio == 16);
  CHECK(a.joining == std::vector<IntVec>{vec({1, 0})});
  CHECK(a.k_before == 1);
  CHECK(a.k_after == 2);

  FlowEvent b = next_event(SymForm::diagonal({make_rat(1, 4), Rat(1), Rat(4)}));
  CHECK(b.ratio == 4);
  CHECK(b.joining == std::vector<IntVec>{vec({0, 1, 0})});
  CHECK(b.k_after == 2);

  // long axis joins late even though short in-span combinations abound
  FlowEvent c = next_event(SymForm::diagonal({Rat(1), Rat(1), Rat(100)}));
  CHECK(c.ratio == 100);
  CHECK(c.joining == std::vector<IntVec>{vec({0, 0, 1})});
  CHECK(c.k_before == 2);
  CHECK(c.k_after == 3);
}

TEST_CASE("next_event: already well-rounded input is an error") {
  CHECK_THROWS_AS(next_event(SymForm::identity(3)), AlreadyWellRounded);
}

TEST_CASE("event invariants on random forms") {
  Rng rng(409);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    MinimalVectorData md = minimal_vectors(q);
    FlowDecomposition dec = decompose(q);
    if (dec.k == n) continue;
    FlowEvent ev = next_event(q);
    CHECK(ev.ratio > 1);
    CHECK(ev.k_after > ev.k_before);
    CHECK(!ev.joining.empty());
    for (const IntVec& v : ev.joining) {
      Rat q2 = quad_value(dec.complement_part, v);
      Rat p2 = quad_value(dec.span_part, v);
      CHECK(q2 > 0);
      CHECK(p2 < md.systole_sq);
      CHECK(ev.ratio * (md.systole_sq - p2) == q2);
    }
  }
}

TEST_CASE("flow_step: worked examples and the determinant law") {
  FlowStep one = flow_step(SymForm::diagonal({Rat(4), make_rat(1, 4)}));
  CHECK(one.next == SymForm::diagonal({Rat(4), Rat(4)}));
  StratumReport r1 = classify(one.next);
  CHECK(r1.in_x);
  CHECK(r1.in_y);

  FlowStep two = flow_step(SymForm::diagonal({make_rat(1, 4), Rat(1), Rat(4)}));
  CHECK(two.next == SymForm::diagonal({Rat(1), Rat(1), Rat(4)}));
  // det multiplies by r^k: 4 = 4^1 * 1
  CHECK(two.next.det() == 4);
}

TEST_CASE("flow_step invariants on random forms") {
  Rng rng(419);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    if (classify(q).in_x) continue;
    MinimalVectorData before = minimal_vectors(q);
    FlowStep step = flow_step(q);
    const FlowEvent& ev = step.event;

    CHECK(step.next.det() == pow_rat(ev.ratio, ev.k_before) * q.det());
    CHECK(classify(step.next).k == ev.k_after);

    MinimalVectorData after = minimal_vectors(step.next);
    CHECK(after.systole_sq == ev.ratio * before.systole_sq);
    // S(next) is exactly S(form) together with the joining vectors
    std::vector<IntVec> expected = before.vectors;
    expected.insert(expected.end(), ev.joining.begin(), ev.joining.end());
    std::sort(expected.begin(), expected.end(), output_lex_less);
    std::vector<IntVec> got = after.vectors;
    std::sort(got.begin(), got.end(), output_lex_less);
    CHECK(got == expected);
  }
}

TEST_CASE("flow_at: endpoints and interior of the worked example") {
  SymForm q = SymForm::diagonal({Rat(4), make_rat(1, 4)});
  CHECK(flow_at(q, Rat(1)) == q);
  CHECK(flow_at(q, Rat(4)) == SymForm::diagonal({Rat(4), Rat(1)}));
  CHECK(flow_at(q, Rat(16)) == SymForm::diagonal({Rat(4), Rat(4)}));

  MinimalVectorData mid = minimal_vectors(flow_at(q, Rat(4)));
  CHECK(mid.systole_sq == 1);
  CHECK(mid.vectors == std::vector<IntVec>{vec({0, 1})});

  CHECK_THROWS_AS(flow_at(q, make_rat(1, 2)), OutOfRange);
  CHECK_THROWS_AS(flow_at(q, Rat(17)), OutOfRange);
}

TEST_CASE("flow_at: minimal set is constant strictly inside an event interval") {
  Rng rng(421);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rand_int(rng, 2, 4);
    SymForm q = rand_pd_form(rng, n);
    if (classify(q).in_x) continue;
    MinimalVectorData base = minimal_vectors(q);
    FlowEvent ev = next_event(q);
    for (int probe = 0; probe < 3; ++probe) {
      // random rational t strictly inside (1, r)
      Rat u = make_rat(rand_int(rng, 1, 999), 1000);
      Rat t = 1 + (ev.ratio - 1) * u;
      SymForm moved = flow_at(q, t);
      MinimalVectorData md = minimal_vectors(moved);
      CHECK(md.vectors == base.vectors);
      CHECK(md.systole_sq == t * base.systole_sq);
      // enumerated non-minimal vectors stay strictly above t * s^2
      for (const ShortVector& h : enumerate_short(q, base.systole_sq * (1 + t))) {
        bool minimal = std::find(base.vectors.begin(), base.vectors.end(), h.v) !=
                       base.vectors.end();
        if (minimal)
          CHECK(moved.value(h.v) == t * base.systole_sq);
        else
          CHECK(moved.value(h.v) > t * base.systole_sq);
      }
    }
    // event sharpness: at t = r the joining vectors reach exactly r * s^2
    SymForm at_event = flow_at(q, ev.ratio);
    for (const IntVec& v : ev.joining)
      CHECK(at_event.value(v) == ev.ratio * base.systole_sq);
    CHECK(classify(at_event).k == ev.k_after);
  }
}

TEST_CASE("retract: worked micro-traces") {
  RetractionTrace none = retract(SymForm::identity(4));
  CHECK(none.steps.empty());
  CHECK(none.final == SymForm::identity(4));

  RetractionTrace one = retract(SymForm::diagonal({Rat(4), make_rat(1, 4)}));
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].event.ratio == 16);
  CHECK(one.final == SymForm::diagonal({Rat(4), Rat(4)}));

  RetractionTrace two = retract(SymForm::diagonal({make_rat(1, 4), Rat(1), Rat(4)}));
  REQUIRE(two.steps.size() == 2);
  CHECK(two.steps[0].event.ratio == 4);
  CHECK(two.steps[1].event.ratio == 4);
  CHECK(two.steps[1].event.joining == std::vector<IntVec>{vec({0, 0, 1})});
  CHECK(two.final == SymForm::diagonal({Rat(4), Rat(4), Rat(4)}));
  CHECK(classify(two.final).in_y);
}

TEST_CASE("retract invariants on random forms") {
  Rng rng(431);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    RetractionTrace trace = retract(q);
    CHECK(static_cast<int>(trace.steps.size()) <= n - 1);
    CHECK(classify(trace.final).in_x);
    int last_k = 0;
    for (const RetractionStep& step : trace.steps) {
      CHECK(step.event.k_before >= last_k);
      CHECK(step.event.k_after > step.event.k_before);
      last_k = step.event.k_after;
      // normalized invariant gains exactly r^{n-k}
      Rat factor = pow_rat(step.event.ratio, n - step.event.k_before);
      CHECK(factor > 1);
      CHECK(classify(step.output).normalized_invariant ==
            factor * classify(step.input).normalized_invariant);
    }
  }
}

TEST_CASE("retract: the event-ratio sequence is a unimodular invariant") {
  Rng rng(433);
  for (int trial = 0; trial < 12; ++trial) {
    int n = rand_int(rng, 2, 4);
    SymForm q = rand_pd_form(rng, n);
    SymForm moved = transform(q, rand_unimodular(rng, n));
    RetractionTrace a = retract(q);
    RetractionTrace b = retract(moved);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i)
      CHECK(a.steps[i].event.ratio == b.steps[i].event.ratio);
  }
}
