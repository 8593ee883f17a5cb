#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wrlat/retraction.hpp"
#include "wrlat/strata.hpp"
#include "wrlat/verify.hpp"

using namespace wrlat;
using namespace wrlat::testing;

TEST_CASE("classify: identity is in Y") {
  StratumReport r = classify(SymForm::identity(5));
  CHECK(r.k == 5);
  CHECK(r.in_x);
  CHECK(r.in_y);
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 1);
  CHECK(r.systole_sq == 1);
  CHECK(r.normalized_invariant == 1);
}

TEST_CASE("classify: witness lattice is in X but not in Y") {
  StratumReport r = classify(SymForm::gram_of_basis(counterexample_basis(5).basis));
  CHECK(r.k == 5);
  CHECK(r.in_x);
  CHECK(!r.in_y);
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 2);
  CHECK(r.systole_sq == 1);
  CHECK(r.normalized_invariant == 4);  // 1^5 / (1/4)
}

TEST_CASE("classify: skew diagonal has rank one") {
  StratumReport r = classify(SymForm::diagonal({make_rat(1, 4), Rat(1), Rat(4)}));
  CHECK(r.k == 1);
  CHECK(!r.in_x);
  CHECK(!r.in_y);
  CHECK(!r.index.has_value());
  CHECK(r.systole_sq == make_rat(1, 4));
}

TEST_CASE("classification is a unimodular invariant") {
  Rng rng(301);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    StratumReport a = classify(q);
    StratumReport b = classify(transform(q, rand_unimodular(rng, n)));
    CHECK(a.k == b.k);
    CHECK(a.in_x == b.in_x);
    CHECK(a.in_y == b.in_y);
    CHECK(a.index == b.index);
    CHECK(a.normalized_invariant == b.normalized_invariant);
  }
}

TEST_CASE("normalized invariant is scale invariant, exactly") {
  Rng rng(307);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(rng, 2, 5);
    SymForm q = rand_pd_form(rng, n);
    Rat c = rand_pos_rat(rng, 9);
    CHECK(classify(q).normalized_invariant ==
          classify(q.scaled(c)).normalized_invariant);
  }
}

TEST_CASE("in_Y iff in_X with index one") {
  Rng rng(311);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rand_int(rng, 2, 5);
    StratumReport r = classify(rand_pd_form(rng, n));
    CHECK(r.in_y == (r.in_x && r.index.has_value() && *r.index == 1));
    CHECK(r.in_x == r.index.has_value());
    if (r.in_y) CHECK(r.in_x);
  }
}

TEST_CASE("exhaustion: zero truncation keeps only the central term") {
  ExhaustionValue ev = exhaustion_truncated(SymForm::identity(2), Rat(0));
  CHECK(ev.value == 1);
  CHECK(ev.tail_bound > 0);
  CHECK(ev.truncation_radius_sq == 0);
}

TEST_CASE("exhaustion: identity(2) against direct box summation") {
  // independent oracle: every term with |v_i| <= 40 summed directly
  Real direct = 1;
  for (long x = -40; x <= 40; ++x)
    for (long y = -40; y <= 40; ++y) {
      if (x == 0 && y == 0) continue;
      direct += exp(-sqrt(Real(x * x + y * y)));
    }
  ExhaustionValue ev = exhaustion_value(SymForm::identity(2), Real("1e-6"));
  CHECK(ev.tail_bound <= Real("1e-6"));
  CHECK(abs(ev.value - direct) < Real("2e-6"));
  CHECK(ev.value > 1);
}

TEST_CASE("exhaustion: halving the tolerance never loosens the result") {
  SymForm q = SymForm::from_matrix(
      {{Rat(2), make_rat(1, 3)}, {make_rat(1, 3), Rat(1)}});
  Real tol("1e-2");
  ExhaustionValue prev = exhaustion_value(q, tol);
  for (int round = 0; round < 6; ++round) {
    tol /= 2;
    ExhaustionValue next = exhaustion_value(q, tol);
    CHECK(next.tail_bound <= prev.tail_bound);
    CHECK(abs(next.value - prev.value) <= prev.tail_bound);
    CHECK(next.value >= 1);
    prev = next;
  }
}

TEST_CASE("exhaustion values are finite and at least one") {
  Rng rng(313);
  for (int trial = 0; trial < 5; ++trial) {
    SymForm q = rand_pd_form(rng, 2);
    ExhaustionValue ev = exhaustion_value(q, Real("1e-3"));
    CHECK(ev.value >= 1);
    CHECK(ev.tail_bound <= Real("1e-3"));
  }
}

TEST_CASE("low dimensions: retracted forms land in Y") {
  Rng rng(317);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      SymForm q = rand_pd_form(rng, n);
      StratumReport r = classify(retract(q).final);
      CHECK(r.in_x);
      CHECK(r.in_y);
    }
  }
}
