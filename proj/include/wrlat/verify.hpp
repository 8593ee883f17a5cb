#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrlat/matrix.hpp"

namespace wrlat {

/// The witness family separating the well-rounded locus X from the full-
/// span locus Y: identity on the leading (n-1)-block, last column all 1/2.
/// Determinant 1/2.  (The usual unit-volume scalar is dropped; every claim
/// checked here is scale invariant and the unscaled matrix keeps all
/// arithmetic rational.)
struct Counterexample {
  int n;
  RatMatrix basis;
};

/// Throws DimensionTooSmall for n < 2.
Counterexample counterexample_basis(int n);

struct VerificationReport {
  std::string claim;  // "lemma-diag" | "lemma-nil" | "counterexample" | "ha-dichotomy"
  int n = 0;
  bool pass = false;
  bool expected_pass = true;
  std::string detail;
  std::vector<IntVec> witness;  // evidence: the observed minimal-vector set
  std::optional<Int> index;     // index of <S> in Z^n when finite
};

/// Positive diagonal forms: systole_sq(diag(a_i^2)) = (min a_i)^2 exactly;
/// when prod a_i = 1, additionally min a_i <= 1 with equality iff all a_i = 1.
VerificationReport verify_lemma_diag(const std::vector<Rat>& entries);

/// Upper unitriangular bases have systole exactly 1, with e_1 minimal.
/// Throws NotUnitriangular.
VerificationReport verify_lemma_nil(const RatMatrix& basis);

/// The witness lattice has minimal vectors exactly
/// +-e_1, ..., +-e_{n-1}, +-(2e_n - sum_{i<n} e_i), which span an index-2
/// subgroup of Z^n: in X but not in Y.  True for n >= 5; for n = 2, 3, 4
/// extra vectors enter the minimal set and the report is an expected
/// failure carrying the actual set as witness.
VerificationReport verify_counterexample(int n);

/// H * basis stays well-rounded iff the positive unimodular diagonal H is
/// the identity (n >= 5).  Also cross-checks the a-priori systole bound
/// systole_sq <= (min a_i)^2.  Throws NotUnimodularDiagonal,
/// DimensionTooSmall.
VerificationReport verify_ha_dichotomy(const std::vector<Rat>& h_entries);

struct SuiteOptions {
  std::vector<int> dims{5, 6, 7, 8};
  int samples = 50;  // random draws per sampled claim and dimension
  std::uint64_t seed = 1;
};

/// One aggregated report per claim and dimension.  The dichotomy claim
/// needs n >= 5 and is omitted below that (it has no expected truth value
/// there); the counterexample claim is expected to fail for n < 5.
/// Sampling is deterministic in the seed.
std::vector<VerificationReport> run_claim_suite(const SuiteOptions& options);

/// True when every report matches its expectation.
bool suite_ok(const std::vector<VerificationReport>& reports);

}  // namespace wrlat
