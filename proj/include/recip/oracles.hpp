#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "recip/solver.hpp"

namespace recip {

/// Result of one bounded exhaustive sweep. The counterexample list is capped
/// at kMaxReported entries; counterexample_count is the uncapped total.
struct SweepReport {
  static constexpr i64 kMaxReported = 100;

  std::string claim_id;
  i64 bound = 0;
  i64 cases_checked = 0;
  std::vector<std::vector<i64>> counterexamples;
  i64 counterexample_count = 0;
  bool partial = false;  // deadline hit before the sweep finished

  bool verified() const { return counterexample_count == 0 && !partial; }
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// gcd(3r^2 + q^2 + 2rq, 2rq(r^2 - q^2)), raw: only r > q >= 1 is required,
/// so hypothesis-violating pairs can be probed.
i64 lemma2_gcd(i64 q, i64 r);

/// Sweeps q < r <= bound over coprime opposite-parity pairs with q % 3 != 0
/// and r % 3 != q % 3; lemma2_gcd must be 1 on every such pair.
SweepReport verify_lemma2(i64 bound, Deadline deadline = {});

/// Sweeps alpha, beta, gamma <= bound with gcd(alpha, beta) = 1 and
/// alpha | beta*gamma; alpha must divide gamma.
SweepReport verify_euclid_lemma(i64 bound, Deadline deadline = {});

/// Claim-specific sweeps, claim_id in {"T2i","T2ii","T2iii","T2iv","T2v",
/// "T3","T4","T5"}. Unknown ids raise std::invalid_argument. Per-claim bound
/// semantics are documented in oracles.cpp.
SweepReport verify_theorem(const std::string& claim_id, i64 bound, Deadline deadline = {});

// Deliberately falsified variants. Each must report counterexamples; the test
// suite runs them to prove the harnesses can fail (sensitivity controls).

/// verify_euclid_lemma without the coprimality filter.
SweepReport verify_euclid_lemma_unfiltered(i64 bound, Deadline deadline = {});
/// v=2, k=1 family with d inflated by a spurious (2mn)(m^2-n^2) factor.
SweepReport verify_t4_inflated_d(i64 bound, Deadline deadline = {});
/// v=1 family rule l = d k (m - n), missing the factor n.
SweepReport verify_v1_family_dropped_factor(i64 bound, Deadline deadline = {});

/// Claim ids accepted by run_claim.
const std::vector<std::string>& known_claims();

/// Dispatch by claim id: "lemma1", "lemma2", or a theorem claim.
SweepReport run_claim(const std::string& claim_id, i64 bound, Deadline deadline = {});

}  // namespace recip
