#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "recip/oracles.hpp"

using namespace recip;

TEST_CASE("lemma2_gcd golden cases") {
  CHECK(lemma2_gcd(1, 2) == 1);  // gcd(17, 12)
  CHECK(lemma2_gcd(2, 3) == 1);  // gcd(43, 60)
  // Hypothesis r % 3 != q % 3 violated: gcd(57, 120) = 3.
  CHECK(lemma2_gcd(1, 4) == 3);
  CHECK_THROWS_AS(lemma2_gcd(2, 2), std::domain_error);
  CHECK_THROWS_AS(lemma2_gcd(0, 3), std::domain_error);
}

TEST_CASE("lemma2 sweep") {
  const SweepReport r10 = verify_lemma2(10);
  CHECK(r10.cases_checked > 0);
  CHECK(r10.counterexample_count == 0);
  CHECK(r10.counterexamples.empty());
  CHECK(!r10.partial);

  const SweepReport r2 = verify_lemma2(2);
  CHECK(r2.cases_checked == 1);  // exactly (q=1, r=2)
  CHECK(r2.counterexample_count == 0);

  const SweepReport r1 = verify_lemma2(1);
  CHECK(r1.cases_checked == 0);
  CHECK(r1.counterexample_count == 0);
}

TEST_CASE("euclid lemma sweep") {
  const SweepReport r = verify_euclid_lemma(30);
  CHECK(r.cases_checked > 0);
  CHECK(r.counterexample_count == 0);

  const SweepReport r1 = verify_euclid_lemma(1);
  CHECK(r1.counterexample_count == 0);
}

TEST_CASE("negative control: unfiltered euclid sweep must fail") {
  const SweepReport r = verify_euclid_lemma_unfiltered(10);
  CHECK(r.counterexample_count >= 1);
  bool found = false;
  for (const auto& ce : r.counterexamples)
    if (ce == std::vector<i64>{4, 2, 2}) found = true;
  CHECK(found);  // 4 | 2*2 yet 4 does not divide 2
}

TEST_CASE("negative control: inflated d must fail the identity") {
  const SweepReport r = verify_t4_inflated_d(2);
  CHECK(r.counterexample_count >= 1);
  REQUIRE(!r.counterexamples.empty());
  CHECK(r.counterexamples[0] == std::vector<i64>{2, 1, 1});
}

TEST_CASE("negative control: dropped factor must disagree with the search") {
  const SweepReport r = verify_v1_family_dropped_factor(5);
  CHECK(r.counterexample_count >= 1);
}

TEST_CASE("theorem sweeps hold at small bounds") {
  CHECK(verify_theorem("T2i", 20).verified());
  CHECK(verify_theorem("T2ii", 10).verified());
  CHECK(verify_theorem("T2iii", 60).verified());
  CHECK(verify_theorem("T2iv", 12).verified());
  CHECK(verify_theorem("T2v", 12).verified());
  CHECK(verify_theorem("T4", 12).verified());
  CHECK(verify_theorem("T5", 40).verified());
}

TEST_CASE("T3 sweeps exactly the twin-prime v values") {
  const SweepReport r = verify_theorem("T3", 50);
  CHECK(r.verified());
  // v in {4, 6, 12, 18, 30, 42}, k <= 20 each.
  CHECK(r.cases_checked == 6 * 20);
}

TEST_CASE("unknown claims are rejected") {
  CHECK_THROWS_AS(verify_theorem("bogus", 10), std::invalid_argument);
  CHECK_THROWS_AS(run_claim("bogus", 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem("lemma2", 10), std::invalid_argument);  // lemma ids live in run_claim
  CHECK_THROWS_AS(run_claim("T5", 0), std::domain_error);
}

TEST_CASE("run_claim dispatches every known claim") {
  for (const std::string& id : known_claims()) {
    const SweepReport r = run_claim(id, id == "T4" ? 6 : 12);
    CHECK(r.claim_id == id);
    CHECK(r.counterexample_count == 0);
  }
}

TEST_CASE("an expired deadline yields a partial report") {
  const SweepReport r = verify_euclid_lemma(500, std::chrono::steady_clock::now());
  CHECK(r.partial);
  CHECK(!r.verified());
}

TEST_CASE("sweep reports are deterministic") {
  const SweepReport a = verify_lemma2(60);
  const SweepReport b = verify_lemma2(60);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.counterexample_count == b.counterexample_count);
  CHECK(a.counterexamples == b.counterexamples);

  const SweepReport c = verify_euclid_lemma_unfiltered(12);
  const SweepReport d = verify_euclid_lemma_unfiltered(12);
  CHECK(c.counterexamples == d.counterexamples);
  CHECK(c.counterexample_count == d.counterexample_count);
}

TEST_CASE("counterexample list is capped with a full total") {
  const SweepReport r = verify_euclid_lemma_unfiltered(20);
  CHECK(r.counterexample_count > SweepReport::kMaxReported);
  CHECK(static_cast<i64>(r.counterexamples.size()) == SweepReport::kMaxReported);
}
