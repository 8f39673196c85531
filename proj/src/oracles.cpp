#include "recip/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace recip {

namespace {

// Bound semantics per claim. "bound" scales the dimension a claim is about;
// auxiliary dimensions use the fixed caps below so a sweep stays desk-scale.
//
//   lemma1  alpha, beta, gamma <= bound.
//   lemma2  q < r <= bound.
//   T2i     l = 1; v <= bound, k <= min(bound, 20); raw search over m <= 50.
//           Every solution found must satisfy m | v-1 and n | v+1.
//   T2ii    v = 2, l = 1; k <= bound; raw search over m <= 200 must be empty.
//   T2iii   spec (1,1,1); raw search over m <= bound must find exactly
//           (d=1, m=2, n=1).
//   T2iv    v = 1; 2 <= k <= bound, l <= bound, gcd(k,l) = 1; raw search over
//           m <= 50 must be empty.
//   T2v     v even <= bound, l odd <= bound, k <= min(bound, 20),
//           gcd(k,l) = 1; raw search over m <= 50 must be empty.
//   T3      v <= bound with v-1 and v+1 both prime; l = 1,
//           k <= min(bound, 20); raw search over m <= 200 must be empty.
//   T4      pairs m <= bound with n % 3 != 0 and m % 3 != n % 3; the set of
//           (l, d) <= 10000 solving l(3m^2+n^2+2mn) = d(2mn)(m^2-n^2) must
//           equal the closed family {t(2mn)(m^2-n^2), t(3m^2+n^2+2mn)}.
//   T5      v <= bound, k <= 2*bound, l <= 12, gcd(k,l) = 1; classify_345
//           must agree with the direct property check on (3,4,5) and
//           reproduce each group's offsets and steps.
constexpr i64 kAuxKCap = 20;
constexpr i64 kRawSearchM = 50;
constexpr i64 kRawSearchMWide = 200;
constexpr i64 kT4Cap = 10000;

constexpr i64 kDeadlineStride = 1024;

// All sweeps iterate their grids in ascending order and are single-threaded,
// so reports are deterministic.
class Sweep {
 public:
  Sweep(std::string claim_id, i64 bound, Deadline deadline) : deadline_(deadline) {
    rep_.claim_id = std::move(claim_id);
    rep_.bound = bound;
  }

  bool expired() {
    if (rep_.partial) return true;
    if (!deadline_) return false;
    if (++probe_ % kDeadlineStride != 0) return false;
    if (std::chrono::steady_clock::now() < *deadline_) return false;
    rep_.partial = true;
    return true;
  }

  void add_case() { ++rep_.cases_checked; }

  void add_counterexample(std::vector<i64> tuple) {
    ++rep_.counterexample_count;
    if (static_cast<i64>(rep_.counterexamples.size()) < SweepReport::kMaxReported)
      rep_.counterexamples.push_back(std::move(tuple));
  }

  SweepReport take() { return std::move(rep_); }
  bool partial() const { return rep_.partial; }

 private:
  SweepReport rep_;
  Deadline deadline_;
  i64 probe_ = 0;
};

SweepReport euclid_sweep(const char* claim_id, i64 bound, bool require_coprime,
                         Deadline deadline) {
  Sweep sw(claim_id, bound, deadline);
  for (i64 alpha = 1; alpha <= bound && !sw.partial(); ++alpha) {
    for (i64 beta = 1; beta <= bound; ++beta) {
      if (sw.expired()) break;
      if (require_coprime && std::gcd(alpha, beta) != 1) continue;
      for (i64 gamma = 1; gamma <= bound; ++gamma) {
        if ((beta * gamma) % alpha != 0) continue;
        sw.add_case();
        if (gamma % alpha != 0) sw.add_counterexample({alpha, beta, gamma});
      }
    }
  }
  return sw.take();
}

void add_record_counterexample(Sweep& sw, std::vector<i64> prefix, const SolutionRecord& rec) {
  prefix.push_back(rec.generator.m);
  prefix.push_back(rec.generator.n);
  prefix.push_back(rec.generator.d);
  sw.add_counterexample(std::move(prefix));
}

SweepReport t2i(i64 bound, Deadline deadline) {
  Sweep sw("T2i", bound, deadline);
  const i64 k_cap = std::min(bound, kAuxKCap);
  for (i64 v = 1; v <= bound && !sw.partial(); ++v) {
    for (i64 k = 1; k <= k_cap; ++k) {
      if (sw.expired()) break;
      const ReciprocalSpec s(v, k, 1);
      for (const SolutionRecord& rec : find_triples(s, kRawSearchM, false)) {
        sw.add_case();
        if (!divisibility_condition_l1(rec.generator.m, rec.generator.n, v))
          add_record_counterexample(sw, {v, k}, rec);
      }
    }
  }
  return sw.take();
}

SweepReport t2ii(i64 bound, Deadline deadline) {
  Sweep sw("T2ii", bound, deadline);
  for (i64 k = 1; k <= bound; ++k) {
    if (sw.expired()) break;
    sw.add_case();
    const ReciprocalSpec s(2, k, 1);
    for (const SolutionRecord& rec : find_triples(s, kRawSearchMWide, false))
      add_record_counterexample(sw, {k}, rec);
  }
  return sw.take();
}

SweepReport t2iii(i64 bound, Deadline deadline) {
  Sweep sw("T2iii", bound, deadline);
  const ReciprocalSpec s(1, 1, 1);
  const Generator expected{1, 2, 1};
  for (i64 m = 2; m <= bound && !sw.partial(); ++m) {
    for (i64 n = 1; n < m; ++n) {
      if (sw.expired()) break;
      if (!is_valid_generator_pair(m, n)) continue;
      sw.add_case();
      const auto d = solve_d(m, n, s);
      if (!d) continue;
      if (!(Generator{*d, m, n} == expected)) sw.add_counterexample({m, n, *d});
    }
  }
  // The known solution itself must be found.
  if (!sw.partial() && !key_equation_holds(expected, s))
    sw.add_counterexample({expected.m, expected.n, expected.d});
  return sw.take();
}

SweepReport t2iv(i64 bound, Deadline deadline) {
  Sweep sw("T2iv", bound, deadline);
  for (i64 k = 2; k <= bound && !sw.partial(); ++k) {
    for (i64 l = 1; l <= bound; ++l) {
      if (sw.expired()) break;
      if (std::gcd(k, l) != 1) continue;
      sw.add_case();
      const ReciprocalSpec s(1, k, l);
      for (const SolutionRecord& rec : find_triples(s, kRawSearchM, false))
        add_record_counterexample(sw, {k, l}, rec);
    }
  }
  return sw.take();
}

SweepReport t2v(i64 bound, Deadline deadline) {
  Sweep sw("T2v", bound, deadline);
  const i64 k_cap = std::min(bound, kAuxKCap);
  for (i64 v = 2; v <= bound && !sw.partial(); v += 2) {
    for (i64 l = 1; l <= bound; l += 2) {
      if (sw.partial()) break;
      for (i64 k = 1; k <= k_cap; ++k) {
        if (sw.expired()) break;
        if (std::gcd(k, l) != 1) continue;
        sw.add_case();
        const ReciprocalSpec s(v, k, l);
        for (const SolutionRecord& rec : find_triples(s, kRawSearchM, false))
          add_record_counterexample(sw, {v, k, l}, rec);
      }
    }
  }
  return sw.take();
}

SweepReport t3(i64 bound, Deadline deadline) {
  Sweep sw("T3", bound, deadline);
  const i64 k_cap = std::min(bound, kAuxKCap);
  for (i64 v = 2; v <= bound && !sw.partial(); ++v) {
    if (!is_prime(v - 1) || !is_prime(v + 1)) continue;
    for (i64 k = 1; k <= k_cap; ++k) {
      if (sw.expired()) break;
      sw.add_case();
      const ReciprocalSpec s(v, k, 1);
      for (const SolutionRecord& rec : find_triples(s, kRawSearchMWide, false))
        add_record_counterexample(sw, {v, k}, rec);
    }
  }
  return sw.take();
}

// All (l, d) within cap solving l * lhs_unit = d * rhs_unit, by scanning l.
std::set<std::pair<i64, i64>> scaled_solutions_by_scan(i64 lhs_unit, i64 rhs_unit, i64 cap) {
  std::set<std::pair<i64, i64>> out;
  for (i64 l = 1; l <= cap; ++l) {
    const i64 num = checked_mul(l, lhs_unit);
    if (num % rhs_unit != 0) continue;
    const i64 d = num / rhs_unit;
    if (d >= 1 && d <= cap) out.insert({l, d});
  }
  return out;
}

SweepReport t4(i64 bound, Deadline deadline) {
  Sweep sw("T4", bound, deadline);
  for (i64 m = 2; m <= bound && !sw.partial(); ++m) {
    for (i64 n = 1; n < m; ++n) {
      if (sw.expired()) break;
      if (!is_valid_generator_pair(m, n)) continue;
      if (n % 3 == 0 || (m - n) % 3 == 0) continue;
      sw.add_case();
      const i64 mm = m * m, nn = n * n;
      const i64 lhs_unit = 3 * mm + nn + 2 * m * n;
      const i64 rhs_unit = 2 * m * n * (mm - nn);
      const auto scanned = scaled_solutions_by_scan(lhs_unit, rhs_unit, kT4Cap);
      std::set<std::pair<i64, i64>> family;
      for (i64 t = 1;; ++t) {
        const ScaledSolution sol = family_v2_k1(m, n, t);
        if (sol.l > kT4Cap || sol.d > kT4Cap) break;
        family.insert({sol.l, sol.d});
      }
      for (const auto& [l, d] : scanned)
        if (!family.count({l, d})) sw.add_counterexample({m, n, l, d});
      for (const auto& [l, d] : family)
        if (!scanned.count({l, d})) sw.add_counterexample({m, n, l, d});
    }
  }
  return sw.take();
}

SweepReport t5(i64 bound, Deadline deadline) {
  Sweep sw("T5", bound, deadline);
  const Triple t345{3, 4, 5};
  for (i64 v = 1; v <= bound && !sw.partial(); ++v) {
    for (i64 k = 1; k <= 2 * bound; ++k) {
      if (sw.expired()) break;
      for (i64 l = 1; l <= 12; ++l) {
        if (std::gcd(k, l) != 1) continue;
        sw.add_case();
        const ReciprocalSpec s(v, k, l);
        const auto cls = classify_345(s);
        if (cls.has_value() != has_property(t345, s)) {
          sw.add_counterexample({v, k, l});
          continue;
        }
        if (!cls) continue;
        const Group345& g = groups_345()[static_cast<size_t>(cls->group_id - 1)];
        const bool reproduces = g.l == l && v == g.v_offset + g.v_step * cls->t &&
                                k == g.k_offset + g.k_step * cls->t && cls->t >= 0;
        if (!reproduces) sw.add_counterexample({v, k, l});
      }
    }
  }
  return sw.take();
}

}  // namespace

i64 lemma2_gcd(i64 q, i64 r) {
  if (q < 1 || r <= q) throw std::domain_error("lemma2_gcd: requires r > q >= 1");
  const i64 qq = checked_mul(q, q);
  const i64 rr = checked_mul(r, r);
  const i64 two_rq = checked_mul(2, checked_mul(r, q));
  const i64 lhs = checked_add(checked_add(checked_mul(3, rr), qq), two_rq);
  const i64 rhs = checked_mul(two_rq, checked_sub(rr, qq));
  return gcd(lhs, rhs);
}

SweepReport verify_lemma2(i64 bound, Deadline deadline) {
  Sweep sw("lemma2", bound, deadline);
  for (i64 q = 1; q < bound && !sw.partial(); ++q) {
    if (q % 3 == 0) continue;
    for (i64 r = q + 1; r <= bound; ++r) {
      if (sw.expired()) break;
      if ((q + r) % 2 != 1) continue;
      if (std::gcd(q, r) != 1) continue;
      if ((r - q) % 3 == 0) continue;
      sw.add_case();
      if (lemma2_gcd(q, r) != 1) sw.add_counterexample({q, r});
    }
  }
  return sw.take();
}

SweepReport verify_euclid_lemma(i64 bound, Deadline deadline) {
  return euclid_sweep("lemma1", bound, true, deadline);
}

SweepReport verify_euclid_lemma_unfiltered(i64 bound, Deadline deadline) {
  return euclid_sweep("lemma1-unfiltered", bound, false, deadline);
}

SweepReport verify_t4_inflated_d(i64 bound, Deadline deadline) {
  Sweep sw("T4-inflated-d", bound, deadline);
  for (i64 m = 2; m <= bound && !sw.partial(); ++m) {
    for (i64 n = 1; n < m; ++n) {
      if (sw.expired()) break;
      if (!is_valid_generator_pair(m, n)) continue;
      if (n % 3 == 0 || (m - n) % 3 == 0) continue;
      const i64 mm = m * m, nn = n * n;
      const i64 lhs_unit = 3 * mm + nn + 2 * m * n;
      const i64 rhs_unit = 2 * m * n * (mm - nn);
      for (i64 t = 1;; ++t) {
        const i64 l = checked_mul(t, rhs_unit);
        if (l > kT4Cap) break;
        sw.add_case();
        // Variant d carries a spurious rhs_unit factor.
        const i64 d_bad = checked_mul(l, lhs_unit);
        if (checked_mul(l, lhs_unit) != checked_mul(d_bad, rhs_unit))
          sw.add_counterexample({m, n, t});
      }
    }
  }
  return sw.take();
}

SweepReport verify_v1_family_dropped_factor(i64 bound, Deadline deadline) {
  Sweep sw("v1-family-dropped-factor", bound, deadline);
  for (i64 l = 1; l <= bound; ++l) {
    if (sw.expired()) break;
    sw.add_case();
    const ReciprocalSpec s(1, 1, l);
    std::set<std::vector<i64>> raw;
    for (const SolutionRecord& rec : find_triples(s, kRawSearchM, false))
      raw.insert({rec.generator.m, rec.generator.n, rec.generator.d});
    // Variant rule: d (m - n) = l, the factor n dropped.
    std::set<std::vector<i64>> variant;
    for (i64 m = 2; m <= kRawSearchM; ++m)
      for (i64 n = 1; n < m; ++n) {
        if (!is_valid_generator_pair(m, n)) continue;
        if (l % (m - n) != 0) continue;
        variant.insert({m, n, l / (m - n)});
      }
    for (const auto& g : variant)
      if (!raw.count(g)) sw.add_counterexample({l, g[0], g[1], g[2]});
    for (const auto& g : raw)
      if (!variant.count(g)) sw.add_counterexample({l, g[0], g[1], g[2]});
  }
  return sw.take();
}

SweepReport verify_theorem(const std::string& claim_id, i64 bound, Deadline deadline) {
  if (bound < 1) throw std::domain_error("verify_theorem: bound must be positive");
  if (claim_id == "T2i") return t2i(bound, deadline);
  if (claim_id == "T2ii") return t2ii(bound, deadline);
  if (claim_id == "T2iii") return t2iii(bound, deadline);
  if (claim_id == "T2iv") return t2iv(bound, deadline);
  if (claim_id == "T2v") return t2v(bound, deadline);
  if (claim_id == "T3") return t3(bound, deadline);
  if (claim_id == "T4") return t4(bound, deadline);
  if (claim_id == "T5") return t5(bound, deadline);
  throw std::invalid_argument("unknown claim: " + claim_id);
}

const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> claims = {
      "lemma1", "lemma2", "T2i", "T2ii", "T2iii", "T2iv", "T2v", "T3", "T4", "T5"};
  return claims;
}

SweepReport run_claim(const std::string& claim_id, i64 bound, Deadline deadline) {
  if (bound < 1) throw std::domain_error("run_claim: bound must be positive");
  if (claim_id == "lemma1") return verify_euclid_lemma(bound, deadline);
  if (claim_id == "lemma2") return verify_lemma2(bound, deadline);
  return verify_theorem(claim_id, bound, deadline);
}

}  // namespace recip
