#include "recip/solver.hpp"

#include <numeric>

namespace recip {

namespace {

// l[(v+1)m^2 + (v-1)n^2 + 2mn], the side of the key identity independent of d.
i64 key_lhs(i64 m, i64 n, const ReciprocalSpec& s) {
  const i64 mm = checked_mul(m, m);
  const i64 nn = checked_mul(n, n);
  const i64 poly = checked_add(
      checked_add(checked_mul(checked_add(s.v(), 1), mm), checked_mul(checked_sub(s.v(), 1), nn)),
      checked_mul(2, checked_mul(m, n)));
  return checked_mul(s.l(), poly);
}

// k(2mn)(m^2 - n^2), the per-unit-d side.
i64 key_rhs_unit(i64 m, i64 n, const ReciprocalSpec& s) {
  const i64 two_mn = checked_mul(2, checked_mul(m, n));
  const i64 diff = checked_sub(checked_mul(m, m), checked_mul(n, n));
  return checked_mul(s.k(), checked_mul(two_mn, diff));
}

}  // namespace

bool key_equation_holds(const Generator& g, const ReciprocalSpec& s) {
  if (!is_valid_generator(g))
    throw std::domain_error("key_equation_holds: invalid generator");
  return key_lhs(g.m, g.n, s) == checked_mul(g.d, key_rhs_unit(g.m, g.n, s));
}

std::optional<i64> solve_d(i64 m, i64 n, const ReciprocalSpec& s) {
  if (!is_valid_generator_pair(m, n))
    throw std::domain_error("solve_d: invalid (m, n) pair");
  const i64 lhs = key_lhs(m, n, s);       // > 0 for every valid input
  const i64 unit = key_rhs_unit(m, n, s); // > 0 since m > n >= 1
  if (lhs % unit != 0) return std::nullopt;
  return lhs / unit;
}

std::vector<SolutionRecord> find_triples(const ReciprocalSpec& s, i64 max_m, bool use_pruning) {
  std::vector<SolutionRecord> out;
  if (use_pruning) {
    if (parity_obstruction(s)) return out;
    if (twin_prime_obstruction(s.v(), s.l())) return out;
  }
  for (i64 m = 2; m <= max_m; ++m) {
    for (i64 n = 1; n < m; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      if (use_pruning && s.l() == 1 && !divisibility_condition_l1(m, n, s.v())) continue;
      if (const auto d = solve_d(m, n, s)) {
        const Generator g{*d, m, n};
        out.push_back({g, triple_from_generator(g), s});
      }
    }
  }
  return out;
}

bool divisibility_condition_l1(i64 m, i64 n, i64 v) {
  if (!is_valid_generator_pair(m, n))
    throw std::domain_error("divisibility_condition_l1: invalid (m, n) pair");
  if (v < 1) throw std::domain_error("divisibility_condition_l1: v must be positive");
  return (v - 1) % m == 0 && (v + 1) % n == 0;
}

bool parity_obstruction(const ReciprocalSpec& s) {
  return s.v() % 2 == 0 && s.l() % 2 == 1;
}

bool twin_prime_obstruction(i64 v, i64 l) {
  if (v < 1 || l < 1)
    throw std::domain_error("twin_prime_obstruction: v and l must be positive");
  return l == 1 && is_prime(v - 1) && is_prime(v + 1);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 i = 3; i <= n / i; i += 2)
    if (n % i == 0) return false;
  return true;
}

DiscriminantWitness discriminant_witness(i64 d, i64 k) {
  if (d < 1 || k < 1)
    throw std::domain_error("discriminant_witness: d and k must be positive");
  const i64 dk = checked_mul(d, k);
  const i64 value = checked_sub(checked_mul(4, checked_mul(dk, checked_add(dk, 1))), 2);
  return {value, value % 4};
}

std::vector<SolutionRecord> family_v1(const ReciprocalSpec& s, i64 max_m) {
  if (s.v() != 1) throw std::domain_error("family_v1: requires v = 1");
  std::vector<SolutionRecord> out;
  if (s.k() >= 2) return out;  // the identity forces k | l, impossible for coprime k >= 2
  for (i64 m = 2; m <= max_m; ++m) {
    for (i64 n = 1; n < m; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      const i64 unit = checked_mul(n, checked_sub(m, n));
      if (s.l() % unit != 0) continue;
      const Generator g{s.l() / unit, m, n};
      out.push_back({g, triple_from_generator(g), s});
    }
  }
  return out;
}

ScaledSolution family_v2_k1(i64 m, i64 n, i64 t) {
  if (!is_valid_generator_pair(m, n))
    throw std::domain_error("family_v2_k1: invalid (m, n) pair");
  if (n % 3 == 0 || (m - n) % 3 == 0)
    throw std::domain_error("family_v2_k1: requires n % 3 != 0 and m % 3 != n % 3");
  if (t < 1) throw std::domain_error("family_v2_k1: t must be positive");
  const i64 mm = checked_mul(m, m);
  const i64 nn = checked_mul(n, n);
  const i64 two_mn = checked_mul(2, checked_mul(m, n));
  const i64 l = checked_mul(t, checked_mul(two_mn, checked_sub(mm, nn)));
  const i64 d = checked_mul(t, checked_add(checked_add(checked_mul(3, mm), nn), two_mn));
  return {l, d};
}

const std::array<Group345, 6>& groups_345() {
  static const std::array<Group345, 6> groups = {{
      {1, 1, 12, 1, 5, 1},
      {2, 1, 6, 2, 5, 2},
      {3, 1, 4, 3, 5, 3},
      {4, 1, 3, 4, 5, 4},
      {5, 1, 2, 6, 5, 6},
      {6, 1, 1, 12, 5, 12},
  }};
  return groups;
}

std::vector<GroupMember> group_members(i64 t_max, bool include_noncoprime) {
  if (t_max < 0) throw std::domain_error("group_members: t_max must be >= 0");
  std::vector<GroupMember> out;
  for (const Group345& g : groups_345()) {
    for (i64 t = 0; t <= t_max; ++t) {
      const i64 v = checked_add(g.v_offset, checked_mul(g.v_step, t));
      const i64 k = checked_add(g.k_offset, checked_mul(g.k_step, t));
      const bool coprime = std::gcd(k, g.l) == 1;
      if (coprime || include_noncoprime) out.push_back({g.id, t, v, k, g.l, coprime});
    }
  }
  return out;
}

std::optional<Classification> classify_345(const ReciprocalSpec& s) {
  if (12 % s.l() != 0) return std::nullopt;
  const i64 lhs = checked_mul(s.l(), checked_add(7, checked_mul(5, s.v())));
  if (lhs != checked_mul(12, s.k())) return std::nullopt;
  const i64 step = 12 / s.l();
  // The identity forces v = 1 (mod step); kept as a guard.
  if ((s.v() - 1) % step != 0) return std::nullopt;
  const i64 t = (s.v() - 1) / step;
  for (const Group345& g : groups_345())
    if (g.l == s.l()) return Classification{g.id, t};
  return std::nullopt;
}

std::optional<std::string> obstruction_note(const ReciprocalSpec& s) {
  if (s.v() == 2 && s.l() == 1)
    return "R(2,k,1) impossible: a solution would need m | v-1 = 1, but m >= 2";
  if (parity_obstruction(s))
    return "R(v,k,l) with v even and l odd impossible: l(a+b+vc) = kab would "
           "equate an odd and an even integer";
  if (twin_prime_obstruction(s.v(), s.l()))
    return "R(" + std::to_string(s.v()) +
           ",k,1) impossible: v-1 and v+1 are both prime";
  if (s.v() == 1 && s.k() >= 2)
    return "R(1,k,l) with k >= 2 impossible: the identity forces k | l with "
           "gcd(k,l) = 1";
  return std::nullopt;
}

}  // namespace recip
