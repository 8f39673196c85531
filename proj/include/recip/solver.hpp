#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "recip/triples.hpp"

namespace recip {

struct SolutionRecord {
  Generator generator;
  Triple triple;
  ReciprocalSpec spec;
  bool operator==(const SolutionRecord&) const = default;
};

/// The property restated over generator coordinates:
/// l[(v+1)m^2 + (v-1)n^2 + 2mn] = d k (2mn)(m^2 - n^2).
bool key_equation_holds(const Generator& g, const ReciprocalSpec& s);

/// The unique scale d completing (m, n) to a solution, if any: defined when
/// l[(v+1)m^2 + (v-1)n^2 + 2mn] is a positive multiple of k(2mn)(m^2 - n^2).
std::optional<i64> solve_d(i64 m, i64 n, const ReciprocalSpec& s);

/// Complete bounded search: every solution with m <= max_m, ordered (m, n, d).
/// Obstruction pre-filters are sound pruning only; disabling them yields
/// identical output.
std::vector<SolutionRecord> find_triples(const ReciprocalSpec& s, i64 max_m,
                                         bool use_pruning = true);

/// Necessary for any solution with l = 1: m | v-1 and n | v+1.
bool divisibility_condition_l1(i64 m, i64 n, i64 v);

/// True when no solution can exist because v is even and l is odd.
bool parity_obstruction(const ReciprocalSpec& s);

/// True when no solution can exist because l = 1 and v-1, v+1 are both prime.
bool twin_prime_obstruction(i64 v, i64 l);

/// Deterministic trial division.
bool is_prime(i64 n);

/// 4dk(dk+1) - 2 and its residue mod 4. The residue is always 2, so the value
/// is never a perfect square.
struct DiscriminantWitness {
  i64 value;
  i64 residue_mod_4;
};
DiscriminantWitness discriminant_witness(i64 d, i64 k);

/// Closed form for v = 1: empty for k >= 2 (the identity forces k | l against
/// gcd(k, l) = 1); for k = 1 exactly the generators with d n (m - n) = l.
/// Matches find_triples on every v = 1 spec.
std::vector<SolutionRecord> family_v1(const ReciprocalSpec& s, i64 max_m);

/// Closed form for v = 2, k = 1 on pairs with n % 3 != 0 and m % 3 != n % 3:
/// l = t(2mn)(m^2 - n^2), d = t(3m^2 + n^2 + 2mn), t >= 1.
struct ScaledSolution {
  i64 l;
  i64 d;
  bool operator==(const ScaledSolution&) const = default;
};
ScaledSolution family_v2_k1(i64 m, i64 n, i64 t);

/// One of the six parametric families of specs satisfied by (3, 4, 5):
/// for every t >= 0, l(7 + 5(v_offset + v_step t)) = 12(k_offset + k_step t).
struct Group345 {
  int id;  // 1..6
  i64 v_offset;
  i64 v_step;
  i64 k_offset;
  i64 k_step;
  i64 l;
};

/// The families as printed, including members with gcd(k, l) > 1.
const std::array<Group345, 6>& groups_345();

struct GroupMember {
  int group_id;
  i64 t;
  i64 v;
  i64 k;
  i64 l;
  bool coprime;  // gcd(k, l) == 1
  bool operator==(const GroupMember&) const = default;
};

/// Members of all six groups for t <= t_max, group-major then by t.
/// Non-coprime members are dropped unless include_noncoprime is set.
std::vector<GroupMember> group_members(i64 t_max, bool include_noncoprime);

struct Classification {
  int group_id;
  i64 t;
  bool operator==(const Classification&) const = default;
};

/// Non-null exactly when (3, 4, 5) has the property for s, i.e. l | 12 and
/// l(7 + 5v) = 12k.
std::optional<Classification> classify_345(const ReciprocalSpec& s);

/// Human-readable reason when a proven obstruction rules out all solutions.
std::optional<std::string> obstruction_note(const ReciprocalSpec& s);

}  // namespace recip
