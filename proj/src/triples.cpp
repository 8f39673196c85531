#include "recip/triples.hpp"

#include <numeric>

namespace recip {

ReciprocalSpec::ReciprocalSpec(i64 v, i64 k, i64 l) : v_(v), k_(k), l_(l) {
  if (v < 1 || k < 1 || l < 1)
    throw std::domain_error("ReciprocalSpec: v, k, l must be positive");
  if (std::gcd(k, l) != 1)
    throw std::domain_error("ReciprocalSpec: k and l must be coprime");
}

bool is_valid_generator_pair(i64 m, i64 n) {
  return n >= 1 && m > n && std::gcd(m, n) == 1 && (m + n) % 2 == 1;
}

bool is_valid_generator(const Generator& g) {
  return g.d >= 1 && is_valid_generator_pair(g.m, g.n);
}

bool is_pythagorean(const Triple& t) {
  if (t.a < 1 || t.b < 1 || t.c < 1) return false;
  return checked_add(checked_mul(t.a, t.a), checked_mul(t.b, t.b)) ==
         checked_mul(t.c, t.c);
}

Triple triple_from_generator(const Generator& g) {
  if (!is_valid_generator(g))
    throw std::domain_error("triple_from_generator: invalid generator");
  const i64 mm = checked_mul(g.m, g.m);
  const i64 nn = checked_mul(g.n, g.n);
  return Triple{
      checked_mul(g.d, checked_sub(mm, nn)),
      checked_mul(g.d, checked_mul(2, checked_mul(g.m, g.n))),
      checked_mul(g.d, checked_add(mm, nn)),
  };
}

Generator generator_from_triple(const Triple& t) {
  if (!is_pythagorean(t))
    throw std::domain_error("generator_from_triple: not a Pythagorean triple");
  const i64 g0 = std::gcd(std::gcd(t.a, t.b), t.c);
  const i64 a0 = t.a / g0;
  const i64 b0 = t.b / g0;
  const i64 c0 = t.c / g0;
  // In the primitive part exactly one leg is even; that leg is 2mn.
  const i64 even_leg = (a0 % 2 == 0) ? a0 : b0;
  for (i64 m = 2; checked_mul(m, m) <= c0; ++m) {
    if (even_leg % (2 * m) != 0) continue;
    const i64 n = even_leg / (2 * m);
    if (n < 1 || n >= m) continue;
    if (checked_add(checked_mul(m, m), checked_mul(n, n)) != c0) continue;
    if (!is_valid_generator_pair(m, n)) continue;
    return Generator{g0, m, n};
  }
  // Unreachable for Pythagorean input: the parametrization is complete.
  throw std::domain_error("generator_from_triple: no parametrization found");
}

std::vector<Generator> enumerate_generators(i64 max_c) {
  std::vector<Generator> out;
  if (max_c < 5) return out;
  const i64 m_hi = isqrt(max_c - 1);
  for (i64 m = 2; m <= m_hi; ++m) {
    for (i64 n = 1; n < m; ++n) {
      const i64 base = m * m + n * n;
      if (base > max_c) break;  // increasing in n
      if (!is_valid_generator_pair(m, n)) continue;
      const i64 d_max = max_c / base;
      for (i64 d = 1; d <= d_max; ++d) out.push_back({d, m, n});
    }
  }
  return out;
}

Rational altitude(const Triple& t) {
  if (!is_pythagorean(t))
    throw std::domain_error("altitude: not a Pythagorean triple");
  return Rational(checked_mul(t.a, t.b), t.c);
}

bool has_property(const Triple& t, const ReciprocalSpec& s) {
  if (!is_pythagorean(t))
    throw std::domain_error("has_property: not a Pythagorean triple");
  const i64 lhs =
      checked_mul(s.l(), checked_add(checked_add(t.a, t.b), checked_mul(s.v(), t.c)));
  const i64 rhs = checked_mul(s.k(), checked_mul(t.a, t.b));
  return lhs == rhs;
}

}  // namespace recip
