#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "recip/triples.hpp"

using namespace recip;

namespace {

// Evaluates 1/a + 1/b + v/h against k/l with exact rationals; h = ab/c, so
// v/h = vc/(ab). Independent of the integer-identity route.
bool rational_route(const Triple& t, const ReciprocalSpec& s) {
  const Rational lhs = Rational(1, t.a) + Rational(1, t.b) +
                       Rational(checked_mul(s.v(), t.c), checked_mul(t.a, t.b));
  return lhs == Rational(s.k(), s.l());
}

// Brute-force scan for the generator of a triple, for small cases. Legs are
// compared unordered since generators emit the canonical order.
Generator brute_generator(const Triple& t, i64 m_cap, i64 d_cap) {
  for (i64 m = 2; m <= m_cap; ++m)
    for (i64 n = 1; n < m; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      for (i64 d = 1; d <= d_cap; ++d) {
        const Triple made = triple_from_generator({d, m, n});
        const bool same_legs = (made.a == t.a && made.b == t.b) ||
                               (made.a == t.b && made.b == t.a);
        if (same_legs && made.c == t.c) return Generator{d, m, n};
      }
    }
  throw std::runtime_error("brute_generator: not found");
}

ReciprocalSpec random_spec(std::mt19937_64& rng, i64 hi) {
  std::uniform_int_distribution<i64> dist(1, hi);
  for (;;) {
    const i64 v = dist(rng), k = dist(rng), l = dist(rng);
    if (std::gcd(k, l) == 1) return ReciprocalSpec(v, k, l);
  }
}

Generator random_generator(std::mt19937_64& rng, i64 m_hi, i64 d_hi) {
  std::uniform_int_distribution<i64> md(2, m_hi);
  std::uniform_int_distribution<i64> dd(1, d_hi);
  for (;;) {
    const i64 m = md(rng);
    std::uniform_int_distribution<i64> nd(1, m - 1);
    const i64 n = nd(rng);
    if (is_valid_generator_pair(m, n)) return Generator{dd(rng), m, n};
  }
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(ReciprocalSpec(1, 1, 1));
  CHECK_NOTHROW(ReciprocalSpec(2, 1, 12));
  CHECK_THROWS_AS(ReciprocalSpec(1, 2, 4), std::domain_error);
  CHECK_THROWS_AS(ReciprocalSpec(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(ReciprocalSpec(1, 1, 0), std::domain_error);
}

TEST_CASE("triple from generator") {
  CHECK(triple_from_generator({1, 2, 1}) == Triple{3, 4, 5});
  CHECK(triple_from_generator({2, 2, 1}) == Triple{6, 8, 10});
  CHECK(triple_from_generator({1, 3, 2}) == Triple{5, 12, 13});

  CHECK_THROWS_AS(triple_from_generator({1, 1, 1}), std::domain_error);  // m > n fails
  CHECK_THROWS_AS(triple_from_generator({1, 3, 1}), std::domain_error);  // same parity
  CHECK_THROWS_AS(triple_from_generator({1, 4, 2}), std::domain_error);  // gcd(m,n) > 1
  CHECK_THROWS_AS(triple_from_generator({0, 2, 1}), std::domain_error);  // d < 1
}

TEST_CASE("generator from triple") {
  CHECK(generator_from_triple({3, 4, 5}) == Generator{1, 2, 1});
  CHECK(generator_from_triple({6, 8, 10}) == Generator{2, 2, 1});
  // Swapped legs canonicalize to the same generator.
  CHECK(generator_from_triple({4, 3, 5}) == Generator{1, 2, 1});

  const Generator expected = brute_generator({20, 21, 29}, 6, 2);
  CHECK(expected == Generator{1, 5, 2});
  CHECK(generator_from_triple({20, 21, 29}) == expected);

  CHECK_THROWS_AS(generator_from_triple({3, 4, 6}), std::domain_error);
  CHECK_THROWS_AS(generator_from_triple({0, 4, 4}), std::domain_error);
}

TEST_CASE("generator enumeration") {
  const std::vector<Generator> at5 = enumerate_generators(5);
  REQUIRE(at5.size() == 1);
  CHECK(at5[0] == Generator{1, 2, 1});

  const std::vector<Generator> at13 = enumerate_generators(13);
  REQUIRE(at13.size() == 3);
  CHECK(at13[0] == Generator{1, 2, 1});
  CHECK(at13[1] == Generator{2, 2, 1});
  CHECK(at13[2] == Generator{1, 3, 2});

  CHECK(enumerate_generators(4).empty());
}

TEST_CASE("altitude") {
  CHECK(altitude({3, 4, 5}) == Rational(12, 5));
  CHECK(altitude({3, 4, 5}).str() == "12/5");
  CHECK(altitude({6, 8, 10}) == Rational(24, 5));
  CHECK(altitude({5, 12, 13}) == Rational(60, 13));
  CHECK_THROWS_AS(altitude({1, 2, 3}), std::domain_error);
}

TEST_CASE("has_property golden cases") {
  CHECK(has_property({3, 4, 5}, ReciprocalSpec(1, 1, 1)));
  // Exact rational evaluation gives 1/2, not 1.
  CHECK(rational_route({5, 12, 13}, ReciprocalSpec(1, 1, 1)) == false);
  CHECK(has_property({5, 12, 13}, ReciprocalSpec(1, 1, 1)) == false);
  // 1/5 + 1/12 + 13/60 = 1/2.
  CHECK(has_property({5, 12, 13}, ReciprocalSpec(1, 1, 2)));
  // 12*(51 + 68 + 2*85) = 3468 = 51*68.
  CHECK(12 * (51 + 68 + 2 * 85) == 51 * 68);
  CHECK(has_property({51, 68, 85}, ReciprocalSpec(2, 1, 12)));
  CHECK_THROWS_AS(has_property({3, 4, 6}, ReciprocalSpec(1, 1, 1)), std::domain_error);
}

TEST_CASE("round trip over the full small grid") {
  for (i64 m = 2; m <= 50; ++m)
    for (i64 n = 1; n < m; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      for (i64 d = 1; d <= 20; ++d) {
        const Generator g{d, m, n};
        REQUIRE(generator_from_triple(triple_from_generator(g)) == g);
      }
    }
}

TEST_CASE("enumeration is complete and duplicate-free up to c = 200") {
  // Independent oracle: direct scan of a^2 + b^2 = c^2 with a <= b.
  std::set<std::tuple<i64, i64, i64>> brute;
  for (i64 a = 1; a <= 200; ++a)
    for (i64 b = a; b <= 200; ++b) {
      const i64 cc = a * a + b * b;
      const i64 c = isqrt(cc);
      if (c <= 200 && c * c == cc) brute.insert({a, b, c});
    }

  std::set<std::tuple<i64, i64, i64>> enumerated;
  for (const Generator& g : enumerate_generators(200)) {
    const Triple t = triple_from_generator(g);
    const auto key = std::make_tuple(std::min(t.a, t.b), std::max(t.a, t.b), t.c);
    REQUIRE(enumerated.insert(key).second);  // no duplicates
  }
  REQUIRE(brute == enumerated);
}

TEST_CASE("integer identity agrees with rational evaluation") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 1000; ++i) {
    const Generator g = random_generator(rng, 30, 20);
    const Triple t = triple_from_generator(g);
    const ReciprocalSpec s = random_spec(rng, 12);
    REQUIRE(has_property(t, s) == rational_route(t, s));
  }
}

TEST_CASE("property is symmetric in the legs") {
  std::mt19937_64 rng(778);
  for (int i = 0; i < 300; ++i) {
    const Triple t = triple_from_generator(random_generator(rng, 25, 10));
    const Triple swapped{t.b, t.a, t.c};
    const ReciprocalSpec s = random_spec(rng, 10);
    REQUIRE(has_property(t, s) == has_property(swapped, s));
  }
}
