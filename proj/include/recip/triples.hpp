#pragma once

#include <vector>

#include "recip/exact_math.hpp"

namespace recip {

/// (d, m, n) with m > n >= 1, gcd(m, n) = 1, m + n odd. Yields the triple
/// (d(m^2 - n^2), d(2mn), d(m^2 + n^2)); every Pythagorean triple arises from
/// exactly one generator after canonical leg ordering.
struct Generator {
  i64 d;
  i64 m;
  i64 n;
  bool operator==(const Generator&) const = default;
};

/// Canonical leg order: a is the d(m^2 - n^2) leg, b the d(2mn) leg.
struct Triple {
  i64 a;
  i64 b;
  i64 c;
  bool operator==(const Triple&) const = default;
};

/// (v, k, l), all positive, with gcd(k, l) = 1 enforced at construction.
/// Names the reciprocal condition 1/a + 1/b + v/h = k/l.
class ReciprocalSpec {
 public:
  ReciprocalSpec(i64 v, i64 k, i64 l);

  i64 v() const { return v_; }
  i64 k() const { return k_; }
  i64 l() const { return l_; }

  bool operator==(const ReciprocalSpec&) const = default;

 private:
  i64 v_;
  i64 k_;
  i64 l_;
};

bool is_valid_generator_pair(i64 m, i64 n);
bool is_valid_generator(const Generator& g);
bool is_pythagorean(const Triple& t);

Triple triple_from_generator(const Generator& g);

/// The unique generator reproducing t after canonical leg ordering.
/// Non-Pythagorean input is a domain error.
Generator generator_from_triple(const Triple& t);

/// All generators with hypotenuse d(m^2 + n^2) <= max_c, ordered (m, n, d)
/// lexicographic; empty when max_c < 5.
std::vector<Generator> enumerate_generators(i64 max_c);

/// Altitude to the hypotenuse, ab/c, exact and reduced.
Rational altitude(const Triple& t);

/// Decides 1/a + 1/b + v/h = k/l via the equivalent integer identity
/// l(a + b + v c) = k a b. Symmetric in a and b.
bool has_property(const Triple& t, const ReciprocalSpec& s);

}  // namespace recip
