#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recip/checked.hpp"

namespace recip {

/// Largest positive common divisor; gcd(u, 0) = |u|. gcd(0, 0) is a domain error.
i64 gcd(i64 u, i64 w);

/// floor(sqrt(v)) for v >= 0.
i64 isqrt(i64 v);

/// d = gcd(a, b) > 0 together with a certificate a*x + b*y = d.
struct BezoutCertificate {
  i64 d;
  i64 x;
  i64 y;
};

BezoutCertificate extended_gcd(i64 a, i64 b);

/// Exact fraction, always stored reduced: den >= 1 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(i64 num, i64 den);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  Rational operator+(const Rational& other) const;
  bool operator==(const Rational& other) const = default;

  std::string str() const;  // "num/den"

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

/// All integer solutions of A x + B y = C: (x0 + t*step_x, y0 + t*step_y)
/// with step_x = B/D and step_y = -A/D, D = gcd(A, B).
struct DiophantineFamily {
  i64 x0;
  i64 y0;
  i64 step_x;
  i64 step_y;

  bool contains(i64 x, i64 y) const;
  bool operator==(const DiophantineFamily&) const = default;
};

/// nullopt exactly when gcd(A, B) does not divide C. When some member has
/// x >= 1, (x0, y0) is slid to the smallest such x; otherwise it is the
/// extended-gcd solution scaled by C/D. Deterministic either way.
std::optional<DiophantineFamily> solve_linear_diophantine(i64 a, i64 b, i64 c);

struct PositiveSolution {
  i64 x;
  i64 y;
  i64 t;
  bool operator==(const PositiveSolution&) const = default;
};

/// Members with x >= 1 and y >= 1 reachable with |t| <= max_t, ordered by t.
std::vector<PositiveSolution> enumerate_positive_solutions(const DiophantineFamily& family,
                                                           i64 max_t);

}  // namespace recip
