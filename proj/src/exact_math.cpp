#include "recip/exact_math.hpp"

#include <cmath>
#include <numeric>

namespace recip {

i64 gcd(i64 u, i64 w) {
  if (u == 0 && w == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return std::gcd(checked_abs(u), checked_abs(w));
}

i64 isqrt(i64 v) {
  if (v < 0) throw std::domain_error("isqrt of a negative value");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  // std::sqrt can be off by one in either direction near squares.
  while (r > 0 && r > v / r) --r;
  while ((r + 1) <= v / (r + 1)) ++r;
  return r;
}

BezoutCertificate extended_gcd(i64 a, i64 b) {
  if (a == 0 && b == 0) throw std::domain_error("extended_gcd(0, 0) is undefined");
  i64 old_r = checked_abs(a), r = checked_abs(b);
  i64 old_x = 1, x = 0;
  i64 old_y = 0, y = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    const i64 nr = old_r - q * r;
    const i64 nx = checked_sub(old_x, checked_mul(q, x));
    const i64 ny = checked_sub(old_y, checked_mul(q, y));
    old_r = r;
    r = nr;
    old_x = x;
    x = nx;
    old_y = y;
    y = ny;
  }
  return {old_r, a < 0 ? checked_neg(old_x) : old_x, b < 0 ? checked_neg(old_y) : old_y};
}

Rational::Rational(i64 num, i64 den) {
  if (den == 0) throw std::domain_error("Rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const i64 g = std::gcd(checked_abs(num), den);  // >= 1 since den >= 1
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& other) const {
  const i64 num =
      checked_add(checked_mul(num_, other.den_), checked_mul(other.num_, den_));
  const i64 den = checked_mul(den_, other.den_);
  return Rational(num, den);
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

i64 floor_mod(i64 a, i64 m) {  // m > 0, result in [0, m)
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool DiophantineFamily::contains(i64 x, i64 y) const {
  if (step_x != 0) {
    const i64 dx = checked_sub(x, x0);
    if (dx % step_x != 0) return false;
    const i64 t = dx / step_x;
    return y == checked_add(y0, checked_mul(t, step_y));
  }
  if (x != x0) return false;
  if (step_y == 0) return y == y0;
  return checked_sub(y, y0) % step_y == 0;
}

std::optional<DiophantineFamily> solve_linear_diophantine(i64 a, i64 b, i64 c) {
  if (a == 0 && b == 0)
    throw std::domain_error("solve_linear_diophantine: A and B are both zero");
  const BezoutCertificate eg = extended_gcd(a, b);
  if (c % eg.d != 0) return std::nullopt;
  const i64 scale = c / eg.d;
  i64 x0 = checked_mul(eg.x, scale);
  i64 y0 = checked_mul(eg.y, scale);
  const i64 step_x = b / eg.d;
  const i64 step_y = checked_neg(a / eg.d);
  if (step_x != 0) {
    // Slide along the family to the smallest x >= 1; makes the particular
    // solution reproducible instead of algorithm-dependent.
    const i64 s = checked_abs(step_x);
    const i64 x_min = checked_add(1, floor_mod(checked_sub(x0, 1), s));
    const i64 shift = checked_sub(x_min, x0) / step_x;
    y0 = checked_add(y0, checked_mul(shift, step_y));
    x0 = x_min;
  }
  return DiophantineFamily{x0, y0, step_x, step_y};
}

std::vector<PositiveSolution> enumerate_positive_solutions(const DiophantineFamily& family,
                                                           i64 max_t) {
  if (max_t < 0) throw std::domain_error("enumerate_positive_solutions: max_t must be >= 0");
  std::vector<PositiveSolution> out;
  for (i64 t = -max_t; t <= max_t; ++t) {
    const i64 x = checked_add(family.x0, checked_mul(t, family.step_x));
    const i64 y = checked_add(family.y0, checked_mul(t, family.step_y));
    if (x >= 1 && y >= 1) out.push_back({x, y, t});
  }
  return out;
}

}  // namespace recip
