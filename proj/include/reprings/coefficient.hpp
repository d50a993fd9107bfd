#pragma once

// Exact scalars: rationals and elements of cyclotomic fields Q(zeta_M),
// stored as coordinates over 1, zeta_M, ..., zeta_M^(phi(M)-1) reduced
// modulo the M-th cyclotomic polynomial. Order 1 is the rational case.
// Mixed-order arithmetic promotes both operands to the lcm of the orders.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reprings {

using Rational = mpq_class;

std::uint64_t euler_phi(std::uint64_t m);

// Integer coefficients, constant term first. Built bottom-up by dividing
// x^M - 1 by the cyclotomic polynomials of the proper divisors.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t m);

class Coefficient {
 public:
  Coefficient() : order_(1), coords_(1) {}
  Coefficient(long v) : order_(1), coords_{Rational(v)} {}  // NOLINT: implicit by design of scalars
  Coefficient(const Rational& q) : order_(1), coords_{q} {}  // NOLINT

  // zeta_M^k for any integer k.
  static Coefficient zeta(std::uint64_t order, std::int64_t power);
  static Coefficient from_coords(std::uint64_t order, std::vector<Rational> coords);

  std::uint64_t order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InputError if the value is not rational.
  Rational rational_value() const;

  // The same value expressed in Q(zeta_target); target must be a multiple of order().
  Coefficient promote(std::uint64_t target) const;

  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o) { return *this *= o.inverse(); }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  // Rationals as "p/q" (or "p"); otherwise "(c0 + c1*zeta(M)^1 + ...)" with zero terms omitted.
  std::string to_string() const;

 private:
  std::uint64_t order_;
  std::vector<Rational> coords_;
};

}  // namespace reprings
