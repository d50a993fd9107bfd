#pragma once

// Maximal ideals of R(T) = Q[N] represented by evaluation points whose
// coordinates are roots of unity times positive rationals. A point p sends
// the character n to prod_i p_i^{n_i}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reprings/coefficient.hpp"
#include "reprings/laurent.hpp"
#include "reprings/lattice.hpp"
#include "reprings/root_datum.hpp"

namespace reprings {

// zeta_m^a * prod p^e, with 0 <= a < m, gcd(a, m) = 1 (or a = 0, m = 1)
// and no zero exponents.
struct EvalCoordinate {
  std::int64_t a = 0;
  std::uint64_t m = 1;
  std::map<std::uint64_t, std::int64_t> primes;

  Rational rational_part() const;
  Coefficient value() const;

  // Canonical text: "zeta(M)^a*p^e*...", "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const EvalCoordinate&, const EvalCoordinate&) = default;
};

// Accepts "zeta(M)^a", "zeta(M)", positive reduced fractions "p/q",
// integers and prime powers "p^e", joined by '*'. Throws InputError on
// negative, zero or non-reduced input.
EvalCoordinate parse_coordinate(const std::string& text);

struct EvalPoint {
  std::vector<EvalCoordinate> coords;

  std::size_t rank() const { return coords.size(); }
  // lcm of the torsion orders
  std::uint64_t order() const;
  std::vector<std::string> to_strings() const;

  static EvalPoint identity(std::size_t rank);
  // Coordinates from rational prime exponents: p(n) = prod_q q^{<n, v_q>}.
  static EvalPoint from_cocharacters(const std::map<std::uint64_t, Weight>& exponents,
                                     std::size_t rank);

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

EvalPoint parse_point(const std::vector<std::string>& coordinates);
// Comma-separated coordinate literals.
EvalPoint parse_point_list(const std::string& text);

EvalPoint inverse_point(const EvalPoint& p);

struct MaxIdealDesc {
  EvalPoint point;
  std::uint64_t order = 1;
};
MaxIdealDesc make_ideal(const EvalPoint& p);

struct SupportDesc {
  Sublattice kernel_lattice;
  FinAbGroup quotient;
  bool connected = false;
};

// Value of the character x^n at p.
Coefficient evaluate_char(const EvalPoint& p, const Exponent& n);
// Evaluates f by raising each coordinate value to the exponent.
Coefficient evaluate_poly(const EvalPoint& p, const LaurentPoly& f);

// Kernel {n : p(n) = 1}. modulus (0 = order()) must be a multiple of the
// point's order; it only changes the auxiliary congruence column.
SupportDesc support(const EvalPoint& p, std::uint64_t modulus = 0);

// Same rational parts and Galois-conjugate torsion parts.
bool ideal_equal(const MaxIdealDesc& p, const MaxIdealDesc& q);
bool ideal_equal(const EvalPoint& p, const EvalPoint& q);

// (w.p)(n) = p(w^{-1} n).
EvalPoint weyl_translate(const WeylMatrix& w, const EvalPoint& p);

// Weyl orbit of p with Galois-equivalent points merged, p first.
std::vector<EvalPoint> fiber_over_rg(const RootDatum& d, const EvalPoint& p);
std::vector<EvalPoint> fiber_over_rg(const WeylGroup& w, const EvalPoint& p);

// Every orbit sum of height <= height_bound takes the same value on all points.
bool fiber_invariants_agree(const RootDatum& d, const std::vector<EvalPoint>& fiber,
                            std::int64_t height_bound);

struct StabilizerReport {
  std::vector<WeylMatrix> geometric;
  std::vector<WeylMatrix> ideal;
  LeviDatum levi;
  std::size_t weyl_order = 0;
  bool all_equal = false;
};

// Throws InputError if the support of p is disconnected.
StabilizerReport stabilizer_check(const RootDatum& d, const EvalPoint& p);

// Throws InputError unless the support is connected and contains every root.
bool unique_lift_check(const RootDatum& d, const EvalPoint& p);

}  // namespace reprings
