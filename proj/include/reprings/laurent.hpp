#pragma once

// Sparse multivariate Laurent polynomials Q(zeta)[x1^±1, ..., xr^±1],
// i.e. group algebras of Z^r over the exact coefficient fields.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reprings/coefficient.hpp"
#include "reprings/root_datum.hpp"

namespace reprings {

using Exponent = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Coefficient>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

  static LaurentPoly monomial(const Exponent& n, const Coefficient& c = Coefficient(1L));
  static LaurentPoly constant(std::size_t rank, const Coefficient& c);
  static LaurentPoly one(std::size_t rank) { return constant(rank, Coefficient(1L)); }

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of x^n, zero when absent.
  Coefficient coefficient(const Exponent& n) const;
  // Adds c * x^n, dropping the term if it cancels.
  void add_term(const Exponent& n, const Coefficient& c);

  // Lexicographically largest exponent; the polynomial must be nonzero.
  const Exponent& leading_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Coefficient& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Coefficient& c) { return a *= c; }
  friend LaurentPoly operator*(const Coefficient& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Terms in ascending lexicographic order of exponents joined by " + ",
  // each rendered "c*x1^a1*...*xr^ar"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "x") const;

 private:
  std::size_t rank_;
  TermMap terms_;
};

LaurentPoly monomial(const Exponent& n, const Coefficient& c = Coefficient(1L));

// Re-keys every term by w * n.
LaurentPoly weyl_act(const WeylMatrix& w, const LaurentPoly& f);

// Applies an integer linear map to the exponents: n -> m * n.
LaurentPoly transform_exponents(const IntMatrix& m, const LaurentPoly& f);

// q with q * den == num. Lexicographic leading-term cancellation; throws
// InputError if den does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Sum of the coefficients.
Coefficient augmentation(const LaurentPoly& f);

// Max absolute exponent coordinate over the support (0 for the zero polynomial).
std::int64_t height(const LaurentPoly& f);
std::int64_t height(const Exponent& n);

// Parses sums/differences/products of rationals, variables var1..varR with
// optional integer (possibly negative) powers, and parenthesized groups.
// Division is allowed by single-term polynomials. Throws InputError.
LaurentPoly parse_laurent(const std::string& text, std::size_t rank, const std::string& var = "x");

}  // namespace reprings
