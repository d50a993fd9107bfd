#pragma once

// Commutative polynomials over Q with a fixed monomial order and a plain
// Buchberger algorithm producing reduced Groebner bases.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reprings {

using Monomial = std::vector<std::int32_t>;

// Graded reverse lexicographic order, optionally refined into two blocks:
// the first `block` variables are compared first (grevlex within the block),
// which makes the order an elimination order for them.
struct MonomialOrder {
  std::size_t block = 0;

  // true when a > b
  bool greater(const Monomial& a, const Monomial& b) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Polynomial {
 public:
  struct Desc {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
  };
  // Largest monomial first.
  using TermMap = std::map<Monomial, mpq_class, Desc>;

  explicit Polynomial(std::size_t nvars = 0, MonomialOrder order = {})
      : nvars_(nvars), order_(order), terms_(Desc{order}) {}

  static Polynomial variable(std::size_t nvars, std::size_t i, MonomialOrder order = {});
  static Polynomial constant(std::size_t nvars, const mpq_class& c, MonomialOrder order = {});
  static Polynomial term(const Monomial& m, const mpq_class& c, MonomialOrder order = {});

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }
  std::int64_t total_degree() const;

  void add_term(const Monomial& m, const mpq_class& c);
  // Same polynomial re-sorted under another order.
  Polynomial with_order(MonomialOrder order) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Monomial& m, const mpq_class& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Terms in decreasing order, e.g. "y1^2 - 5/2*y1*u1 + 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  TermMap terms_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

inline constexpr std::size_t kDefaultGroebnerSteps = 200000;

struct GroebnerBasis {
  std::size_t nvars = 0;
  MonomialOrder order;
  // reduced, monic, sorted by leading monomial (ascending)
  std::vector<Polynomial> basis;

  bool is_unit_ideal() const;
  // Fully reduced normal form.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
};

// Reduced basis of the ideal generated by gens (all must share nvars and order).
// Throws ResourceError after max_steps S-polynomial reductions.
GroebnerBasis groebner(const std::vector<Polynomial>& gens, std::size_t nvars,
                       MonomialOrder order = {}, std::size_t max_steps = kDefaultGroebnerSteps);

// Monomials outside the leading-term ideal, increasing order. Throws
// InputError when the quotient is infinite dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

// Normal form of every S-polynomial is zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);

}  // namespace reprings
