#pragma once

// Representation rings: R(T) = Q[X^*(T)] as Laurent polynomials, the
// Weyl-invariant subring, orbit sums, Weyl characters and the probes that
// exercise polynomiality and finiteness of R(T) over R(G).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reprings/laurent.hpp"
#include "reprings/rational_span.hpp"
#include "reprings/root_datum.hpp"

namespace reprings {

class DominantWeight {
 public:
  // Throws InputError unless <v, coroot> >= 0 for every simple coroot.
  static DominantWeight make(const RootDatum& d, Weight v);
  const Weight& coordinates() const { return v_; }

 private:
  explicit DominantWeight(Weight v) : v_(std::move(v)) {}
  Weight v_;
};

struct InvariantElement {
  LaurentPoly poly;
  bool certified_invariant = false;
};

bool is_weyl_invariant(const RootDatum& d, const LaurentPoly& f);

// Sum of x^mu over the Weyl orbit of lambda.
InvariantElement orbit_sum(const RootDatum& d, const DominantWeight& lambda);
InvariantElement orbit_sum(const WeylGroup& w, const DominantWeight& lambda);

// Irreducible character A_{lambda+rho} / A_rho, computed with doubled exponents.
InvariantElement weyl_character(const RootDatum& d, const DominantWeight& lambda);
InvariantElement weyl_character(const RootDatum& d, const WeylGroup& w, const DominantWeight& lambda);

// Dominant weights with max |coordinate| <= bound, lexicographic order.
std::vector<Weight> dominant_weights(const RootDatum& d, std::int64_t bound);

struct InvariantsProbe {
  std::vector<Weight> weights;
  bool random_invariant_spanned = false;
};
InvariantsProbe invariants_basis_probe(const RootDatum& d, std::int64_t height_bound,
                                       unsigned seed = 20240611);

// Restricted to rational coefficients; throws InputError otherwise.
RationalSpan<Exponent>::Vec to_rational_vector(const LaurentPoly& f);

struct Char2Report {
  std::vector<Weight> fundamental_weights;
  // Exponent vectors a with sum(a) <= bound, one per monomial prod chi_i^a_i.
  std::vector<std::vector<std::int64_t>> monomials;
  // Dominant weights whose fundamental-weight coordinates sum to <= bound.
  std::vector<Weight> orbit_weights;
  bool independent = false;
  bool orbit_sums_expressible = false;
  // transition[i][j]: coefficient of the orbit sum of orbit_weights[j]
  // in the i-th monomial (columns restricted to orbit_weights).
  std::vector<std::vector<Rational>> transition;
  // Each monomial equals m_{lambda(a)} plus orbit sums strictly below it
  // in the dominance order.
  bool unitriangular = false;
};

// Requires a datum whose simple coroots form a basis of X_*(T).
Char2Report char2_probe(const RootDatum& d, std::int64_t degree_bound);

// True iff mu <= lambda: lambda - mu is a nonnegative integer combination of simple roots.
bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda);

// Whether every monomial of height <= height_bound is an R(G)-combination of
// the generators, searching invariants of height <= 2 * (height_bound + max generator height).
bool finiteness_probe(const RootDatum& d, const std::vector<LaurentPoly>& module_gens,
                      std::int64_t height_bound);

// All integer vectors of the given length with max |coordinate| <= bound.
std::vector<Exponent> box_exponents(std::size_t rank, std::int64_t bound);

}  // namespace reprings
