#pragma once

// Finite presentations of invariant rings, maximal ideals of presented rings,
// truncations R/m^j of their completions, and the point-level comparison of
// completions along R(G) -> R(Z).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reprings/groebner.hpp"
#include "reprings/laurent.hpp"
#include "reprings/root_datum.hpp"
#include "reprings/spectrum.hpp"

namespace reprings {

// Generators y_1..y_k mapping to generator_images in R(T). Relations are
// Laurent polynomials in the y variables (rank k); negative powers are only
// allowed for inverted generators. Each inverted generator y_i gets an extra
// variable u_i with u_i * y_i = 1, placed after the y variables.
struct Presentation {
  std::size_t num_gens = 0;
  std::vector<LaurentPoly> generator_images;
  std::vector<LaurentPoly> relations;
  std::vector<std::size_t> inverted_gens;  // 0-based

  std::size_t num_vars() const { return num_gens + inverted_gens.size(); }
  // "y1".."yk" then "u<i>" for each inverted generator
  std::vector<std::string> variable_names() const;
  // Throws InputError on inconsistent sizes or ranks.
  void check() const;
};

// A Laurent expression in the y variables as a polynomial in y and u.
Polynomial to_presented(const Presentation& p, const LaurentPoly& f, MonomialOrder order = {});

// Relations together with u_i * y_i - 1.
std::vector<Polynomial> base_ideal(const Presentation& p, MonomialOrder order = {});

// Image in R(T) of a polynomial in the presented variables. Inverted generators
// must map to single terms.
LaurentPoly substitute(const Presentation& p, const Polynomial& f);

struct PresentationReport {
  bool images_ok = false;         // every image is Weyl-invariant
  bool relations_vanish = false;  // every relation maps to zero
  bool spans = false;             // bounded orbit sums are reached
  bool passed() const { return images_ok && relations_vanish && spans; }
};

// Spanning is tested with generator monomials of total degree
// <= (rank + 1) * height_bound + rank.
PresentationReport validate_presentation(const Presentation& p, const RootDatum& d,
                                         std::int64_t height_bound);

// Generators (reduced grevlex basis) of the maximal ideal of the presented
// ring vanishing on the Galois orbit of p.
std::vector<Polynomial> point_ideal(const Presentation& p, const EvalPoint& point);

struct TruncationReport {
  std::size_t j = 0;
  std::size_t dimension = 0;
  std::vector<Monomial> standard_monomials;
  GroebnerBasis basis;
};

// R / (relations + m^j) for the presented ring R.
TruncationReport truncated_quotient(const Presentation& p, const std::vector<Polynomial>& m_gens,
                                    std::size_t j);

struct NalLevel {
  std::size_t j = 0;
  std::size_t dim_g = 0;
  std::size_t dim_z = 0;
  bool surjective = false;
  bool passed() const { return dim_g == dim_z && surjective; }
};

struct NalReport {
  PresentationReport validation_g;
  PresentationReport validation_z;
  bool restriction_ok = false;
  std::string levi_name;
  std::size_t levi_roots = 0;
  std::vector<std::string> point_ideal_g;
  std::vector<std::string> point_ideal_z;
  std::vector<NalLevel> levels;
  bool all_passed = false;
};

// restriction[i] expresses the i-th generator of pg as a Laurent polynomial in
// the generators of pz. Throws InputError if the support of the point is
// disconnected or sizes disagree.
NalReport nal_point_check(const RootDatum& d, const EvalPoint& point, const Presentation& pg,
                          const Presentation& pz, const std::vector<LaurentPoly>& restriction,
                          std::size_t j_max, std::int64_t height_bound = 3);

}  // namespace reprings
