#pragma once

// Isotypic decomposition of characters along the support of a point and the
// twist automorphism that rescales each isotypic piece by the value of its
// class at the point.

#include <cstdint>
#include <map>
#include <vector>

#include "reprings/laurent.hpp"
#include "reprings/lattice.hpp"
#include "reprings/rep_ring.hpp"
#include "reprings/spectrum.hpp"

namespace reprings {

struct IsotypicDecomposition {
  Sublattice kernel_lattice;
  // canonical coset representative -> monomials in that class
  std::map<IntVector, LaurentPoly> pieces;
};

IsotypicDecomposition isotypic_decompose(const LaurentPoly& f, const Sublattice& k);

struct TwistedElement {
  LaurentPoly poly;
  std::uint64_t order = 1;
};

// Scales the piece of class [n] in N / N_p by p(n).
TwistedElement twist_element(const LaurentPoly& f, const EvalPoint& p);

// augmentation(twist(f)) == f(p) for every probe; throws InputError when the
// support of p is disconnected.
bool twist_augmentation_check(const RootDatum& d, const EvalPoint& p,
                              const std::vector<InvariantElement>& probes);

bool twist_multiplicativity_check(const InvariantElement& f, const LaurentPoly& g, const EvalPoint& p);

}  // namespace reprings
