#include "reprings/twist.hpp"

#include "reprings/errors.hpp"

namespace reprings {

IsotypicDecomposition isotypic_decompose(const LaurentPoly& f, const Sublattice& k) {
  if (k.ambient_rank() != f.rank()) throw InputError("lattice rank does not match polynomial rank");
  IsotypicDecomposition dec{k, {}};
  for (const auto& [n, c] : f.terms()) {
    auto key = k.reduce(to_int_vector(n));
    auto it = dec.pieces.try_emplace(std::move(key), LaurentPoly(f.rank())).first;
    it->second.add_term(n, c);
  }
  return dec;
}

TwistedElement twist_element(const LaurentPoly& f, const EvalPoint& p) {
  if (f.rank() != p.rank()) throw InputError("polynomial rank does not match the point rank");
  const IsotypicDecomposition dec = isotypic_decompose(f, support(p).kernel_lattice);
  TwistedElement t{LaurentPoly(f.rank()), p.order()};
  for (const auto& [key, piece] : dec.pieces) t.poly += piece * evaluate_char(p, to_small_vector(key));
  return t;
}

bool twist_augmentation_check(const RootDatum& d, const EvalPoint& p,
                              const std::vector<InvariantElement>& probes) {
  if (d.rank() != p.rank()) throw InputError("point rank does not match the datum");
  if (!support(p).connected) throw InputError("twist check needs a point with connected support");
  for (const auto& f : probes)
    if (augmentation(twist_element(f.poly, p).poly) != evaluate_poly(p, f.poly)) return false;
  return true;
}

bool twist_multiplicativity_check(const InvariantElement& f, const LaurentPoly& g, const EvalPoint& p) {
  return twist_element(f.poly * g, p).poly ==
         twist_element(f.poly, p).poly * twist_element(g, p).poly;
}

}  // namespace reprings
