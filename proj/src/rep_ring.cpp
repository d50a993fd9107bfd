#include "reprings/rep_ring.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "reprings/errors.hpp"

namespace reprings {

DominantWeight DominantWeight::make(const RootDatum& d, Weight v) {
  if (v.size() != d.rank()) throw InputError("weight length does not match the datum rank");
  if (!is_dominant(d, v)) throw InputError("weight is not dominant");
  return DominantWeight(std::move(v));
}

bool is_weyl_invariant(const RootDatum& d, const LaurentPoly& f) {
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (weyl_act(d.simple_reflection(i), f) != f) return false;
  return true;
}

InvariantElement orbit_sum(const WeylGroup& w, const DominantWeight& lambda) {
  LaurentPoly p(lambda.coordinates().size());
  for (const auto& mu : orbit(w, lambda.coordinates())) p.add_term(mu, Coefficient(1L));
  return {std::move(p), true};
}

InvariantElement orbit_sum(const RootDatum& d, const DominantWeight& lambda) {
  return orbit_sum(weyl_group(d), lambda);
}

namespace {

LaurentPoly alternating_sum(const WeylGroup& w, const Weight& v) {
  LaurentPoly p(v.size());
  for (std::size_t i = 0; i < w.order(); ++i)
    p.add_term(w.elements()[i].apply(v), Coefficient(static_cast<long>(w.signs()[i])));
  return p;
}

}  // namespace

InvariantElement weyl_character(const RootDatum& d, const WeylGroup& w,
                                const DominantWeight& lambda) {
  const Weight rho2 = two_rho(d);
  Weight shifted = lambda.coordinates();
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = 2 * shifted[i] + rho2[i];
  LaurentPoly doubled;
  try {
    doubled = exact_divide(alternating_sum(w, shifted), alternating_sum(w, rho2));
  } catch (const InputError& e) {
    throw InvariantViolation(std::string("Weyl denominator does not divide: ") + e.what());
  }
  LaurentPoly chi(d.rank());
  for (const auto& [n, c] : doubled.terms()) {
    Exponent half(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] % 2 != 0) throw InvariantViolation("character exponent outside the weight lattice");
      half[i] = n[i] / 2;
    }
    chi.add_term(half, c);
  }
  return {std::move(chi), true};
}

InvariantElement weyl_character(const RootDatum& d, const DominantWeight& lambda) {
  return weyl_character(d, weyl_group(d), lambda);
}

std::vector<Exponent> box_exponents(std::size_t rank, std::int64_t bound) {
  std::vector<Exponent> out;
  if (bound < 0) return out;
  Exponent e(rank, -bound);
  for (;;) {
    out.push_back(e);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (e[i] < bound) {
        ++e[i];
        break;
      }
      e[i] = -bound;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

std::vector<Weight> dominant_weights(const RootDatum& d, std::int64_t bound) {
  std::vector<Weight> out;
  for (auto& e : box_exponents(d.rank(), bound))
    if (is_dominant(d, e)) out.push_back(std::move(e));
  return out;
}

RationalSpan<Exponent>::Vec to_rational_vector(const LaurentPoly& f) {
  RationalSpan<Exponent>::Vec v;
  for (const auto& [n, c] : f.terms()) v.emplace(n, c.rational_value());
  return v;
}

InvariantsProbe invariants_basis_probe(const RootDatum& d, std::int64_t height_bound, unsigned seed) {
  InvariantsProbe probe;
  probe.weights = dominant_weights(d, height_bound);
  const WeylGroup w = weyl_group(d);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  LaurentPoly f0(d.rank());
  for (const auto& e : box_exponents(d.rank(), height_bound)) f0.add_term(e, Coefficient(coeff(rng)));
  LaurentPoly sym(d.rank());
  for (const auto& g : w.elements()) sym += weyl_act(g, f0);

  // Keep only whole orbits inside the box so the result stays invariant.
  LaurentPoly boxed(d.rank());
  for (const auto& [n, c] : sym.terms()) {
    if (!is_dominant(d, n)) continue;
    const auto orb = orbit(w, n);
    const bool inside = std::all_of(orb.begin(), orb.end(),
                                    [&](const Weight& m) { return height(m) <= height_bound; });
    if (!inside) continue;
    for (const auto& m : orb) boxed.add_term(m, c);
  }

  RationalSpan<Exponent> span;
  for (const auto& lambda : probe.weights)
    span.add(to_rational_vector(orbit_sum(w, DominantWeight::make(d, lambda)).poly));
  probe.random_invariant_spanned =
      is_weyl_invariant(d, boxed) && span.contains(to_rational_vector(boxed));
  return probe;
}

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  Weight diff(lambda.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda[i] - mu[i];
  const auto x = rational_solve(d.simple_roots(), diff);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(),
                     [](const Rational& q) { return q.get_den() == 1 && q >= 0; });
}

namespace {

// All nonnegative vectors of the given length with coordinate sum <= bound,
// ordered by total degree then lexicographically.
std::vector<std::vector<std::int64_t>> degree_vectors(std::size_t len, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(len, 0);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t left) {
    if (i == len) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      cur[i] = k;
      fill(i + 1, left - k);
    }
    cur[i] = 0;
  };
  for (std::int64_t deg = 0; deg <= bound; ++deg) fill(0, deg);
  return out;
}

}  // namespace

Char2Report char2_probe(const RootDatum& d, std::int64_t degree_bound) {
  const std::size_t r = d.rank();
  if (d.semisimple_rank() != r)
    throw InputError("polynomial character probe needs a semisimple datum");
  IntMatrix coroots(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) coroots(i, j) = d.simple_coroots()[i][j];
  if (abs(coroots.determinant()) != 1)
    throw InputError("simple coroots do not form a basis of the cocharacter lattice");

  Char2Report rep;
  // rows of (B^T)^{-1} pair with the coroots to the identity
  const IntMatrix omega = inverse_unimodular(coroots.transpose());
  for (std::size_t i = 0; i < r; ++i) rep.fundamental_weights.push_back(to_small_vector(omega.row(i)));

  const WeylGroup w = weyl_group(d);
  std::vector<LaurentPoly> chi;
  for (const auto& om : rep.fundamental_weights)
    chi.push_back(weyl_character(d, w, DominantWeight::make(d, om)).poly);

  rep.monomials = degree_vectors(r, degree_bound);
  std::vector<LaurentPoly> products;
  std::vector<Weight> highest;
  for (const auto& a : rep.monomials) {
    LaurentPoly p = LaurentPoly::one(r);
    Weight lam(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      p *= chi[i].pow(static_cast<unsigned>(a[i]));
      for (std::size_t j = 0; j < r; ++j) lam[j] += a[i] * rep.fundamental_weights[i][j];
    }
    products.push_back(std::move(p));
    highest.push_back(std::move(lam));
  }
  rep.orbit_weights = highest;

  RationalSpan<Exponent> span;
  std::size_t independent = 0;
  for (const auto& p : products) independent += span.add(to_rational_vector(p)) ? 1 : 0;
  rep.independent = independent == products.size();

  rep.orbit_sums_expressible = true;
  for (const auto& lam : rep.orbit_weights) {
    if (!span.contains(to_rational_vector(orbit_sum(w, DominantWeight::make(d, lam)).poly))) {
      rep.orbit_sums_expressible = false;
      break;
    }
  }

  rep.unitriangular = true;
  for (std::size_t i = 0; i < products.size(); ++i) {
    std::vector<Rational> row;
    for (const auto& mu : rep.orbit_weights) row.push_back(products[i].coefficient(mu).rational_value());
    rep.transition.push_back(std::move(row));
    if (products[i].coefficient(highest[i]) != Coefficient(1L)) rep.unitriangular = false;
    for (const auto& [n, c] : products[i].terms()) {
      if (n == highest[i] || !is_dominant(d, n)) continue;
      if (!dominance_leq(d, n, highest[i])) rep.unitriangular = false;
    }
  }
  return rep;
}

bool finiteness_probe(const RootDatum& d, const std::vector<LaurentPoly>& module_gens,
                      std::int64_t height_bound) {
  std::int64_t gmax = 0;
  for (const auto& g : module_gens) {
    if (g.rank() != d.rank()) throw InputError("module generator rank does not match the datum");
    gmax = std::max(gmax, height(g));
  }
  const std::int64_t bound = 2 * (height_bound + gmax);
  const WeylGroup w = weyl_group(d);
  RationalSpan<Exponent> span;
  for (const auto& lam : dominant_weights(d, bound)) {
    const LaurentPoly m = orbit_sum(w, DominantWeight::make(d, lam)).poly;
    for (const auto& g : module_gens) span.add(to_rational_vector(m * g));
  }
  for (const auto& e : box_exponents(d.rank(), height_bound)) {
    if (!span.contains(to_rational_vector(LaurentPoly::monomial(e)))) return false;
  }
  return true;
}

}  // namespace reprings
