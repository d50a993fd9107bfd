#include "reprings/completion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "reprings/errors.hpp"
#include "reprings/rational_span.hpp"
#include "reprings/rep_ring.hpp"

namespace reprings {

std::vector<std::string> Presentation::variable_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_gens; ++i) names.push_back("y" + std::to_string(i + 1));
  for (auto i : inverted_gens) names.push_back("u" + std::to_string(i + 1));
  return names;
}

void Presentation::check() const {
  if (generator_images.size() != num_gens)
    throw InputError("presentation needs exactly one image per generator");
  for (std::size_t i = 1; i < generator_images.size(); ++i)
    if (generator_images[i].rank() != generator_images[0].rank())
      throw InputError("generator images have different ranks");
  for (const auto& r : relations)
    if (r.rank() != num_gens) throw InputError("relation is not a polynomial in the generators");
  std::vector<bool> seen(num_gens, false);
  for (auto i : inverted_gens) {
    if (i >= num_gens || seen[i]) throw InputError("invalid inverted generator index");
    seen[i] = true;
  }
}

namespace {

std::size_t inverted_slot(const Presentation& p, std::size_t gen) {
  for (std::size_t k = 0; k < p.inverted_gens.size(); ++k)
    if (p.inverted_gens[k] == gen) return p.num_gens + k;
  throw InputError("negative power of generator y" + std::to_string(gen + 1) +
                   " which is not declared invertible");
}

}  // namespace

Polynomial to_presented(const Presentation& p, const LaurentPoly& f, MonomialOrder order) {
  if (f.rank() != p.num_gens) throw InputError("expression rank does not match the generator count");
  Polynomial out(p.num_vars(), order);
  for (const auto& [n, c] : f.terms()) {
    Monomial m(p.num_vars(), 0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] >= 0) m[i] = static_cast<std::int32_t>(n[i]);
      else m[inverted_slot(p, i)] = static_cast<std::int32_t>(-n[i]);
    }
    out.add_term(m, c.rational_value());
  }
  return out;
}

std::vector<Polynomial> base_ideal(const Presentation& p, MonomialOrder order) {
  std::vector<Polynomial> gens;
  for (const auto& r : p.relations) gens.push_back(to_presented(p, r, order));
  for (std::size_t k = 0; k < p.inverted_gens.size(); ++k) {
    Monomial m(p.num_vars(), 0);
    m[p.inverted_gens[k]] = 1;
    m[p.num_gens + k] = 1;
    Polynomial g = Polynomial::term(m, 1, order);
    g -= Polynomial::constant(p.num_vars(), 1, order);
    gens.push_back(std::move(g));
  }
  return gens;
}

namespace {

LaurentPoly invert_unit(const LaurentPoly& f) {
  if (f.size() != 1) throw InputError("inverted generator must map to a single monomial");
  const auto& [n, c] = *f.terms().begin();
  Exponent m(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) m[i] = -n[i];
  return LaurentPoly::monomial(m, c.inverse());
}

// Images of the presented variables (y then u) in the target ring.
std::vector<LaurentPoly> variable_images(const Presentation& p) {
  std::vector<LaurentPoly> images = p.generator_images;
  for (auto i : p.inverted_gens) images.push_back(invert_unit(p.generator_images[i]));
  return images;
}

LaurentPoly evaluate_polynomial(const Polynomial& f, const std::vector<LaurentPoly>& images,
                                std::size_t rank) {
  LaurentPoly out(rank);
  std::map<std::pair<std::size_t, std::int32_t>, LaurentPoly> powers;
  for (const auto& [m, c] : f.terms()) {
    LaurentPoly t = LaurentPoly::constant(rank, Coefficient(c));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto key = std::make_pair(i, m[i]);
      auto it = powers.find(key);
      if (it == powers.end())
        it = powers.emplace(key, images[i].pow(static_cast<unsigned>(m[i]))).first;
      t *= it->second;
    }
    out += t;
  }
  return out;
}

std::size_t image_rank(const Presentation& p) {
  return p.generator_images.empty() ? 0 : p.generator_images.front().rank();
}

}  // namespace

LaurentPoly substitute(const Presentation& p, const Polynomial& f) {
  if (f.nvars() != p.num_vars()) throw InputError("polynomial does not live in the presented ring");
  return evaluate_polynomial(f, variable_images(p), image_rank(p));
}

PresentationReport validate_presentation(const Presentation& p, const RootDatum& d,
                                         std::int64_t height_bound) {
  p.check();
  PresentationReport rep;
  rep.images_ok = std::all_of(p.generator_images.begin(), p.generator_images.end(),
                              [&](const LaurentPoly& f) {
                                return f.rank() == d.rank() && is_weyl_invariant(d, f);
                              });
  if (!rep.images_ok && std::any_of(p.generator_images.begin(), p.generator_images.end(),
                                    [&](const LaurentPoly& f) { return f.rank() != d.rank(); }))
    return rep;

  rep.relations_vanish = true;
  for (const auto& r : p.relations)
    if (!substitute(p, to_presented(p, r)).is_zero()) rep.relations_vanish = false;

  // generator monomials y^a with sum |a_i| <= bound, negative a_i only for inverted generators;
  // the extra height_bound covers inverse powers of central characters
  const auto r = static_cast<std::int64_t>(d.rank());
  const std::int64_t bound = (r + 1) * height_bound + r;
  std::vector<bool> invertible(p.num_gens, false);
  for (auto i : p.inverted_gens) invertible[i] = true;
  std::vector<LaurentPoly> inverse(p.num_gens);
  for (auto i : p.inverted_gens) inverse[i] = invert_unit(p.generator_images[i]);

  RationalSpan<Exponent> span;
  LaurentPoly current = LaurentPoly::one(d.rank());
  std::function<void(std::size_t, std::int64_t, const LaurentPoly&)> walk =
      [&](std::size_t i, std::int64_t left, const LaurentPoly& acc) {
        if (i == p.num_gens) {
          span.add(to_rational_vector(acc));
          return;
        }
        walk(i + 1, left, acc);
        LaurentPoly up = acc;
        for (std::int64_t k = 1; k <= left; ++k) {
          up *= p.generator_images[i];
          walk(i + 1, left - k, up);
        }
        if (!invertible[i]) return;
        LaurentPoly down = acc;
        for (std::int64_t k = 1; k <= left; ++k) {
          down *= inverse[i];
          walk(i + 1, left - k, down);
        }
      };
  walk(0, bound, current);

  const WeylGroup w = weyl_group(d);
  rep.spans = true;
  for (const auto& lam : dominant_weights(d, height_bound)) {
    if (!span.contains(to_rational_vector(orbit_sum(w, DominantWeight::make(d, lam)).poly))) {
      rep.spans = false;
      break;
    }
  }
  return rep;
}

std::vector<Polynomial> point_ideal(const Presentation& p, const EvalPoint& point) {
  p.check();
  if (image_rank(p) != point.rank()) throw InputError("point rank does not match the presentation");
  const std::size_t nv = p.num_vars();
  const std::size_t total = nv + 1;  // z first, then the presented variables
  const MonomialOrder elim{1};
  const std::uint64_t big_m = point.order();

  auto in_z = [&](const std::vector<Rational>& coords) {
    Polynomial f(total, elim);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      Monomial m(total, 0);
      m[0] = static_cast<std::int32_t>(k);
      f.add_term(m, coords[k]);
    }
    return f;
  };
  auto shifted_variable = [&](std::size_t i) { return Polynomial::variable(total, i + 1, elim); };

  std::vector<Polynomial> gens;
  {
    const auto phi = cyclotomic_polynomial(big_m);
    std::vector<Rational> coords;
    for (auto c : phi) coords.emplace_back(static_cast<long>(c));
    gens.push_back(in_z(coords));
  }
  const auto images = variable_images(p);
  for (std::size_t i = 0; i < nv; ++i) {
    const Coefficient v = evaluate_poly(point, images[i]).promote(big_m);
    gens.push_back(shifted_variable(i) - in_z(v.coords()));
  }
  for (const auto& g : base_ideal(p)) {
    Polynomial lifted(total, elim);
    for (const auto& [m, c] : g.terms()) {
      Monomial e(total, 0);
      std::copy(m.begin(), m.end(), e.begin() + 1);
      lifted.add_term(e, c);
    }
    gens.push_back(std::move(lifted));
  }

  const GroebnerBasis gb = groebner(gens, total, elim);
  std::vector<Polynomial> eliminated;
  for (const auto& f : gb.basis) {
    if (std::any_of(f.terms().begin(), f.terms().end(),
                    [](const auto& t) { return t.first[0] != 0; }))
      continue;
    Polynomial g(nv);
    for (const auto& [m, c] : f.terms()) g.add_term(Monomial(m.begin() + 1, m.end()), c);
    eliminated.push_back(std::move(g));
  }
  return groebner(eliminated, nv).basis;
}

TruncationReport truncated_quotient(const Presentation& p, const std::vector<Polynomial>& m_gens,
                                    std::size_t j) {
  const std::size_t nv = p.num_vars();
  std::vector<Polynomial> gens = base_ideal(p);
  if (j == 0) {
    gens.push_back(Polynomial::constant(nv, 1));
  } else {
    // all products of j generators, indices nondecreasing
    std::vector<std::size_t> idx(j, 0);
    const GroebnerBasis base = groebner(gens, nv);
    for (;;) {
      Polynomial prod = Polynomial::constant(nv, 1);
      for (auto i : idx) prod = base.normal_form(prod * m_gens.at(i));
      gens.push_back(std::move(prod));
      std::size_t k = j;
      while (k > 0 && idx[k - 1] + 1 == m_gens.size()) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t t = k; t < j; ++t) idx[t] = idx[k - 1];
    }
  }
  TruncationReport rep;
  rep.j = j;
  rep.basis = groebner(gens, nv);
  rep.standard_monomials = standard_monomials(rep.basis);
  rep.dimension = rep.standard_monomials.size();
  return rep;
}

NalReport nal_point_check(const RootDatum& d, const EvalPoint& point, const Presentation& pg,
                          const Presentation& pz, const std::vector<LaurentPoly>& restriction,
                          std::size_t j_max, std::int64_t height_bound) {
  pg.check();
  pz.check();
  if (point.rank() != d.rank()) throw InputError("point rank does not match the datum");
  if (restriction.size() != pg.num_gens)
    throw InputError("restriction needs one expression per generator of the G presentation");
  const SupportDesc sup = support(point);
  if (!sup.connected) throw InputError("completion check needs a point with connected support");

  NalReport rep;
  const LeviDatum levi = centralizer_subsystem(d, sup.kernel_lattice);
  const RootDatum zd = levi.as_root_datum();
  rep.levi_roots = levi.roots.size();
  rep.levi_name = zd.name();
  rep.validation_g = validate_presentation(pg, d, height_bound);
  rep.validation_z = validate_presentation(pz, zd, height_bound);

  // images of the G variables inside the Z presented ring
  std::vector<Polynomial> var_images;
  rep.restriction_ok = true;
  for (std::size_t i = 0; i < pg.num_gens; ++i) {
    const Polynomial img = to_presented(pz, restriction[i]);
    if (substitute(pz, img) != pg.generator_images[i]) rep.restriction_ok = false;
    var_images.push_back(img);
  }
  for (auto i : pg.inverted_gens) var_images.push_back(to_presented(pz, invert_unit(restriction[i])));

  const auto mg = point_ideal(pg, point);
  const auto mz = point_ideal(pz, point);
  for (const auto& f : mg) rep.point_ideal_g.push_back(f.to_string(pg.variable_names()));
  for (const auto& f : mz) rep.point_ideal_z.push_back(f.to_string(pz.variable_names()));

  bool levels_ok = true;
  for (std::size_t j = 1; j <= j_max; ++j) {
    const TruncationReport tg = truncated_quotient(pg, mg, j);
    const TruncationReport tz = truncated_quotient(pz, mz, j);
    NalLevel lvl;
    lvl.j = j;
    lvl.dim_g = tg.dimension;
    lvl.dim_z = tz.dimension;
    RationalSpan<Monomial> span;
    for (const auto& s : tg.standard_monomials) {
      Polynomial img = Polynomial::constant(pz.num_vars(), 1);
      for (std::size_t v = 0; v < s.size(); ++v)
        for (std::int32_t k = 0; k < s[v]; ++k) img = tz.basis.normal_form(img * var_images[v]);
      RationalSpan<Monomial>::Vec vec;
      for (const auto& [m, c] : img.terms()) vec.emplace(m, c);
      span.add(vec);
    }
    lvl.surjective = span.rank() == tz.dimension;
    levels_ok = levels_ok && lvl.passed();
    rep.levels.push_back(lvl);
  }
  rep.all_passed = rep.validation_g.passed() && rep.validation_z.passed() && rep.restriction_ok &&
                   levels_ok;
  return rep;
}

}  // namespace reprings
