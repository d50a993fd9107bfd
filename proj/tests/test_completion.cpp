#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "reprings/completion.hpp"
#include "reprings/config.hpp"
#include "reprings/errors.hpp"

using namespace reprings;

namespace {

RootDatum sc(const std::string& t, std::size_t n) { return standard_datum(t, n, Variant::simply_connected); }

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial cst(std::size_t n, long c) { return Polynomial::constant(n, c); }

Presentation a1_presentation() {
  Presentation p;
  p.num_gens = 1;
  p.generator_images = {parse_laurent("x1 + x1^-1", 1)};
  return p;
}

// All monomials of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

Polynomial random_homogeneous(std::mt19937& rng, std::size_t n, int d, int terms) {
  const auto mons = monomials_of_degree(n, d);
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial f(n);
  for (int t = 0; t < terms; ++t) f.add_term(mons[rng() % mons.size()], c(rng));
  return f;
}

// Homogeneous membership by dense linear algebra on the Macaulay matrix of
// degree deg(f): f is in I iff it is a combination of m * g_i of that degree.
bool macaulay_member(const std::vector<Polynomial>& gens, const Polynomial& f, int d) {
  const std::size_t n = f.nvars();
  const auto mons = monomials_of_degree(n, d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  auto dense = [&](const Polynomial& p) {
    std::vector<mpq_class> v(mons.size());
    for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
    return v;
  };
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const int gd = static_cast<int>(g.total_degree());
    if (gd > d) continue;
    for (const auto& m : monomials_of_degree(n, d - gd)) rows.push_back(dense(g.scaled(m, 1)));
  }
  auto rank = [](std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || a[i][c] == 0) continue;
        const mpq_class q = a[i][c] / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
      }
      ++r;
    }
    return r;
  };
  const std::size_t base = rank(rows);
  rows.push_back(dense(f));
  return rank(rows) == base;
}

// Value of a presented polynomial at exact coefficient values of the variables.
Coefficient evaluate(const Polynomial& f, const std::vector<Coefficient>& values) {
  Coefficient sum;
  for (const auto& [m, c] : f.terms()) {
    Coefficient term(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) term *= values[i];
    sum += term;
  }
  return sum;
}

std::string data(const std::string& name) { return std::string(REPRINGS_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("monomial orders") {
  const MonomialOrder grevlex;
  CHECK(grevlex.greater({2, 0}, {0, 1}));
  CHECK(grevlex.greater({1, 1, 0}, {1, 0, 1}));  // grevlex, not lex
  CHECK(grevlex.greater({0, 2, 0}, {1, 0, 1}));
  const MonomialOrder elim{1};
  CHECK(elim.greater({1, 0}, {0, 5}));
}

TEST_CASE("Groebner basis examples") {
  SUBCASE("single variable") {
    const GroebnerBasis gb = groebner({var(1, 0)}, 1);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == var(1, 0));
  }
  SUBCASE("x^2, xy") {
    const Polynomial x = var(2, 0), y = var(2, 1);
    const GroebnerBasis gb = groebner({x * x, x * y}, 2);
    CHECK(gb.contains(x * x * y));
    CHECK_FALSE(gb.contains(y));
    CHECK_FALSE(gb.contains(x));
    CHECK(s_pairs_reduce_to_zero(gb));
    CHECK_THROWS_AS(standard_monomials(gb), InputError);
  }
  SUBCASE("unit ideal") {
    const GroebnerBasis gb = groebner({var(2, 0), cst(2, 1)}, 2);
    CHECK(gb.is_unit_ideal());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == cst(2, 1));
    CHECK(standard_monomials(gb).empty());
  }
  SUBCASE("zero-dimensional ideal") {
    const Polynomial x = var(2, 0), y = var(2, 1);
    const GroebnerBasis gb = groebner({x * x - cst(2, 1), y * y - x}, 2);
    CHECK(standard_monomials(gb).size() == 4);
    CHECK(gb.contains(y.pow(4) - cst(2, 1)));
  }
  SUBCASE("step cap") {
    const Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK_THROWS_AS(groebner({x * x * y - z, x * y * y - x, y * z - x * x}, 3, {}, 1), ResourceError);
  }
}

TEST_CASE("Groebner bases are reduced and closed under S-pairs") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_homogeneous(rng, 3, 2, 3) + random_homogeneous(rng, 3, 1, 2));
    const GroebnerBasis gb = groebner(gens, 3);
    CHECK(s_pairs_reduce_to_zero(gb));
    for (const auto& g : gens) CHECK(gb.contains(g));
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
      CHECK(gb.basis[i].leading_coefficient() == 1);
      for (std::size_t j = 0; j < gb.basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& [m, c] : gb.basis[j].terms()) CHECK_FALSE(divides(gb.basis[i].leading_monomial(), m));
      }
    }
  }
}

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> c(-2, 2);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens{random_homogeneous(rng, 3, 2, 3), random_homogeneous(rng, 3, 2, 3)};
    const GroebnerBasis gb = groebner(gens, 3);
    Polynomial f = random_homogeneous(rng, 3, 3, 2);
    if (trial % 2 == 0) {
      f = Polynomial(3);
      for (const auto& g : gens)
        for (std::size_t v = 0; v < 3; ++v) f += g * var(3, v) * cst(3, c(rng));
    }
    if (f.is_zero()) continue;
    const bool oracle = macaulay_member(gens, f, 3);
    CHECK(gb.contains(f) == oracle);
    (oracle ? members : non_members)++;
  }
  CHECK(members >= 10);
  CHECK(non_members >= 10);
}

TEST_CASE("polynomial rendering") {
  const std::vector<std::string> names{"y1", "u1"};
  const Polynomial y = var(2, 0);
  CHECK((y - Polynomial::constant(2, mpq_class(5, 2))).to_string(names) == "y1 - 5/2");
  CHECK((y * y + y * var(2, 1) * cst(2, -3) + cst(2, 1)).to_string(names) == "y1^2 - 3*y1*u1 + 1");
}

TEST_CASE("presentation validation") {
  SUBCASE("A1 with one generator") {
    const PresentationReport r = validate_presentation(a1_presentation(), sc("A", 1), 3);
    CHECK(r.images_ok);
    CHECK(r.relations_vanish);
    CHECK(r.spans);
  }
  SUBCASE("rank one torus with an inverted generator") {
    Presentation p;
    p.num_gens = 1;
    p.generator_images = {parse_laurent("x1", 1)};
    p.inverted_gens = {0};
    CHECK(validate_presentation(p, torus_datum(1), 3).passed());
    CHECK(p.variable_names() == std::vector<std::string>{"y1", "u1"});
  }
  SUBCASE("non-invariant image") {
    Presentation p;
    p.num_gens = 1;
    p.generator_images = {parse_laurent("x1", 1)};
    const PresentationReport r = validate_presentation(p, sc("A", 1), 2);
    CHECK_FALSE(r.images_ok);
    CHECK_FALSE(r.passed());
  }
  SUBCASE("torus without inverse fails to span") {
    Presentation p;
    p.num_gens = 1;
    p.generator_images = {parse_laurent("x1", 1)};
    CHECK_FALSE(validate_presentation(p, torus_datum(1), 2).spans);
  }
  SUBCASE("false relation") {
    Presentation p = a1_presentation();
    p.relations = {parse_laurent("y1^2 - 2", 1, "y")};
    CHECK_FALSE(validate_presentation(p, sc("A", 1), 2).relations_vanish);
  }
  SUBCASE("A2 with the two fundamental characters") {
    Presentation p;
    p.num_gens = 2;
    p.generator_images = {parse_laurent("x1 + x1^-1*x2 + x2^-1", 2), parse_laurent("x2 + x1*x2^-1 + x1^-1", 2)};
    CHECK(validate_presentation(p, sc("A", 2), 2).passed());
  }
  SUBCASE("GL2 with an inverted determinant") {
    const Presentation p = presentation_from_json_text(read_text_file(data("gl2_presentation.json")), 2);
    CHECK(validate_presentation(p, gl_datum(2), 3).passed());
    Presentation no_inverse = p;
    no_inverse.inverted_gens.clear();
    CHECK_FALSE(validate_presentation(no_inverse, gl_datum(2), 2).spans);
  }
  SUBCASE("malformed") {
    Presentation p = a1_presentation();
    p.num_gens = 2;
    CHECK_THROWS_AS(p.check(), InputError);
  }
}

TEST_CASE("point ideals") {
  const Presentation p = a1_presentation();
  const std::vector<std::string> names = p.variable_names();
  auto render = [&](const EvalPoint& pt) {
    std::vector<std::string> out;
    for (const auto& g : point_ideal(p, pt)) out.push_back(g.to_string(names));
    return out;
  };
  CHECK(render(EvalPoint::identity(1)) == std::vector<std::string>{"y1 - 2"});
  CHECK(render(parse_point({"2"})) == std::vector<std::string>{"y1 - 5/2"});
  CHECK(render(parse_point({"zeta(3)"})) == std::vector<std::string>{"y1 + 1"});
  CHECK(render(parse_point({"zeta(4)"})) == std::vector<std::string>{"y1"});

  SUBCASE("ideals vanish at the point and have the residue degree as colength") {
    // residue degree = degree over Q of the value zeta + zeta^-1 (resp. its rescaling)
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"1", 1}, {"3", 1}, {"zeta(5)", 2}, {"zeta(8)", 2}, {"zeta(7)^3", 3}, {"zeta(5)^2*3", 4}};
    for (const auto& [text, degree] : cases) {
      CAPTURE(text);
      const EvalPoint pt = parse_point({text});
      const auto ideal = point_ideal(p, pt);
      const Coefficient v = evaluate_poly(pt, p.generator_images[0]);
      for (const auto& g : ideal) CHECK(evaluate(g, {v}).is_zero());
      CHECK(truncated_quotient(p, ideal, 1).dimension == degree);
    }
  }
}

TEST_CASE("truncated quotients") {
  SUBCASE("univariate local ring") {
    const Presentation p = a1_presentation();
    const std::vector<Polynomial> m{var(1, 0) - cst(1, 2)};
    for (std::size_t j = 1; j <= 5; ++j) CHECK(truncated_quotient(p, m, j).dimension == j);
  }
  SUBCASE("plane at the origin") {
    Presentation p;
    p.num_gens = 2;
    p.generator_images = {parse_laurent("x1", 2), parse_laurent("x2", 2)};
    const std::vector<Polynomial> m{var(2, 0), var(2, 1)};
    const TruncationReport r = truncated_quotient(p, m, 2);
    CHECK(r.dimension == 3);
    CHECK(r.standard_monomials == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}});
    // Hilbert-Samuel function of a smooth surface point
    for (std::size_t j = 1; j <= 5; ++j) CHECK(truncated_quotient(p, m, j).dimension == j * (j + 1) / 2);
  }
  SUBCASE("A1 at a cube root of unity") {
    const Presentation p = a1_presentation();
    const auto m = point_ideal(p, parse_point({"zeta(3)"}));
    for (std::size_t j = 1; j <= 4; ++j) CHECK(truncated_quotient(p, m, j).dimension == j);
  }
  SUBCASE("residue degree scales the increments") {
    const Presentation p = a1_presentation();
    const auto m = point_ideal(p, parse_point({"zeta(5)"}));
    std::size_t prev = 0;
    for (std::size_t j = 1; j <= 4; ++j) {
      const std::size_t d = truncated_quotient(p, m, j).dimension;
      CHECK(d - prev == 2);
      prev = d;
    }
  }
  SUBCASE("torus with inverted generators") {
    Presentation p;
    p.num_gens = 2;
    p.generator_images = {parse_laurent("x1", 2), parse_laurent("x2", 2)};
    p.inverted_gens = {0, 1};
    const auto m = point_ideal(p, parse_point({"2", "3"}));
    for (std::size_t j = 1; j <= 4; ++j) CHECK(truncated_quotient(p, m, j).dimension == j * (j + 1) / 2);
  }
}

TEST_CASE("substitution back into R(T)") {
  Presentation p;
  p.num_gens = 1;
  p.generator_images = {parse_laurent("x1", 1)};
  p.inverted_gens = {0};
  CHECK(substitute(p, var(2, 1)) == parse_laurent("x1^-1", 1));
  CHECK(substitute(p, to_presented(p, parse_laurent("y1^2 + y1^-3", 1, "y"))) == parse_laurent("x1^2 + x1^-3", 1));
  CHECK_THROWS_AS(to_presented(a1_presentation(), parse_laurent("y1^-1", 1, "y")), InputError);
}

TEST_CASE("completion comparison at a point") {
  SUBCASE("Z = G at the identity is an identity at every level") {
    const Presentation p = a1_presentation();
    const NalReport r = nal_point_check(sc("A", 1), EvalPoint::identity(1), p, p, {parse_laurent("y1", 1, "y")}, 4);
    CHECK(r.all_passed);
    REQUIRE(r.levels.size() == 4);
    for (const auto& l : r.levels) {
      CHECK(l.dim_g == l.j);
      CHECK(l.dim_z == l.j);
      CHECK(l.surjective);
    }
  }
  SUBCASE("wrong restriction is rejected") {
    const Presentation p = a1_presentation();
    const NalReport r = nal_point_check(sc("A", 1), EvalPoint::identity(1), p, p, {parse_laurent("y1^2", 1, "y")}, 2);
    CHECK_FALSE(r.restriction_ok);
    CHECK_FALSE(r.all_passed);
  }
  SUBCASE("disconnected support") {
    const Presentation p = a1_presentation();
    CHECK_THROWS_AS(nal_point_check(sc("A", 1), parse_point({"zeta(4)"}), p, p, {parse_laurent("y1", 1, "y")}, 2),
                    InputError);
  }
  SUBCASE("curated cases") {
    for (const auto* name : {"sl2_identity.json", "sl2_point2.json", "sl3_levi.json", "sl3_levi_torsion.json"}) {
      CAPTURE(name);
      const CuratedCase c = load_curated_case(data(name));
      const NalReport r = nal_point_check(c.datum, c.point, c.presentation_g, c.presentation_z, c.restriction, c.j_max);
      CHECK(r.validation_g.passed());
      CHECK(r.validation_z.passed());
      CHECK(r.restriction_ok);
      CHECK(r.levels.size() == c.j_max);
      CHECK(r.all_passed);
    }
  }
  SUBCASE("SL3 Levi dimensions") {
    const CuratedCase c = load_curated_case(data("sl3_levi.json"));
    const NalReport r = nal_point_check(c.datum, c.point, c.presentation_g, c.presentation_z, c.restriction, c.j_max);
    CHECK(r.levi_roots == 2);
    std::vector<std::size_t> dims;
    for (const auto& l : r.levels) dims.push_back(l.dim_g);
    CHECK(dims == std::vector<std::size_t>{1, 3, 6});
  }
}

TEST_CASE("config loading") {
  CHECK(builtin_datum("GL", 2, "adjoint") == gl_datum(2));
  CHECK(builtin_datum("T", 3, "sc") == torus_datum(3));
  CHECK_THROWS_AS(builtin_datum("X", 2, "sc"), InputError);
  CHECK(datum_from_spec_text(read_text_file(data("gl2_datum.json"))) == gl_datum(2));
  CHECK(datum_from_spec_text(R"({"type":"A","rank":2,"variant":"adjoint"})") == standard_datum("A", 2, Variant::adjoint));
  CHECK_THROWS_AS(read_text_file(data("missing.json")), InputError);
  CHECK_THROWS_AS(curated_case_from_json_text("{}"), InputError);
  const Presentation p =
      presentation_from_json_text(R"({"num_gens":1,"generator_images":["x1 + x1^-1"],"relations":[],"inverted_gens":[]})", 1);
  CHECK(p.generator_images[0] == a1_presentation().generator_images[0]);
}
