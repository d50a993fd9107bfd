#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reprings/errors.hpp"
#include "reprings/rep_ring.hpp"
#include "reprings/spectrum.hpp"

using namespace reprings;

namespace {

RootDatum sc(const std::string& t, std::size_t n) { return standard_datum(t, n, Variant::simply_connected); }

oracle::Complex value(const Coefficient& c) { return oracle::cyclotomic_value(c.order(), c.coords()); }

oracle::Complex coordinate_value(const EvalCoordinate& c) {
  return oracle::root_of_unity(c.m, c.a) * c.rational_part().get_d();
}

// Character value by direct complex arithmetic.
oracle::Complex char_value(const EvalPoint& p, const Exponent& n) {
  oracle::Complex z = 1;
  for (std::size_t i = 0; i < n.size(); ++i)
    z *= std::pow(coordinate_value(p.coords[i]), static_cast<double>(n[i]));
  return z;
}

EvalPoint random_point(std::mt19937& rng, std::size_t rank) {
  static const std::vector<std::string> pool{"1",        "2",         "1/3",        "zeta(2)",
                                             "zeta(3)",  "zeta(4)^3", "zeta(6)*2",  "zeta(3)^2*3/2",
                                             "4",        "2/5",       "zeta(5)^2"};
  std::vector<std::string> c;
  for (std::size_t i = 0; i < rank; ++i) c.push_back(pool[rng() % pool.size()]);
  return parse_point(c);
}

// Oracle for ideal equality: scan k in (Z/M)^* over complex coordinates.
bool galois_conjugate(const EvalPoint& p, const EvalPoint& q) {
  const std::uint64_t m = std::lcm(p.order(), q.order());
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    bool all = true;
    for (std::size_t i = 0; i < p.rank() && all; ++i) {
      const auto& a = p.coords[i];
      const auto& b = q.coords[i];
      all = a.rational_part() == b.rational_part() &&
            oracle::close(oracle::root_of_unity(a.m, a.a * static_cast<std::int64_t>(k)),
                          oracle::root_of_unity(b.m, b.a));
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("coordinate parsing") {
  CHECK(parse_coordinate("1").to_string() == "1");
  CHECK(parse_coordinate("zeta(4)^3*2").to_string() == "zeta(4)^3*2^1");
  CHECK(parse_coordinate("zeta(4)") == parse_coordinate("zeta(4)^1"));
  CHECK(parse_coordinate("12").primes == std::map<std::uint64_t, std::int64_t>{{2, 2}, {3, 1}});
  CHECK(parse_coordinate("3/4").rational_part() == Rational(3, 4));
  CHECK(parse_coordinate("2^-2").rational_part() == Rational(1, 4));
  for (const auto* bad : {"0", "-2", "4/6", "zeta(1)", "zeta(4)^2", "zeta(0)", "x", "", "2*", "zeta(4)^4"})
    CHECK_THROWS_AS(parse_coordinate(bad), InputError);
  CHECK(parse_point_list("2, zeta(3)").rank() == 2);
  CHECK_THROWS_AS(parse_point_list(""), InputError);
}

TEST_CASE("character evaluation") {
  const EvalPoint p = parse_point({"zeta(4)*2"});
  const Coefficient v = evaluate_char(p, {3});
  CHECK(v == Coefficient::zeta(4, 3) * Coefficient(8L));
  CHECK(evaluate_char(p, {0}) == Coefficient(1L));
  CHECK(evaluate_char(EvalPoint::identity(3), {4, -2, 7}) == Coefficient(1L));

  std::mt19937 rng(53);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const EvalPoint q = random_point(rng, 2);
    const Exponent m{e(rng), e(rng)}, n{e(rng), e(rng)};
    const Exponent s{m[0] + n[0], m[1] + n[1]};
    CHECK(evaluate_char(q, s) == evaluate_char(q, m) * evaluate_char(q, n));
    CHECK(oracle::close(value(evaluate_char(q, n)), char_value(q, n)));
  }
}

TEST_CASE("polynomial evaluation is linear in terms") {
  const EvalPoint p = parse_point({"2"});
  CHECK(evaluate_poly(p, parse_laurent("x1 + x1^-1", 1)) == Coefficient(Rational(5, 2)));
  CHECK(evaluate_poly(parse_point({"zeta(3)"}), parse_laurent("x1 + x1^-1", 1)) == Coefficient(-1L));
}

TEST_CASE("supports") {
  SUBCASE("identity point") {
    const SupportDesc s = support(EvalPoint::identity(2));
    CHECK(s.kernel_lattice == Sublattice::full(2));
    CHECK(s.quotient.trivial());
    CHECK(s.connected);
  }
  SUBCASE("torsion point") {
    const SupportDesc s = support(parse_point({"zeta(4)", "1"}));
    CHECK(s.kernel_lattice == Sublattice(2, {{4, 0}, {0, 1}}));
    CHECK(s.quotient == FinAbGroup(0, {4}));
    CHECK_FALSE(s.connected);
  }
  SUBCASE("generic rational point") {
    const SupportDesc s = support(parse_point({"2"}));
    CHECK(s.kernel_lattice.rank() == 0);
    CHECK(s.quotient == FinAbGroup(1, {}));
    CHECK(s.connected);
  }
  SUBCASE("multiplicative relation between primes") {
    const SupportDesc s = support(parse_point({"2", "4"}));
    CHECK(s.kernel_lattice == Sublattice(2, {{2, -1}}));
    CHECK(s.connected);
  }
  SUBCASE("agrees with brute-force enumeration") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
      const EvalPoint p = random_point(rng, 2);
      const SupportDesc s = support(p);
      for (const auto& n : box_exponents(2, 6)) {
        const bool trivial = oracle::close(char_value(p, n), 1.0, 1e-9);
        CHECK(is_member(s.kernel_lattice, to_int_vector(n)) == trivial);
      }
      // independent of the cyclotomic modulus
      CHECK(support(p, 2 * p.order()).kernel_lattice == s.kernel_lattice);
      CHECK(support(p, 6 * p.order()).kernel_lattice == s.kernel_lattice);
    }
  }
  CHECK_THROWS_AS(support(parse_point({"zeta(4)"}), 6), InputError);
}

TEST_CASE("supports transform under the Weyl group") {
  const RootDatum d = sc("A", 2);
  const WeylGroup w = weyl_group(d);
  std::mt19937 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const EvalPoint p = random_point(rng, 2);
    const Sublattice k = support(p).kernel_lattice;
    for (const auto& e : w.elements()) {
      std::vector<IntVector> image;
      for (const auto& b : k.basis()) image.push_back(to_int_vector(e.apply(to_small_vector(b))));
      CHECK(support(weyl_translate(e, p)).kernel_lattice == Sublattice(2, image));
    }
  }
}

TEST_CASE("Weyl translation") {
  const RootDatum a1 = sc("A", 1);
  const WeylGroup w1 = weyl_group(a1);
  const WeylMatrix s = w1.elements()[1];
  CHECK(weyl_translate(WeylMatrix::identity(1), parse_point({"2"})) == parse_point({"2"}));
  CHECK(weyl_translate(s, parse_point({"2"})) == parse_point({"1/2"}));

  const RootDatum b2 = sc("B", 2);
  const WeylGroup w = weyl_group(b2);
  std::mt19937 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const EvalPoint p = random_point(rng, 2);
    const auto& a = w.elements()[rng() % w.order()];
    const auto& b = w.elements()[rng() % w.order()];
    CHECK(weyl_translate(a * b, p) == weyl_translate(a, weyl_translate(b, p)));
    // (w.p)(n) = p(w^{-1} n)
    for (const auto& n : box_exponents(2, 2))
      CHECK(evaluate_char(weyl_translate(a, p), n) == evaluate_char(p, a.inverse().apply(n)));
  }
}

TEST_CASE("ideal equality is Galois conjugacy") {
  CHECK(ideal_equal(parse_point({"zeta(3)"}), parse_point({"zeta(3)^2"})));
  CHECK_FALSE(ideal_equal(parse_point({"zeta(3)"}), parse_point({"zeta(6)"})));
  CHECK_FALSE(ideal_equal(parse_point({"2"}), parse_point({"1/2"})));
  CHECK(ideal_equal(parse_point({"zeta(5)", "zeta(5)^2"}), parse_point({"zeta(5)^2", "zeta(5)^4"})));
  CHECK_FALSE(ideal_equal(parse_point({"zeta(5)", "zeta(5)^2"}), parse_point({"zeta(5)^2", "zeta(5)^3"})));
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const EvalPoint p = random_point(rng, 1), q = random_point(rng, 1);
    CHECK(ideal_equal(p, q) == galois_conjugate(p, q));
    CHECK(ideal_equal(p, p));
  }
}

TEST_CASE("fibers over R(G)") {
  CHECK(fiber_over_rg(sc("A", 2), EvalPoint::identity(2)).size() == 1);
  const auto f = fiber_over_rg(sc("A", 1), parse_point({"2"}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == parse_point({"2"}));
  CHECK(f[1] == parse_point({"1/2"}));
  // inversion is Galois conjugation for a primitive root of unity
  CHECK(fiber_over_rg(sc("A", 1), parse_point({"zeta(4)"})).size() == 1);

  std::mt19937 rng(73);
  for (const auto* t : {"A", "B", "G2"}) {
    const RootDatum d = std::string(t) == "G2" ? standard_datum("G2", 2, Variant::adjoint) : sc(t, 2);
    const std::size_t order = weyl_group(d).order();
    for (int trial = 0; trial < 6; ++trial) {
      const EvalPoint p = random_point(rng, 2);
      const auto fiber = fiber_over_rg(d, p);
      CHECK(fiber.size() <= order);
      CHECK(fiber_invariants_agree(d, fiber, 2));
      // pairwise distinct ideals
      for (std::size_t i = 0; i < fiber.size(); ++i)
        for (std::size_t j = i + 1; j < fiber.size(); ++j) CHECK_FALSE(ideal_equal(fiber[i], fiber[j]));
    }
  }
  // points of different fibers are separated by some invariant
  CHECK_FALSE(fiber_invariants_agree(sc("A", 1), {parse_point({"2"}), parse_point({"3"})}, 1));
}

TEST_CASE("stabilizers") {
  SUBCASE("identity point") {
    const StabilizerReport r = stabilizer_check(sc("A", 2), EvalPoint::identity(2));
    CHECK(r.geometric.size() == 6);
    CHECK(r.all_equal);
    CHECK(r.levi.roots.size() == 6);
  }
  SUBCASE("A1 at 2") {
    const StabilizerReport r = stabilizer_check(sc("A", 1), parse_point({"2"}));
    CHECK(r.geometric.size() == 1);
    CHECK(r.ideal.size() == 1);
    CHECK(r.levi.weyl_subgroup.order() == 1);
    CHECK(r.all_equal);
  }
  SUBCASE("A2 with support along one root") {
    // p(n) = 2^{<n, e>} with e orthogonal to the first simple root
    const EvalPoint p = parse_point({"2", "4"});
    CHECK(evaluate_char(p, sc("A", 2).simple_roots()[0]) == Coefficient(1L));
    const StabilizerReport r = stabilizer_check(sc("A", 2), p);
    CHECK(r.geometric.size() == 2);
    CHECK(r.ideal.size() == 2);
    CHECK(r.levi.weyl_subgroup.order() == 2);
    CHECK(r.all_equal);
  }
  SUBCASE("orbit-stabilizer") {
    const RootDatum d = sc("C", 2);
    const std::size_t order = weyl_group(d).order();
    for (const auto& pt : std::vector<std::vector<std::string>>{{"2", "3"}, {"2", "1"}, {"1", "3"}, {"1", "1"}}) {
      const EvalPoint p = parse_point(pt);
      const StabilizerReport r = stabilizer_check(d, p);
      CHECK(r.all_equal);
      CHECK(fiber_over_rg(d, p).size() * r.ideal.size() == order);
    }
  }
  CHECK_THROWS_AS(stabilizer_check(sc("A", 1), parse_point({"zeta(4)"})), InputError);
}

TEST_CASE("unique lifts") {
  CHECK(unique_lift_check(sc("B", 2), EvalPoint::identity(2)));
  CHECK(unique_lift_check(torus_datum(2), parse_point({"2", "1/3"})));
  CHECK_THROWS_AS(unique_lift_check(torus_datum(2), parse_point({"2", "zeta(3)"})), InputError);
  // central point of GL2: roots (1,-1) lie in the kernel
  CHECK(unique_lift_check(gl_datum(2), parse_point({"zeta(3)*2", "zeta(3)*2"})));
  CHECK_THROWS_AS(unique_lift_check(sc("A", 1), parse_point({"2"})), InputError);
  CHECK_THROWS_AS(unique_lift_check(sc("A", 1), parse_point({"zeta(3)"})), InputError);
}

TEST_CASE("cocharacter points and inverses") {
  const EvalPoint p = EvalPoint::from_cocharacters({{2, {1, 0}}, {3, {0, -1}}}, 2);
  CHECK(p == parse_point({"2", "1/3"}));
  const EvalPoint q = parse_point({"zeta(6)*2", "3/5"});
  const EvalPoint qi = inverse_point(q);
  for (const auto& n : box_exponents(2, 2))
    CHECK(evaluate_char(q, n) * evaluate_char(qi, n) == Coefficient(1L));
  CHECK(make_ideal(q).order == 6);
}
