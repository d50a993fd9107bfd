#include "reprings/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "reprings/errors.hpp"
#include "reprings/rep_ring.hpp"

namespace reprings {

namespace {

constexpr std::uint64_t kMaxLiteral = 1000000000000ULL;

Rational prime_power(std::uint64_t prime, std::int64_t e) {
  Integer base(static_cast<unsigned long>(prime)), pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), pw) : Rational(pw);
}

std::map<std::uint64_t, std::int64_t> factor(std::uint64_t n) {
  std::map<std::uint64_t, std::int64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

void add_exponents(std::map<std::uint64_t, std::int64_t>& acc,
                   const std::map<std::uint64_t, std::int64_t>& f, std::int64_t scale) {
  for (const auto& [p, e] : f) {
    acc[p] += e * scale;
    if (acc[p] == 0) acc.erase(p);
  }
}

EvalCoordinate make_torsion(std::int64_t s, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  s %= m;
  if (s < 0) s += m;
  EvalCoordinate c;
  if (s == 0) return c;
  const auto g = std::gcd(s, m);
  c.a = s / g;
  c.m = static_cast<std::uint64_t>(m / g);
  return c;
}

class LiteralReader {
 public:
  explicit LiteralReader(const std::string& text) : s_(text) {}

  EvalCoordinate read() {
    EvalCoordinate c;
    bool seen_zeta = false;
    skip_ws();
    if (pos_ == s_.size()) fail("empty coordinate");
    for (;;) {
      skip_ws();
      if (s_.compare(pos_, 5, "zeta(") == 0) {
        if (seen_zeta) fail("at most one root of unity per coordinate");
        seen_zeta = true;
        pos_ += 5;
        const std::uint64_t m = number();
        expect(')');
        std::uint64_t a = 1;
        if (accept('^')) a = number();
        if (m < 2 || a == 0 || a >= m || std::gcd(a, m) != 1)
          fail("root of unity must be written zeta(M)^a with 0 < a < M coprime to M");
        c.a = static_cast<std::int64_t>(a);
        c.m = m;
      } else {
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) fail("signs are not allowed");
        const std::uint64_t num = number();
        if (num == 0) fail("zero is not a unit");
        if (accept('/')) {
          const std::uint64_t den = number();
          if (den < 2 || std::gcd(num, den) != 1) fail("fraction must be reduced with denominator > 1");
          if (peek('^')) fail("powers of fractions are not accepted");
          add_exponents(c.primes, factor(num), 1);
          add_exponents(c.primes, factor(den), -1);
        } else {
          std::int64_t e = 1;
          if (accept('^')) {
            const bool neg = accept('-');
            const auto v = number();
            if (v > 1000000) fail("exponent too large");
            e = neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
            if (e == 0) fail("zero exponent");
          }
          add_exponents(c.primes, factor(num), e);
        }
      }
      skip_ws();
      if (pos_ == s_.size()) return c;
      expect('*');
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("invalid point coordinate \"" + s_ + "\": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > kMaxLiteral) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational EvalCoordinate::rational_part() const {
  Rational r(1);
  for (const auto& [p, e] : primes) r *= prime_power(p, e);
  return r;
}

Coefficient EvalCoordinate::value() const {
  if (m == 1) return Coefficient(rational_part());
  return Coefficient::zeta(m, a) * Coefficient(rational_part());
}

std::string EvalCoordinate::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (m > 1) {
    os << "zeta(" << m << ")^" << a;
    first = false;
  }
  for (const auto& [p, e] : primes) {
    if (!first) os << '*';
    first = false;
    os << p << '^' << e;
  }
  return first ? "1" : os.str();
}

EvalCoordinate parse_coordinate(const std::string& text) { return LiteralReader(text).read(); }

std::uint64_t EvalPoint::order() const {
  std::uint64_t m = 1;
  for (const auto& c : coords) m = std::lcm(m, c.m);
  return m;
}

std::vector<std::string> EvalPoint::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords) out.push_back(c.to_string());
  return out;
}

EvalPoint EvalPoint::identity(std::size_t rank) { return EvalPoint{std::vector<EvalCoordinate>(rank)}; }

EvalPoint EvalPoint::from_cocharacters(const std::map<std::uint64_t, Weight>& exponents,
                                       std::size_t rank) {
  EvalPoint p = identity(rank);
  for (const auto& [q, v] : exponents) {
    if (v.size() != rank) throw InputError("cocharacter length does not match the rank");
    if (factor(q).size() != 1 || factor(q).begin()->second != 1) throw InputError("base must be prime");
    for (std::size_t i = 0; i < rank; ++i)
      if (v[i] != 0) p.coords[i].primes[q] += v[i];
  }
  return p;
}

EvalPoint parse_point(const std::vector<std::string>& coordinates) {
  EvalPoint p;
  for (const auto& c : coordinates) p.coords.push_back(parse_coordinate(c));
  return p;
}

EvalPoint parse_point_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  if (parts.empty()) throw InputError("empty point");
  return parse_point(parts);
}

EvalPoint inverse_point(const EvalPoint& p) {
  EvalPoint q = p;
  for (auto& c : q.coords) {
    if (c.m > 1) c.a = static_cast<std::int64_t>(c.m) - c.a;
    for (auto& [prime, e] : c.primes) e = -e;
  }
  return q;
}

MaxIdealDesc make_ideal(const EvalPoint& p) { return {p, p.order()}; }

Coefficient evaluate_char(const EvalPoint& p, const Exponent& n) {
  if (n.size() != p.rank()) throw InputError("exponent length does not match the point rank");
  const std::uint64_t big_m = p.order();
  const auto mm = static_cast<std::int64_t>(big_m);
  std::int64_t s = 0;
  std::map<std::uint64_t, std::int64_t> e;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto& c = p.coords[i];
    const std::int64_t scaled = c.a * static_cast<std::int64_t>(big_m / c.m) % mm;
    s = (s + (scaled * (n[i] % mm)) % mm) % mm;
    add_exponents(e, c.primes, n[i]);
  }
  Rational r(1);
  for (const auto& [q, k] : e) r *= prime_power(q, k);
  if (big_m == 1) return Coefficient(r);
  return Coefficient::zeta(big_m, s) * Coefficient(r);
}

Coefficient evaluate_poly(const EvalPoint& p, const LaurentPoly& f) {
  if (f.rank() != p.rank()) throw InputError("polynomial rank does not match the point rank");
  std::vector<Coefficient> val, inv;
  for (const auto& c : p.coords) {
    val.push_back(c.value());
    inv.push_back(val.back().inverse());
  }
  Coefficient total;
  for (const auto& [n, c] : f.terms()) {
    Coefficient term = c;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const Coefficient& b = n[i] < 0 ? inv[i] : val[i];
      for (std::int64_t k = 0; k < (n[i] < 0 ? -n[i] : n[i]); ++k) term *= b;
    }
    total += term;
  }
  return total;
}

SupportDesc support(const EvalPoint& p, std::uint64_t modulus) {
  const std::size_t r = p.rank();
  const std::uint64_t big_m = modulus == 0 ? p.order() : modulus;
  if (big_m % p.order() != 0) throw InputError("modulus must be a multiple of the point order");
  std::set<std::uint64_t> primes;
  for (const auto& c : p.coords)
    for (const auto& [q, e] : c.primes) primes.insert(q);

  // unknowns (n_1..n_r, t): one congruence row sum s_i n_i - M t = 0, one row per prime
  IntMatrix a(primes.size() + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i)
    a(0, i) = Integer(static_cast<long>(p.coords[i].a)) * static_cast<unsigned long>(big_m / p.coords[i].m);
  a(0, r) = -Integer(static_cast<unsigned long>(big_m));
  std::size_t row = 1;
  for (auto q : primes) {
    for (std::size_t i = 0; i < r; ++i) {
      auto it = p.coords[i].primes.find(q);
      if (it != p.coords[i].primes.end()) a(row, i) = static_cast<long>(it->second);
    }
    ++row;
  }
  std::vector<IntVector> gens;
  const Sublattice ker = kernel(a);
  for (const auto& v : ker.basis()) gens.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
  SupportDesc s;
  s.kernel_lattice = Sublattice(r, gens);
  s.quotient = quotient_group(r, s.kernel_lattice);
  s.connected = s.quotient.torsion_free();
  return s;
}

bool ideal_equal(const MaxIdealDesc& p, const MaxIdealDesc& q) {
  if (p.point.rank() != q.point.rank()) throw InputError("points of different rank");
  if (p.order != q.order) return false;
  for (std::size_t i = 0; i < p.point.rank(); ++i)
    if (p.point.coords[i].primes != q.point.coords[i].primes) return false;
  const auto big_m = static_cast<std::int64_t>(p.order);
  for (std::int64_t k = 1; k <= big_m; ++k) {
    if (std::gcd(k, big_m) != 1) continue;
    bool match = true;
    for (std::size_t i = 0; i < p.point.rank() && match; ++i) {
      const auto& c = p.point.coords[i];
      const auto& d = q.point.coords[i];
      const EvalCoordinate t = make_torsion(c.a * k, c.m);
      match = t.a == d.a && t.m == d.m;
    }
    if (match) return true;
  }
  return false;
}

bool ideal_equal(const EvalPoint& p, const EvalPoint& q) { return ideal_equal(make_ideal(p), make_ideal(q)); }

EvalPoint weyl_translate(const WeylMatrix& w, const EvalPoint& p) {
  const std::size_t r = p.rank();
  if (w.size() != r) throw InputError("Weyl matrix size does not match the point rank");
  const WeylMatrix winv = w.inverse();
  const std::uint64_t big_m = p.order();
  const auto mm = static_cast<std::int64_t>(big_m);
  EvalPoint out = EvalPoint::identity(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const auto& c = p.coords[i];
      const std::int64_t si = c.a * static_cast<std::int64_t>(big_m / c.m) % mm;
      s = (s + (winv(i, j) % mm) * si % mm) % mm;
      add_exponents(out.coords[j].primes, c.primes, winv(i, j));
    }
    const auto primes = std::move(out.coords[j].primes);
    out.coords[j] = make_torsion(s, big_m);
    out.coords[j].primes = primes;
  }
  return out;
}

std::vector<EvalPoint> fiber_over_rg(const WeylGroup& w, const EvalPoint& p) {
  std::vector<EvalPoint> fiber{p};
  for (const auto& g : w.elements()) {
    EvalPoint q = weyl_translate(g, p);
    const bool known = std::any_of(fiber.begin(), fiber.end(),
                                   [&](const EvalPoint& f) { return ideal_equal(f, q); });
    if (!known) fiber.push_back(std::move(q));
  }
  return fiber;
}

std::vector<EvalPoint> fiber_over_rg(const RootDatum& d, const EvalPoint& p) {
  return fiber_over_rg(weyl_group(d), p);
}

bool fiber_invariants_agree(const RootDatum& d, const std::vector<EvalPoint>& fiber,
                            std::int64_t height_bound) {
  if (fiber.empty()) return true;
  const WeylGroup w = weyl_group(d);
  for (const auto& lam : dominant_weights(d, height_bound)) {
    const LaurentPoly f = orbit_sum(w, DominantWeight::make(d, lam)).poly;
    const Coefficient v0 = evaluate_poly(fiber.front(), f);
    for (std::size_t i = 1; i < fiber.size(); ++i)
      if (evaluate_poly(fiber[i], f) != v0) return false;
  }
  return true;
}

StabilizerReport stabilizer_check(const RootDatum& d, const EvalPoint& p) {
  const SupportDesc s = support(p);
  if (!s.connected) throw InputError("stabilizer check needs a point with connected support");
  StabilizerReport rep;
  const WeylGroup w = weyl_group(d);
  rep.weyl_order = w.order();
  for (const auto& g : w.elements()) {
    const EvalPoint q = weyl_translate(g, p);
    if (q == p) rep.geometric.push_back(g);
    if (ideal_equal(q, p)) rep.ideal.push_back(g);
  }
  rep.levi = centralizer_subsystem(d, s.kernel_lattice);
  const std::set<WeylMatrix> geo(rep.geometric.begin(), rep.geometric.end());
  const std::set<WeylMatrix> ide(rep.ideal.begin(), rep.ideal.end());
  const auto& le = rep.levi.weyl_subgroup.elements();
  const std::set<WeylMatrix> lev(le.begin(), le.end());
  rep.all_equal = geo == ide && ide == lev;
  return rep;
}

bool unique_lift_check(const RootDatum& d, const EvalPoint& p) {
  const SupportDesc s = support(p);
  if (!s.connected) throw InputError("unique lift check needs connected support");
  for (const auto& r : all_roots(d))
    if (!is_member(s.kernel_lattice, to_int_vector(r.root)))
      throw InputError("unique lift check needs every root in the support kernel");
  return fiber_over_rg(d, p).size() == 1;
}

}  // namespace reprings
