#include "reprings/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "reprings/errors.hpp"

namespace reprings {

namespace {

// grevlex restricted to variables [from, to); returns -1, 0, 1
int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  const std::size_t k = std::min(block, n);
  if (k > 0) {
    const int c = grevlex_cmp(a, b, 0, k);
    if (c != 0) return c > 0;
  }
  return grevlex_cmp(a, b, k, n) > 0;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, MonomialOrder order) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return term(m, 1, order);
}

Polynomial Polynomial::constant(std::size_t nvars, const mpq_class& c, MonomialOrder order) {
  return term(Monomial(nvars, 0), c, order);
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c, MonomialOrder order) {
  Polynomial p(m.size(), order);
  p.add_term(m, c);
  return p;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.size() != nvars_) throw InputError("monomial length does not match the variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  Polynomial p(nvars_, order);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const mpq_class lc = leading_coefficient();
  for (auto& [m, c] : p.terms_) c /= lc;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InputError("variable count mismatch");
  Polynomial out(a.nvars_, a.order_);
  for (const auto& [m, c] : b.terms_) out += a.scaled(m, c);
  return out;
}

Polynomial Polynomial::scaled(const Monomial& m, const mpq_class& c) const {
  Polynomial p(nvars_, order_);
  if (c == 0) return p;
  Monomial e(nvars_);
  for (const auto& [t, v] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = t[i] + m[i];
    // multiplying by a monomial preserves the order, so hinted insertion at the end is exact
    p.terms_.emplace_hint(p.terms_.end(), e, v * c);
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, 1, order_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const mpq_class mag = neg ? mpq_class(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      factors.push_back(m[i] == 1 ? names.at(i) : names.at(i) + "^" + std::to_string(m[i]));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

namespace {

Monomial quotient_monomial(const Monomial& num, const Monomial& den) {
  Monomial m(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) m[i] = num[i] - den[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::int64_t degree(const Monomial& m) {
  std::int64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis, std::size_t skip) {
  Polynomial r(p.nvars(), p.order());
  while (!p.is_zero()) {
    const Monomial lt = p.leading_monomial();
    const mpq_class lc = p.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].is_zero()) continue;
      const Polynomial& g = basis[i];
      if (!divides(g.leading_monomial(), lt)) continue;
      p -= g.scaled(quotient_monomial(lt, g.leading_monomial()), lc / g.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt, lc);
      p.add_term(lt, -lc);
    }
  }
  return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  return f.scaled(quotient_monomial(l, f.leading_monomial()), 1 / f.leading_coefficient()) -
         g.scaled(quotient_monomial(l, g.leading_monomial()), 1 / g.leading_coefficient());
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return basis.size() == 1 && degree(basis.front().leading_monomial()) == 0;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars) throw InputError("variable count mismatch in normal form");
  return reduce_full(f.with_order(order), basis, kNone);
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens, std::size_t nvars, MonomialOrder order,
                       std::size_t max_steps) {
  std::vector<Polynomial> g;
  for (const auto& f : gens) {
    if (f.nvars() != nvars) throw InputError("generator has the wrong number of variables");
    Polynomial h = reduce_full(f.with_order(order), g, kNone);
    if (!h.is_zero()) g.push_back(h.monic());
  }

  struct Pair {
    std::size_t i, j;
    std::int64_t deg;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].is_zero()) continue;
      pairs.push_back({i, k, degree(monomial_lcm(g[i].leading_monomial(), g[k].leading_monomial()))});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs(k);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
    const Pair pr = *best;
    pairs.erase(best);
    if (g[pr.i].is_zero() || g[pr.j].is_zero()) continue;
    if (coprime(g[pr.i].leading_monomial(), g[pr.j].leading_monomial())) continue;
    if (++steps > max_steps) throw ResourceError("Groebner basis computation exceeded its step cap");
    Polynomial h = reduce_full(s_polynomial(g[pr.i], g[pr.j]), g, kNone);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    add_pairs(g.size() - 1);
  }

  // minimalize, then interreduce
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i)
    minimal[i] = reduce_full(minimal[i], minimal, i).monic();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  return GroebnerBasis{nvars, order, std::move(minimal)};
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return {};
  const std::size_t n = gb.nvars;
  std::vector<std::int32_t> bound(n, -1);
  for (const auto& f : gb.basis) {
    const Monomial& lm = f.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (auto b : bound)
    if (b < 0) throw InputError("quotient ring is not finite dimensional");

  std::vector<Monomial> out;
  Monomial m(n, 0);
  for (;;) {
    const bool standard = std::none_of(gb.basis.begin(), gb.basis.end(),
                                       [&](const Polynomial& f) { return divides(f.leading_monomial(), m); });
    if (standard) out.push_back(m);
    std::size_t i = 0;
    while (i < n) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.order.greater(b, a); });
  return out;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!gb.normal_form(s_polynomial(gb.basis[i], gb.basis[j])).is_zero()) return false;
  return true;
}

}  // namespace reprings
