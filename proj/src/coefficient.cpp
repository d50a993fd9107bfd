#include "reprings/coefficient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "reprings/errors.hpp"

namespace reprings {

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw InputError("euler_phi(0)");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InvariantViolation("cyclotomic division left a remainder");
  return q;
}

// Dense rational polynomials used for reduction and inversion.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPoly& p) {
  QPoly out;
  out.reserve(p.size());
  for (auto c : p) out.emplace_back(static_cast<long>(c));
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// quotient and remainder; divisor nonzero
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

// Reduce a dense polynomial modulo the monic integer polynomial phi.
std::vector<Rational> reduce_mod(QPoly a, const IntPoly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * static_cast<long>(phi[j]);
  }
  a.resize(deg, Rational(0));
  return a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw InputError("cyclotomic polynomial of order 0");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::map<std::uint64_t, IntPoly> phi;
  for (auto d : divisors) {
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto e : divisors) {
      if (e >= d) break;
      if (d % e == 0) p = divide_monic(p, phi.at(e));
    }
    phi[d] = std::move(p);
  }
  return phi.at(m);
}

Coefficient Coefficient::zeta(std::uint64_t order, std::int64_t power) {
  if (order == 0) throw InputError("zeta of order 0");
  const auto m = static_cast<std::int64_t>(order);
  std::int64_t k = power % m;
  if (k < 0) k += m;
  QPoly x(static_cast<std::size_t>(k) + 1, Rational(0));
  x[static_cast<std::size_t>(k)] = 1;
  return from_coords(order, reduce_mod(std::move(x), cyclotomic_polynomial(order)));
}

Coefficient Coefficient::from_coords(std::uint64_t order, std::vector<Rational> coords) {
  if (order == 0) throw InputError("cyclotomic order 0");
  if (coords.size() != euler_phi(order))
    throw InputError("cyclotomic coordinates must have length phi(order)");
  Coefficient c;
  c.order_ = order;
  c.coords_ = std::move(coords);
  for (auto& q : c.coords_) q.canonicalize();
  return c;
}

bool Coefficient::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool Coefficient::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational Coefficient::rational_value() const {
  if (!is_rational()) throw InputError("coefficient " + to_string() + " is not rational");
  return coords_.front();
}

Coefficient Coefficient::promote(std::uint64_t target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw InputError("cannot promote to a non-multiple order");
  const std::uint64_t step = target / order_;
  QPoly x(step * (coords_.size() - 1) + 1, Rational(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) x[k * step] = coords_[k];
  return from_coords(target, reduce_mod(std::move(x), cyclotomic_polynomial(target)));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw InputError("inverse of zero coefficient");
  if (order_ == 1) return Coefficient(Rational(1) / coords_[0]);
  // extended Euclid: s * a + t * phi = g, g a nonzero constant
  const IntPoly phi_int = cyclotomic_polynomial(order_);
  QPoly r0 = to_qpoly(phi_int), r1 = coords_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InvariantViolation("cyclotomic element shares a factor with Phi_M");
  const Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return from_coords(order_, reduce_mod(std::move(s1), phi_int));
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  const std::uint64_t m = std::lcm(order_, o.order_);
  if (m != order_) *this = promote(m);
  const Coefficient b = o.promote(m);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (order_ == 1 && o.order_ == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  const std::uint64_t m = std::lcm(order_, o.order_);
  const Coefficient a = promote(m);
  const Coefficient b = o.promote(m);
  *this = from_coords(m, reduce_mod(mul(a.coords_, b.coords_), cyclotomic_polynomial(m)));
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  for (auto& q : c.coords_) q = -q;
  return c;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  const std::uint64_t m = std::lcm(a.order_, b.order_);
  return a.promote(m).coords_ == b.promote(m).coords_;
}

std::string Coefficient::to_string() const {
  if (is_rational()) return coords_[0].get_str();
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[k].get_str();
    if (k > 0) os << "*zeta(" << order_ << ")^" << k;
  }
  os << ')';
  return os.str();
}

}  // namespace reprings
