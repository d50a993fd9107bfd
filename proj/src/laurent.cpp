#include "reprings/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "reprings/errors.hpp"

namespace reprings {

LaurentPoly LaurentPoly::monomial(const Exponent& n, const Coefficient& c) {
  LaurentPoly p(n.size());
  if (!c.is_zero()) p.terms_.emplace(n, c);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Coefficient& c) {
  return monomial(Exponent(rank, 0), c);
}

LaurentPoly monomial(const Exponent& n, const Coefficient& c) { return LaurentPoly::monomial(n, c); }

Coefficient LaurentPoly::coefficient(const Exponent& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Coefficient() : it->second;
}

void LaurentPoly::add_term(const Exponent& n, const Coefficient& c) {
  if (n.size() != rank_) throw InputError("exponent length does not match polynomial rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const Exponent& LaurentPoly::leading_exponent() const {
  if (terms_.empty()) throw InputError("leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.rank_ != rank_) throw InputError("rank mismatch in polynomial addition");
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.rank_ != rank_) throw InputError("rank mismatch in polynomial subtraction");
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) throw InputError("rank mismatch in polynomial multiplication");
  LaurentPoly out(a.rank_);
  Exponent e(a.rank_);
  for (const auto& [n1, c1] : a.terms_) {
    for (const auto& [n2, c2] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = n1[i] + n2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [n, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = one(rank_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << '*';
    if (rank_ == 0) {
      os << '1';
      continue;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) os << '*';
      os << var << (i + 1) << '^' << n[i];
    }
  }
  return os.str();
}

LaurentPoly weyl_act(const WeylMatrix& w, const LaurentPoly& f) {
  if (w.size() != f.rank()) throw InputError("Weyl matrix size does not match polynomial rank");
  LaurentPoly out(f.rank());
  for (const auto& [n, c] : f.terms()) out.add_term(w.apply(n), c);
  return out;
}

LaurentPoly transform_exponents(const IntMatrix& m, const LaurentPoly& f) {
  if (m.cols() != f.rank()) throw InputError("exponent map does not match polynomial rank");
  LaurentPoly out(m.rows());
  for (const auto& [n, c] : f.terms()) out.add_term(to_small_vector(m.apply(to_int_vector(n))), c);
  return out;
}

namespace {

struct Box {
  Exponent lo, hi;
};

Box exponent_box(const LaurentPoly& f) {
  Box b{f.leading_exponent(), f.leading_exponent()};
  for (const auto& [n, c] : f.terms()) {
    for (std::size_t i = 0; i < n.size(); ++i) {
      b.lo[i] = std::min(b.lo[i], n[i]);
      b.hi[i] = std::max(b.hi[i], n[i]);
    }
  }
  return b;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InputError("division by the zero polynomial");
  if (num.rank() != den.rank()) throw InputError("rank mismatch in exact division");
  LaurentPoly quotient(num.rank());
  if (num.is_zero()) return quotient;
  // Every exponent of an exact quotient lies in this box, so a candidate
  // term outside it certifies non-divisibility and bounds the loop.
  const Box bn = exponent_box(num), bd = exponent_box(den);
  const std::size_t r = num.rank();
  const Exponent& lead_d = den.leading_exponent();
  const Coefficient lead_inv = den.terms().rbegin()->second.inverse();
  LaurentPoly rem = num;
  Exponent e(r);
  while (!rem.is_zero()) {
    const auto& [lead_r, c] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = lead_r[i] - lead_d[i];
      if (e[i] < bn.lo[i] - bd.lo[i] || e[i] > bn.hi[i] - bd.hi[i])
        throw InputError("polynomial is not divisible by the given denominator");
    }
    LaurentPoly t = LaurentPoly::monomial(e, c * lead_inv);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

Coefficient augmentation(const LaurentPoly& f) {
  Coefficient s;
  for (const auto& [n, c] : f.terms()) s += c;
  return s;
}

std::int64_t height(const Exponent& n) {
  std::int64_t h = 0;
  for (auto v : n) h = std::max(h, v < 0 ? -v : v);
  return h;
}

std::int64_t height(const LaurentPoly& f) {
  std::int64_t h = 0;
  for (const auto& [n, c] : f.terms()) h = std::max(h, height(n));
  return h;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t rank, const std::string& var)
      : s_(text), rank_(rank), var_(var) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial \"" + s_ + "\" at position " + std::to_string(pos_) +
                     ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::int64_t small_integer() {
    const bool neg = accept('-');
    const std::string d = digits();
    if (d.size() > 15) fail("exponent too large");
    const auto v = static_cast<std::int64_t>(std::stoll(d));
    return neg ? -v : v;
  }

  LaurentPoly expr() {
    LaurentPoly acc(rank_);
    bool negate = accept('-');
    if (!negate) accept('+');
    for (;;) {
      LaurentPoly t = term();
      if (negate) acc -= t;
      else acc += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        LaurentPoly d = power();
        if (d.size() != 1) fail("division only by a single nonzero term");
        acc = exact_divide(acc * LaurentPoly::one(rank_), d);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    if (accept('-')) return -power();
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    const std::int64_t e = small_integer();
    if (e >= 0) {
      if (e > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& [n, c] = *base.terms().begin();
    Exponent m(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) m[i] = n[i] * e;
    Coefficient ci = c.inverse(), cp(1L);
    for (std::int64_t k = 0; k < -e; ++k) cp *= ci;
    return LaurentPoly::monomial(m, cp);
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return LaurentPoly::constant(rank_, Coefficient(Rational(Integer(digits()))));
    }
    if (s_.compare(pos_, var_.size(), var_) == 0) {
      pos_ += var_.size();
      const std::string d = digits();
      const unsigned long idx = d.size() > 9 ? 0 : std::stoul(d);
      if (idx < 1 || idx > rank_) fail("variable index out of range");
      Exponent n(rank_, 0);
      n[idx - 1] = 1;
      return LaurentPoly::monomial(n);
    }
    fail("expected a number, a variable " + var_ + "i or '('");
  }

  std::string s_;
  std::size_t rank_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, std::size_t rank, const std::string& var) {
  return Parser(text, rank, var).parse();
}

}  // namespace reprings
