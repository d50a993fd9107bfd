#include "reprings/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "reprings/errors.hpp"

namespace reprings {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InputError("IntMatrix: entry count does not match rows x cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw InputError("IntMatrix::apply: length mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      found = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = -floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = -floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return {std::move(u), std::move(d), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = -floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = -floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold a row in.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  HermiteForm hf = hermite_normal_form(a);
  if (!(hf.H == IntMatrix::identity(a.rows())))
    throw InputError("matrix is not unimodular");
  return hf.U;
}

Sublattice::Sublattice(std::size_t ambient_rank, std::vector<IntVector> generators)
    : ambient_rank_(ambient_rank), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != ambient_rank_)
      throw InputError("Sublattice: generator length differs from ambient rank");
  HermiteForm hf = hermite_normal_form(generator_matrix());
  basis_.reserve(hf.rank);
  for (std::size_t i = 0; i < hf.rank; ++i) basis_.push_back(hf.H.row(i));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Sublattice(ambient_rank, std::move(gens));
}

IntMatrix Sublattice::generator_matrix() const {
  return IntMatrix::from_rows(ambient_rank_, generators_);
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_rows(ambient_rank_, basis_); }

IntVector Sublattice::reduce(IntVector v) const {
  if (v.size() != ambient_rank_) throw InputError("Sublattice::reduce: length mismatch");
  for (const auto& b : basis_) {
    std::size_t c = 0;
    while (b[c] == 0) ++c;
    Integer q = floor_div(v[c], b[c]);
    if (q == 0) continue;
    for (std::size_t j = c; j < ambient_rank_; ++j) v[j] -= q * b[j];
  }
  return v;
}

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), invariant_factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (invariant_factors_[i] < 2) throw InputError("FinAbGroup: invariant factor below 2");
    if (i > 0 && !mpz_divisible_p(invariant_factors_[i].get_mpz_t(),
                                  invariant_factors_[i - 1].get_mpz_t()))
      throw InputError("FinAbGroup: invariant factors do not form a divisibility chain");
  }
}

Integer FinAbGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors_) o *= d;
  return o;
}

std::string FinAbGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : invariant_factors_) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

Sublattice kernel(const IntMatrix& a) {
  // Rows of U past the rank of H = U * A^T span the left kernel of A^T.
  HermiteForm hf = hermite_normal_form(a.transpose());
  std::vector<IntVector> gens;
  for (std::size_t i = hf.rank; i < hf.U.rows(); ++i) gens.push_back(hf.U.row(i));
  return Sublattice(a.cols(), std::move(gens));
}

Sublattice saturate(const Sublattice& s) {
  Sublattice orth = kernel(s.basis_matrix());
  return kernel(orth.basis_matrix());
}

bool is_saturated(const Sublattice& s) { return saturate(s) == s; }

FinAbGroup quotient_group(std::size_t ambient_rank, const Sublattice& s) {
  if (s.ambient_rank() != ambient_rank)
    throw InputError("quotient_group: ambient rank mismatch");
  SmithForm sf = smith_normal_form(s.basis_matrix());
  std::size_t nonzero = 0;
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < std::min(sf.D.rows(), sf.D.cols()); ++i) {
    const Integer& d = sf.D(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) factors.push_back(d);
  }
  return FinAbGroup(ambient_rank - nonzero, std::move(factors));
}

bool is_member(const Sublattice& s, const IntVector& v) {
  if (v.size() != s.ambient_rank()) throw InputError("is_member: length mismatch");
  IntVector r = v;
  for (const auto& b : s.basis()) {
    std::size_t c = 0;
    while (b[c] == 0) ++c;
    if (!mpz_divisible_p(r[c].get_mpz_t(), b[c].get_mpz_t())) return false;
    Integer q = r[c] / b[c];
    for (std::size_t j = c; j < r.size(); ++j) r[j] -= q * b[j];
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::vector<std::int64_t> to_small_vector(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InputError("integer does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace reprings
