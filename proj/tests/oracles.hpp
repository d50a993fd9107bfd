#pragma once

// Reference computations used only by the tests. Each one is written
// independently of the library routine it checks, usually by the most
// direct (and slowest) method available.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mat = std::vector<std::vector<mpz_class>>;
using IVec = std::vector<std::int64_t>;

inline Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Mat m(rows, std::vector<mpz_class>(cols));
  for (auto& r : m)
    for (auto& x : r) x = dist(rng);
  return m;
}

// Cofactor-free determinant by exact rational elimination.
inline mpz_class det(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d.get_num();
}

// Invariant factors via determinantal divisors: d_k = gcd of all k x k minors.
inline std::vector<mpz_class> determinantal_invariants(const Mat& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Mat minor;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<mpz_class> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          minor.push_back(row);
        }
        mpz_class dv = det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dv.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Smith diagonal by elementary operations: clear the first row and column
// with Euclid steps using the first nonzero entry, recurse, then repair
// divisibility with (a, b) -> (gcd, lcm).
inline std::vector<mpz_class> elementary_smith_diagonal(Mat a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // move some nonzero entry to (t, t)
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          std::swap(a[i], a[t]);
          for (auto& r : a) std::swap(r[j], r[t]);
          found = true;
        }
    if (!found) break;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (a[i][t] != 0) {
          mpz_class q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[i], a[t]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (a[t][j] != 0) {
          mpz_class q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0)
            for (auto& r : a) std::swap(r[j], r[t]);
        }
      }
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) dirty = true;
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // divisibility repair
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// Row Hermite form by naive Euclid on each column, floor-reducing above pivots.
inline Mat naive_hermite(Mat a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[best], a[pr]);
      bool others = false;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pr][c].get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[pr][j];
        if (a[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (a[pr][c] == 0) continue;
    if (a[pr][c] < 0)
      for (auto& x : a[pr]) x = -x;
    for (std::size_t i = 0; i < pr; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pr][c].get_mpz_t());
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[pr][j];
    }
    ++pr;
  }
  return a;
}

// All v in the box [-b, b]^n such that k v lies in the integer span of gens
// for some 1 <= k <= kmax, tested by exhaustive search over coefficient boxes.
inline std::set<IVec> saturation_by_box(const std::vector<IVec>& gens, std::size_t n, int b, int kmax,
                                        int cbox) {
  std::set<IVec> span;
  const std::size_t g = gens.size();
  std::vector<int> c(g, -cbox);
  for (;;) {
    IVec v(n, 0);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * gens[i][j];
    span.insert(v);
    std::size_t i = 0;
    while (i < g && ++c[i] > cbox) c[i++] = -cbox;
    if (i == g) break;
  }
  std::set<IVec> out;
  IVec v(n, -b);
  for (;;) {
    for (int k = 1; k <= kmax; ++k) {
      IVec w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = k * v[j];
      if (span.count(w)) {
        out.insert(v);
        break;
      }
    }
    std::size_t j = 0;
    while (j < n && ++v[j] > b) v[j++] = -b;
    if (j == n) break;
  }
  return out;
}

// Closure of a weight under the simple reflections s_i(v) = v - <v, coroot_i> root_i.
inline std::set<IVec> reflection_orbit(const std::vector<IVec>& roots, const std::vector<IVec>& coroots,
                                       const IVec& v) {
  std::set<IVec> seen{v};
  std::vector<IVec> stack{v};
  while (!stack.empty()) {
    IVec x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < x.size(); ++j) p += x[j] * coroots[i][j];
      IVec y = x;
      for (std::size_t j = 0; j < x.size(); ++j) y[j] -= p * roots[i][j];
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::uint64_t weyl_order_closed_form(char type, std::uint64_t n) {
  switch (type) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'G': return 12;
    default: return 0;
  }
}

using Complex = std::complex<double>;

inline Complex root_of_unity(std::uint64_t m, std::int64_t k) {
  const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(t), std::sin(t)};
}

// Numeric value of sum_k c_k zeta_M^k.
inline Complex cyclotomic_value(std::uint64_t m, const std::vector<mpq_class>& coords) {
  Complex z = 0;
  for (std::size_t k = 0; k < coords.size(); ++k)
    z += coords[k].get_d() * root_of_unity(m, static_cast<std::int64_t>(k));
  return z;
}

inline bool close(Complex a, Complex b, double tol = 1e-7) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(a) + std::abs(b));
}

}  // namespace oracle
