#pragma once

// Exact integer lattice arithmetic: Hermite and Smith normal forms,
// integer kernels, saturation and finitely generated abelian quotients.
// All entries are GMP integers; nothing here can overflow.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reprings {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  IntVector apply(const IntVector& v) const;

  // Fraction-free Gaussian elimination (Bareiss). Square matrices only.
  Integer determinant() const;

  // Row operations used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix V;  // unimodular, cols x cols
};

struct HermiteForm {
  IntMatrix H;  // row echelon, positive pivots, 0 <= entry < pivot above each pivot
  IntMatrix U;  // unimodular with H = U * A
  std::size_t rank = 0;
};

// D = U * A * V. Pivot choice: smallest nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

HermiteForm hermite_normal_form(const IntMatrix& a);

// Inverse of a unimodular matrix; throws InputError when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank = 0, std::vector<IntVector> generators = {});

  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  // Row HNF of the generators with zero rows dropped.
  const std::vector<IntVector>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  IntMatrix generator_matrix() const;
  IntMatrix basis_matrix() const;

  // Canonical coset representative of v modulo this lattice.
  IntVector reduce(IntVector v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> generators_;
  std::vector<IntVector> basis_;
};

class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
  bool torsion_free() const { return invariant_factors_.empty(); }
  bool trivial() const { return free_rank_ == 0 && invariant_factors_.empty(); }
  Integer torsion_order() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.invariant_factors_ == b.invariant_factors_;
  }

  // e.g. "Z^2 x Z/2 x Z/4", "0" for the trivial group
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> invariant_factors_;
};

// Saturated integer kernel {v : A v = 0}.
Sublattice kernel(const IntMatrix& a);

// Smallest sublattice containing s with torsion-free quotient.
Sublattice saturate(const Sublattice& s);
bool is_saturated(const Sublattice& s);

// Z^ambient_rank / <s>.
FinAbGroup quotient_group(std::size_t ambient_rank, const Sublattice& s);

bool is_member(const Sublattice& s, const IntVector& v);

// Helpers shared by the higher modules.
IntVector to_int_vector(const std::vector<std::int64_t>& v);
// Throws InputError if an entry does not fit in 64 bits.
std::vector<std::int64_t> to_small_vector(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);

}  // namespace reprings
