#pragma once

// Root data in a fixed chart: X^*(T) and X_*(T) are both Z^rank and the
// perfect pairing is the dot product. Weyl groups are enumerated as
// integer matrices acting on X^*(T).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reprings/lattice.hpp"

namespace reprings {

using Weight = std::vector<std::int64_t>;

std::int64_t dot(const Weight& a, const Weight& b);

// Square integer matrix acting on character vectors by w * v.
class WeylMatrix {
 public:
  WeylMatrix() = default;
  explicit WeylMatrix(std::size_t n);
  WeylMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static WeylMatrix identity(std::size_t n);
  // s(x) = x - <x, coroot> root
  static WeylMatrix reflection(const Weight& root, const Weight& coroot);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  Weight apply(const Weight& v) const;
  WeylMatrix transpose() const;
  WeylMatrix inverse() const;
  IntMatrix to_int_matrix() const;
  bool is_identity() const;

  friend WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b);
  friend bool operator==(const WeylMatrix& a, const WeylMatrix& b) = default;
  friend auto operator<=>(const WeylMatrix& a, const WeylMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

enum class Variant { simply_connected, adjoint };

struct RootPair {
  Weight root;
  Weight coroot;
  // coordinates of the root in the basis of simple roots
  Weight simple_coordinates;
  bool positive() const;
};

class RootDatum {
 public:
  RootDatum() = default;
  // Validates pairing and generalized-Cartan conditions; throws InputError.
  RootDatum(std::size_t rank, std::vector<Weight> simple_roots, std::vector<Weight> simple_coroots,
            std::string name = {});

  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_roots_.size(); }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::string& name() const { return name_; }

  // C[i][j] = <simple_roots[i], simple_coroots[j]>
  std::vector<std::vector<std::int64_t>> cartan_matrix() const;
  WeylMatrix simple_reflection(std::size_t i) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.simple_roots_ == b.simple_roots_ &&
           a.simple_coroots_ == b.simple_coroots_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> simple_coroots_;
  std::string name_;
};

// type_label in {A, B, C, D, G2} (also accepts "G").
RootDatum standard_datum(const std::string& type_label, std::size_t rank, Variant variant);
RootDatum gl_datum(std::size_t n);
RootDatum torus_datum(std::size_t rank);
RootDatum product(const RootDatum& a, const RootDatum& b);

Variant parse_variant(const std::string& text);
std::string to_string(Variant v);

inline constexpr std::size_t kDefaultRootCap = 10000;
inline constexpr std::size_t kDefaultWeylCap = 1000000;

// Closure of the simple roots under simple reflections, positive roots first
// (sorted by height, then lexicographically), then their negatives.
std::vector<RootPair> all_roots(const RootDatum& d, std::size_t cap = kDefaultRootCap);

// Half the sum of the positive roots, doubled so it is integral.
Weight two_rho(const RootDatum& d);

class WeylGroup {
 public:
  WeylGroup() = default;
  WeylGroup(std::size_t rank, std::vector<WeylMatrix> elements, std::vector<int> signs,
            std::vector<WeylMatrix> generators);

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylMatrix>& elements() const { return elements_; }
  const std::vector<int>& signs() const { return signs_; }
  const std::vector<WeylMatrix>& generators() const { return generators_; }

  bool contains(const WeylMatrix& w) const { return index_.count(w) != 0; }
  // +1 or -1 (the determinant)
  int sign_of(const WeylMatrix& w) const;

  // Same element set, regardless of enumeration order.
  bool same_elements(const WeylGroup& other) const;
  bool is_subgroup_of(const WeylGroup& other) const;

 private:
  std::size_t rank_ = 0;
  std::vector<WeylMatrix> elements_;
  std::vector<int> signs_;
  std::vector<WeylMatrix> generators_;
  std::map<WeylMatrix, std::size_t> index_;
};

// Breadth-first closure of the reflection generators. Throws ResourceError
// once the order exceeds cap.
WeylGroup generate_reflection_group(std::size_t rank, const std::vector<WeylMatrix>& reflections,
                                    std::size_t cap = kDefaultWeylCap);
WeylGroup weyl_group(const RootDatum& d, std::size_t cap = kDefaultWeylCap);

// Distinct images w * v, sorted lexicographically.
std::vector<Weight> orbit(const WeylGroup& w, const Weight& v);
WeylGroup stabilizer(const WeylGroup& w, const Weight& v);

bool is_dominant(const RootDatum& d, const Weight& v);
// Repeatedly reflects through walls with negative pairing.
Weight dominant_representative(const RootDatum& d, Weight v);

FinAbGroup fundamental_group(const RootDatum& d);
bool is_derived_simply_connected(const RootDatum& d);

Sublattice coroot_lattice(const RootDatum& d);

struct LeviDatum {
  RootDatum parent;
  Sublattice kernel_lattice;        // saturated
  bool saturated_input = true;      // false when the supplied K had to be saturated
  std::vector<std::size_t> root_subset;  // indices into all_roots(parent)
  std::vector<RootPair> roots;
  WeylGroup weyl_subgroup;

  // Same lattices as the parent with roots restricted to root_subset.
  RootDatum as_root_datum() const;
};

LeviDatum centralizer_subsystem(const RootDatum& d, const Sublattice& k);

// Reads {"rank", "simple_roots", "simple_coroots", "name"}.
RootDatum datum_from_json_text(const std::string& text);
std::string datum_to_json_text(const RootDatum& d);

}  // namespace reprings
