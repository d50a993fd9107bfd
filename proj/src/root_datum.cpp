#include "reprings/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

#include <json.hpp>

#include "reprings/errors.hpp"

namespace reprings {

std::int64_t dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

WeylMatrix::WeylMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

WeylMatrix::WeylMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InputError("WeylMatrix: wrong entry count");
}

WeylMatrix WeylMatrix::identity(std::size_t n) {
  WeylMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

WeylMatrix WeylMatrix::reflection(const Weight& root, const Weight& coroot) {
  const std::size_t n = root.size();
  if (coroot.size() != n) throw InputError("reflection: root/coroot length mismatch");
  WeylMatrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root[i] * coroot[j];
  return m;
}

Weight WeylMatrix::apply(const Weight& v) const {
  if (v.size() != n_) throw InputError("WeylMatrix::apply: length mismatch");
  Weight out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

WeylMatrix WeylMatrix::transpose() const {
  WeylMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix WeylMatrix::to_int_matrix() const {
  std::vector<Integer> e;
  e.reserve(entries_.size());
  for (auto x : entries_) e.emplace_back(static_cast<long>(x));
  return IntMatrix(n_, n_, std::move(e));
}

WeylMatrix WeylMatrix::inverse() const {
  IntMatrix inv = inverse_unimodular(to_int_matrix());
  WeylMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = inv(i, j).get_si();
  return out;
}

bool WeylMatrix::is_identity() const { return *this == identity(n_); }

WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b) {
  if (a.n_ != b.n_) throw InputError("WeylMatrix product: size mismatch");
  WeylMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool RootPair::positive() const {
  return std::any_of(simple_coordinates.begin(), simple_coordinates.end(),
                     [](std::int64_t c) { return c > 0; });
}

RootDatum::RootDatum(std::size_t rank, std::vector<Weight> simple_roots,
                     std::vector<Weight> simple_coroots, std::string name)
    : rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      name_(std::move(name)) {
  if (simple_roots_.size() != simple_coroots_.size())
    throw InputError("root datum: simple root and coroot counts differ");
  for (const auto& v : simple_roots_)
    if (v.size() != rank_) throw InputError("root datum: simple root has wrong length");
  for (const auto& v : simple_coroots_)
    if (v.size() != rank_) throw InputError("root datum: simple coroot has wrong length");
  const auto c = cartan_matrix();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i][i] != 2)
      throw InputError("root datum: pairing of simple root " + std::to_string(i + 1) +
                       " with its coroot is not 2");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw InputError("root datum: positive off-diagonal Cartan entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw InputError("root datum: Cartan matrix zero pattern is not symmetric");
    }
  }
}

std::vector<std::vector<std::int64_t>> RootDatum::cartan_matrix() const {
  const std::size_t s = simple_roots_.size();
  std::vector<std::vector<std::int64_t>> c(s, std::vector<std::int64_t>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) c[i][j] = dot(simple_roots_[i], simple_coroots_[j]);
  return c;
}

WeylMatrix RootDatum::simple_reflection(std::size_t i) const {
  return WeylMatrix::reflection(simple_roots_.at(i), simple_coroots_.at(i));
}

namespace {

using Cartan = std::vector<std::vector<std::int64_t>>;

Cartan chain_cartan(std::size_t n) {
  Cartan c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

Cartan cartan_for(const std::string& type, std::size_t n) {
  if (type == "A") {
    if (n < 1) throw InputError("type A needs rank >= 1");
    return chain_cartan(n);
  }
  if (type == "B" || type == "C") {
    if (n < 2) throw InputError("types B and C need rank >= 2");
    Cartan c = chain_cartan(n);
    // last simple root short for B, long for C
    if (type == "B")
      c[n - 2][n - 1] = -2;
    else
      c[n - 1][n - 2] = -2;
    return c;
  }
  if (type == "D") {
    if (n < 3) throw InputError("type D needs rank >= 3");
    Cartan c = chain_cartan(n);
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    return c;
  }
  if (type == "G2" || type == "G") {
    if (n != 2) throw InputError("type G2 has rank 2");
    return {{2, -1}, {-3, 2}};
  }
  throw InputError("unknown root system type '" + type + "'");
}

Weight unit(std::size_t n, std::size_t i) {
  Weight e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

RootDatum standard_datum(const std::string& type_label, std::size_t rank, Variant variant) {
  const Cartan c = cartan_for(type_label, rank);
  std::vector<Weight> roots, coroots;
  for (std::size_t j = 0; j < rank; ++j) {
    if (variant == Variant::simply_connected) {
      // weight-basis chart: coroots are the standard basis, roots the Cartan rows
      roots.push_back(c[j]);
      coroots.push_back(unit(rank, j));
    } else {
      Weight col(rank);
      for (std::size_t i = 0; i < rank; ++i) col[i] = c[i][j];
      roots.push_back(unit(rank, j));
      coroots.push_back(std::move(col));
    }
  }
  std::string label = (type_label == "G" ? std::string("G") : type_label);
  if (label != "G2") label += std::to_string(rank);
  label += (variant == Variant::simply_connected ? "_sc" : "_ad");
  return RootDatum(rank, std::move(roots), std::move(coroots), label);
}

RootDatum gl_datum(std::size_t n) {
  if (n < 1) throw InputError("GL_n needs n >= 1");
  std::vector<Weight> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Weight a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    roots.push_back(a);
  }
  auto coroots = roots;
  return RootDatum(n, std::move(roots), std::move(coroots), "GL" + std::to_string(n));
}

RootDatum torus_datum(std::size_t rank) {
  return RootDatum(rank, {}, {}, "T" + std::to_string(rank));
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<Weight> roots, coroots;
  auto embed = [n](const Weight& v, std::size_t offset) {
    Weight out(n, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  for (std::size_t i = 0; i < a.semisimple_rank(); ++i) {
    roots.push_back(embed(a.simple_roots()[i], 0));
    coroots.push_back(embed(a.simple_coroots()[i], 0));
  }
  for (std::size_t i = 0; i < b.semisimple_rank(); ++i) {
    roots.push_back(embed(b.simple_roots()[i], a.rank()));
    coroots.push_back(embed(b.simple_coroots()[i], a.rank()));
  }
  std::string name;
  if (a.rank() == 0)
    name = b.name();
  else if (b.rank() == 0)
    name = a.name();
  else
    name = a.name() + " x " + b.name();
  return RootDatum(n, std::move(roots), std::move(coroots), std::move(name));
}

Variant parse_variant(const std::string& text) {
  if (text == "simply_connected" || text == "sc") return Variant::simply_connected;
  if (text == "adjoint" || text == "ad") return Variant::adjoint;
  throw InputError("unknown variant '" + text + "' (expected simply_connected or adjoint)");
}

std::string to_string(Variant v) {
  return v == Variant::simply_connected ? "simply_connected" : "adjoint";
}

std::vector<RootPair> all_roots(const RootDatum& d, std::size_t cap) {
  const std::size_t s = d.semisimple_rank();
  std::map<Weight, RootPair> seen;
  std::deque<Weight> queue;
  for (std::size_t i = 0; i < s; ++i) {
    RootPair p{d.simple_roots()[i], d.simple_coroots()[i], unit(s, i)};
    if (seen.emplace(p.root, p).second) queue.push_back(p.root);
  }
  while (!queue.empty()) {
    const RootPair cur = seen.at(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < s; ++i) {
      const auto& a = d.simple_roots()[i];
      const auto& ac = d.simple_coroots()[i];
      const std::int64_t k = dot(cur.root, ac);
      const std::int64_t kc = dot(a, cur.coroot);
      RootPair next = cur;
      for (std::size_t j = 0; j < d.rank(); ++j) {
        next.root[j] -= k * a[j];
        next.coroot[j] -= kc * ac[j];
      }
      next.simple_coordinates[i] -= k;
      if (seen.count(next.root)) continue;
      if (seen.size() >= cap)
        throw ResourceError("root closure exceeded cap of " + std::to_string(cap) +
                            " (datum not of finite type?)");
      seen.emplace(next.root, next);
      queue.push_back(next.root);
    }
  }
  std::vector<RootPair> positive;
  for (auto& [root, p] : seen) {
    const bool pos = std::all_of(p.simple_coordinates.begin(), p.simple_coordinates.end(),
                                 [](std::int64_t c) { return c >= 0; });
    const bool neg = std::all_of(p.simple_coordinates.begin(), p.simple_coordinates.end(),
                                 [](std::int64_t c) { return c <= 0; });
    if (!pos && !neg) throw InputError("root closure produced a root of mixed sign");
    if (pos) positive.push_back(p);
  }
  auto height = [](const RootPair& p) {
    return std::accumulate(p.simple_coordinates.begin(), p.simple_coordinates.end(),
                           std::int64_t{0});
  };
  std::sort(positive.begin(), positive.end(), [&](const RootPair& x, const RootPair& y) {
    const auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x.root < y.root;
  });
  if (2 * positive.size() != seen.size())
    throw InputError("root closure is not symmetric under negation");
  std::vector<RootPair> out = positive;
  for (const auto& p : positive) {
    RootPair n = p;
    for (auto& x : n.root) x = -x;
    for (auto& x : n.coroot) x = -x;
    for (auto& x : n.simple_coordinates) x = -x;
    if (!seen.count(n.root)) throw InputError("root closure is not symmetric under negation");
    out.push_back(std::move(n));
  }
  return out;
}

Weight two_rho(const RootDatum& d) {
  Weight r(d.rank(), 0);
  for (const auto& p : all_roots(d)) {
    if (!p.positive()) continue;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += p.root[i];
  }
  return r;
}

WeylGroup::WeylGroup(std::size_t rank, std::vector<WeylMatrix> elements, std::vector<int> signs,
                     std::vector<WeylMatrix> generators)
    : rank_(rank),
      elements_(std::move(elements)),
      signs_(std::move(signs)),
      generators_(std::move(generators)) {
  if (signs_.size() != elements_.size()) throw InputError("WeylGroup: sign count mismatch");
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

int WeylGroup::sign_of(const WeylMatrix& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw InputError("sign_of: element not in group");
  return signs_[it->second];
}

bool WeylGroup::same_elements(const WeylGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool WeylGroup::is_subgroup_of(const WeylGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const WeylMatrix& w) { return other.contains(w); });
}

WeylGroup generate_reflection_group(std::size_t rank, const std::vector<WeylMatrix>& reflections,
                                    std::size_t cap) {
  std::vector<WeylMatrix> elements{WeylMatrix::identity(rank)};
  std::vector<int> signs{1};
  std::set<WeylMatrix> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : reflections) {
      WeylMatrix next = elements[head] * s;
      if (seen.count(next)) continue;
      if (elements.size() >= cap)
        throw ResourceError("Weyl group order exceeded cap of " + std::to_string(cap));
      seen.insert(next);
      signs.push_back(-signs[head]);
      elements.push_back(std::move(next));
    }
  }
  return WeylGroup(rank, std::move(elements), std::move(signs), reflections);
}

WeylGroup weyl_group(const RootDatum& d, std::size_t cap) {
  std::vector<WeylMatrix> gens;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) gens.push_back(d.simple_reflection(i));
  return generate_reflection_group(d.rank(), gens, cap);
}

std::vector<Weight> orbit(const WeylGroup& w, const Weight& v) {
  if (v.size() != w.rank()) throw InputError("orbit: vector length differs from rank");
  std::set<Weight> images;
  for (const auto& g : w.elements()) images.insert(g.apply(v));
  return {images.begin(), images.end()};
}

WeylGroup stabilizer(const WeylGroup& w, const Weight& v) {
  if (v.size() != w.rank()) throw InputError("stabilizer: vector length differs from rank");
  std::vector<WeylMatrix> elems;
  std::vector<int> signs;
  for (std::size_t i = 0; i < w.order(); ++i) {
    if (w.elements()[i].apply(v) != v) continue;
    elems.push_back(w.elements()[i]);
    signs.push_back(w.signs()[i]);
  }
  return WeylGroup(w.rank(), std::move(elems), std::move(signs), {});
}

bool is_dominant(const RootDatum& d, const Weight& v) {
  if (v.size() != d.rank()) throw InputError("weight length differs from rank");
  return std::all_of(d.simple_coroots().begin(), d.simple_coroots().end(),
                     [&](const Weight& c) { return dot(v, c) >= 0; });
}

Weight dominant_representative(const RootDatum& d, Weight v) {
  if (v.size() != d.rank()) throw InputError("weight length differs from rank");
  for (std::size_t steps = 0; steps < kDefaultWeylCap; ++steps) {
    bool moved = false;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      const std::int64_t p = dot(v, d.simple_coroots()[i]);
      if (p >= 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= p * d.simple_roots()[i][j];
      moved = true;
      break;
    }
    if (!moved) return v;
  }
  throw ResourceError("dominant_representative did not terminate");
}

Sublattice coroot_lattice(const RootDatum& d) {
  std::vector<IntVector> gens;
  for (const auto& p : all_roots(d)) gens.push_back(to_int_vector(p.coroot));
  return Sublattice(d.rank(), std::move(gens));
}

FinAbGroup fundamental_group(const RootDatum& d) {
  return quotient_group(d.rank(), coroot_lattice(d));
}

bool is_derived_simply_connected(const RootDatum& d) {
  return fundamental_group(d).torsion_free();
}

LeviDatum centralizer_subsystem(const RootDatum& d, const Sublattice& k) {
  if (k.ambient_rank() != d.rank())
    throw InputError("centralizer_subsystem: lattice rank differs from datum rank");
  LeviDatum levi;
  levi.parent = d;
  levi.kernel_lattice = saturate(k);
  levi.saturated_input = (levi.kernel_lattice == k);
  const auto roots = all_roots(d);
  std::vector<WeylMatrix> reflections;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!is_member(levi.kernel_lattice, to_int_vector(roots[i].root))) continue;
    levi.root_subset.push_back(i);
    levi.roots.push_back(roots[i]);
    reflections.push_back(WeylMatrix::reflection(roots[i].root, roots[i].coroot));
  }
  levi.weyl_subgroup = generate_reflection_group(d.rank(), reflections);
  return levi;
}

RootDatum LeviDatum::as_root_datum() const {
  std::vector<const RootPair*> positive;
  for (const auto& r : roots)
    if (r.positive()) positive.push_back(&r);
  std::set<Weight> positive_set;
  for (const auto* r : positive) positive_set.insert(r->root);
  std::vector<Weight> simple, simple_co;
  for (const auto* r : positive) {
    bool decomposable = false;
    for (const auto* a : positive) {
      Weight rest = r->root;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= a->root[j];
      if (positive_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    simple.push_back(r->root);
    simple_co.push_back(r->coroot);
  }
  return RootDatum(parent.rank(), std::move(simple), std::move(simple_co),
                   parent.name() + "_levi");
}

RootDatum datum_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("root datum file: ") + e.what());
  }
  try {
    const auto rank = j.at("rank").get<std::int64_t>();
    if (rank < 0) throw InputError("root datum file: negative rank");
    auto roots = j.at("simple_roots").get<std::vector<Weight>>();
    auto coroots = j.at("simple_coroots").get<std::vector<Weight>>();
    std::string name = j.value("name", std::string{});
    return RootDatum(static_cast<std::size_t>(rank), std::move(roots), std::move(coroots),
                     std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("root datum file: ") + e.what());
  }
}

std::string datum_to_json_text(const RootDatum& d) {
  nlohmann::json j;
  j["rank"] = d.rank();
  j["simple_roots"] = d.simple_roots();
  j["simple_coroots"] = d.simple_coroots();
  j["name"] = d.name();
  return j.dump();
}

}  // namespace reprings
