#pragma once

// Incremental exact linear algebra over Q on sparse vectors indexed by an
// ordered key type. Each stored row remembers how it was combined from the
// inserted vectors, so membership queries also return coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace reprings {

template <class Key>
class RationalSpan {
 public:
  using Vec = std::map<Key, mpq_class>;
  using Combo = std::map<std::size_t, mpq_class>;

  // Returns true when v was independent of everything inserted so far.
  bool add(const Vec& v) {
    const std::size_t idx = inserted_++;
    auto [residual, combo] = reduce(v);
    if (residual.empty()) return false;
    // residual = v - sum combo_j * input_j
    Combo own{{idx, mpq_class(1)}};
    for (auto& [j, c] : combo) own[j] -= c;
    erase_zeros(own);
    const Key pivot = residual.rbegin()->first;
    rows_.emplace(pivot, Row{std::move(residual), std::move(own)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  bool contains(const Vec& v) const { return reduce(v).first.empty(); }

  // Coefficients c_j with v = sum c_j * input_j, if v lies in the span.
  std::optional<Combo> express(const Vec& v) const {
    auto [residual, combo] = reduce(v);
    if (!residual.empty()) return std::nullopt;
    return combo;
  }

  // Fully reduced remainder together with the combination that was subtracted.
  std::pair<Vec, Combo> reduce(Vec v) const {
    erase_zeros(v);
    Vec residual;
    Combo combo;
    while (!v.empty()) {
      auto top = std::prev(v.end());
      auto row = rows_.find(top->first);
      if (row == rows_.end()) {
        residual.insert(*top);
        v.erase(top);
        continue;
      }
      const mpq_class factor = top->second / row->second.vec.rbegin()->second;
      for (const auto& [k, c] : row->second.vec) {
        auto& slot = v[k];
        slot -= factor * c;
        if (slot == 0) v.erase(k);
      }
      for (const auto& [j, c] : row->second.combo) {
        auto& slot = combo[j];
        slot += factor * c;
      }
    }
    erase_zeros(combo);
    return {std::move(residual), std::move(combo)};
  }

 private:
  struct Row {
    Vec vec;
    Combo combo;
  };

  template <class M>
  static void erase_zeros(M& m) {
    for (auto it = m.begin(); it != m.end();) {
      if (it->second == 0) it = m.erase(it);
      else ++it;
    }
  }

  std::map<Key, Row> rows_;
  std::size_t inserted_ = 0;
};

// Solves sum_j x_j * columns[j] = target over Q; nullopt when inconsistent.
// Free variables are set to zero.
template <class Int>
std::optional<std::vector<mpq_class>> rational_solve(const std::vector<std::vector<Int>>& columns,
                                                     const std::vector<Int>& target) {
  RationalSpan<std::size_t> span;
  auto as_vec = [](const std::vector<Int>& v) {
    typename RationalSpan<std::size_t>::Vec out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out[i] = mpq_class(v[i]);
    return out;
  };
  for (const auto& c : columns) span.add(as_vec(c));
  auto combo = span.express(as_vec(target));
  if (!combo) return std::nullopt;
  std::vector<mpq_class> x(columns.size());
  for (const auto& [j, c] : *combo) x[j] = c;
  return x;
}

}  // namespace reprings
