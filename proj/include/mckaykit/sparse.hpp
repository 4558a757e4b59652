#pragma once

#include "mckaykit/rational.hpp"

#include <map>
#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

namespace mckaykit {

using SparseVec = std::map<std::size_t, Rational>;

inline void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [j, v] : x) {
    if (v.is_zero()) continue;
    auto [it, fresh] = y.emplace(j, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// Row echelon form over Q kept incrementally; rows are stored with leading coefficient 1.
class SparseEchelon {
 public:
  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::size_t c) const { return c < pivot_.size() && pivot_[c] >= 0; }

  // Eliminates every entry that sits in a pivot column.
  SparseVec normal_form(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [c, x] : reduce(v)) out.emplace_hint(out.end(), c, x);
    return out;
  }

  // Returns true when v was independent of the stored rows.
  bool insert(const SparseVec& v) {
    Row r = reduce(v);
    if (r.empty()) return false;
    Rational inv = Rational(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
    std::size_t c = r.front().first;
    if (pivot_.size() <= c) pivot_.resize(c + 1, -1);
    pivot_[c] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  // Basis of {x in Q^ncols : row . x = 0 for all rows}, one vector per free column.
  std::vector<SparseVec> kernel(std::size_t ncols) const {
    std::vector<SparseVec> out;
    std::vector<Rational> x(ncols);
    for (std::size_t f = 0; f < ncols; ++f) {
      if (has_pivot(f)) continue;
      std::fill(x.begin(), x.end(), Rational());
      x[f] = Rational(1);
      back_substitute(x, ncols, f);
      SparseVec v;
      for (std::size_t j = 0; j < ncols; ++j)
        if (!x[j].is_zero()) v.emplace_hint(v.end(), j, x[j]);
      out.push_back(std::move(v));
    }
    return out;
  }

  // Solves rows . (x, 1) = 0 where column nvars holds the constant; nullopt when inconsistent.
  std::optional<SparseVec> particular(std::size_t nvars) const {
    if (has_pivot(nvars)) return std::nullopt;
    std::vector<Rational> x(nvars + 1);
    x[nvars] = Rational(1);
    back_substitute(x, nvars + 1, nvars);
    SparseVec v;
    for (std::size_t j = 0; j < nvars; ++j)
      if (!x[j].is_zero()) v.emplace_hint(v.end(), j, x[j]);
    return v;
  }

 private:
  using Row = std::vector<std::pair<std::size_t, Rational>>;
  std::vector<Row> rows_;
  std::vector<long> pivot_;  // column -> row, or -1
  mutable std::vector<Rational> scratch_;
  mutable std::vector<char> seen_;

  Row reduce(const SparseVec& v) const {
    Row out;
    if (v.empty()) return out;
    std::size_t need = std::max(v.rbegin()->first + 1, pivot_.size());
    if (scratch_.size() < need) {
      scratch_.resize(need);
      seen_.resize(need, 0);
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> todo;
    for (const auto& [c, x] : v) {
      scratch_[c] = x;
      seen_[c] = 1;
      todo.push(c);
    }
    while (!todo.empty()) {
      std::size_t c = todo.top();
      todo.pop();
      seen_[c] = 0;
      Rational f = std::move(scratch_[c]);
      scratch_[c] = Rational();
      if (f.is_zero()) continue;
      if (!has_pivot(c)) {
        out.emplace_back(c, std::move(f));
        continue;
      }
      const Row& r = rows_[pivot_[c]];
      for (std::size_t t = 1; t < r.size(); ++t) {
        std::size_t j = r[t].first;
        if (j >= scratch_.size()) {
          scratch_.resize(j + 1);
          seen_.resize(j + 1, 0);
        }
        scratch_[j] -= f * r[t].second;
        if (!seen_[j]) {
          seen_[j] = 1;
          todo.push(j);
        }
      }
    }
    return out;
  }

  // Fills pivot coordinates of x so that every row vanishes on x; x is zero beyond column top
  // apart from pivots, so rows with pivot above top are skipped.
  void back_substitute(std::vector<Rational>& x, std::size_t ncols, std::size_t top) const {
    for (std::size_t c = std::min({ncols, pivot_.size(), top + 1}); c-- > 0;) {
      if (pivot_[c] < 0) continue;
      Rational s;
      for (std::size_t t = 1; t < rows_[pivot_[c]].size(); ++t) {
        const auto& [j, v] = rows_[pivot_[c]][t];
        if (j < ncols && !x[j].is_zero()) s += v * x[j];
      }
      x[c] = -s;
    }
  }
};

}  // namespace mckaykit
