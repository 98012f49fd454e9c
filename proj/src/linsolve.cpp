#include "squant/linsolve.hpp"

#include <algorithm>

namespace squant {

void LinearSystem::add_equation(std::map<int, Rational> coeffs, Rational rhs) {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  if (coeffs.empty() && rhs == 0) return;
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(std::move(rhs));
}

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  std::vector<std::map<int, Rational>> rows = rows_;
  std::vector<Rational> rhs = rhs_;
  const std::size_t nrows = rows.size();

  // column -> pivot row
  std::map<int, std::size_t> pivot_of;
  std::vector<bool> used(nrows, false);

  for (int col = 0; col < cols_; ++col) {
    // Pick the sparsest available row with a nonzero entry in this column.
    std::size_t best = nrows;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second == 0) continue;
      if (best == nrows || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == nrows) continue;  // free column
    used[best] = true;
    pivot_of[col] = best;
    const Rational piv = rows[best][col];
    for (auto& [c, v] : rows[best]) v /= piv;
    rhs[best] /= piv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == best) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second == 0) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : rows[best]) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          Rational nv = -factor * v;
          if (nv != 0) rows[r].emplace(c, std::move(nv));
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
      rhs[r] -= factor * rhs[best];
    }
  }

  for (std::size_t r = 0; r < nrows; ++r) {
    if (used[r]) continue;
    bool empty = std::all_of(rows[r].begin(), rows[r].end(),
                             [](const auto& kv) { return kv.second == 0; });
    if (empty && rhs[r] != 0) return std::nullopt;
  }

  std::vector<Rational> sol(static_cast<std::size_t>(cols_), Rational(0));
  for (const auto& [col, r] : pivot_of) sol[static_cast<std::size_t>(col)] = rhs[r];
  return sol;
}

}  // namespace squant
