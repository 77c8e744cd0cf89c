#include "starcluster/snf.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace starcluster {

void SparseIntMatrix::add(int r, int c, const BigInt& value) {
  if (value == 0) return;
  auto& row = row_maps_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, value);
  } else {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

std::size_t SparseIntMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : row_maps_) n += row.size();
  return n;
}

std::vector<BigInt> SmithResult::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const BigInt& d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

/**
 * Elimination workhorse. Keeps, besides the row maps, a column index
 * (column -> rows with a nonzero there) and the set of unit positions so a
 * +-1 pivot is found in O(log n).
 */
struct SmithEliminator {
  explicit SmithEliminator(SparseIntMatrix&& m)
      : rows_(std::move(m.row_maps_)), col_index_(m.cols()) {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        col_index_[c].insert(r);
        if (v == 1 || v == -1) units_.emplace(r, c);
      }
    }
  }

  void set(int r, int c, const BigInt& value) {
    auto& row = rows_[r];
    auto it = row.find(c);
    const bool was_unit = it != row.end() && (it->second == 1 || it->second == -1);
    if (value == 0) {
      if (it != row.end()) {
        row.erase(it);
        col_index_[c].erase(r);
      }
    } else {
      if (it == row.end()) {
        row.emplace(c, value);
        col_index_[c].insert(r);
      } else {
        it->second = value;
      }
    }
    const bool is_unit = value == 1 || value == -1;
    if (was_unit && !is_unit) units_.erase({r, c});
    if (!was_unit && is_unit) units_.emplace(r, c);
  }

  BigInt get(int r, int c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? BigInt(0) : it->second;
  }

  /// row r2 += factor * row r1
  void row_addmul(int r2, int r1, const BigInt& factor) {
    for (const auto& [c, v] : rows_[r1]) {
      set(r2, c, get(r2, c) + factor * v);
    }
  }

  /// Minimum-absolute-value nonzero entry; units shortcut first.
  bool find_pivot(int& r, int& c) const {
    if (!units_.empty()) {
      auto [ur, uc] = *units_.begin();
      r = ur;
      c = uc;
      return true;
    }
    bool found = false;
    BigInt best;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      for (const auto& [j, v] : rows_[i]) {
        BigInt mag = abs(v);
        if (!found || mag < best) {
          found = true;
          best = mag;
          r = i;
          c = j;
        }
      }
    }
    return found;
  }

  std::vector<BigInt> diagonalize() {
    std::vector<BigInt> diag;
    int r = 0;
    int c = 0;
    while (find_pivot(r, c)) {
      const BigInt p = get(r, c);

      // clear the pivot column with row operations (truncated quotients)
      bool remainder = false;
      {
        std::vector<int> col_rows(col_index_[c].begin(), col_index_[c].end());
        for (int r2 : col_rows) {
          if (r2 == r) continue;
          BigInt q = get(r2, c) / p;  // truncation: |residue| < |p|
          if (q != 0) row_addmul(r2, r, -q);
          if (get(r2, c) != 0) remainder = true;
        }
      }
      if (remainder) continue;  // smaller entries appeared; re-pivot

      // pivot column is clear, so clearing the pivot row by column
      // operations touches only row r itself
      {
        std::vector<std::pair<int, BigInt>> entries(rows_[r].begin(), rows_[r].end());
        for (const auto& [c2, v] : entries) {
          if (c2 == c) continue;
          BigInt q = v / p;
          set(r, c2, v - q * p);
          if (get(r, c2) != 0) remainder = true;
        }
      }
      if (remainder) continue;

      diag.push_back(abs(p));
      set(r, c, 0);
    }
    return diag;
  }

  std::vector<std::map<int, BigInt>> rows_;
  std::vector<std::set<int>> col_index_;
  std::set<std::pair<int, int>> units_;
};

SmithResult smith_normal_form(SparseIntMatrix m) {
  SmithEliminator elim(std::move(m));
  std::vector<BigInt> diag = elim.diagonalize();

  // normalize the diagonal multiset into a divisibility chain:
  // diag(a, b) is equivalent to diag(gcd(a,b), lcm(a,b))
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] != 0) {
          BigInt g = gcd(diag[i], diag[j]);
          BigInt l = diag[i] / g * diag[j];
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
      }
    }
  }
  std::sort(diag.begin(), diag.end());

  SmithResult result;
  result.rank = static_cast<int>(diag.size());
  result.invariant_factors = std::move(diag);
  return result;
}

}  // namespace starcluster
