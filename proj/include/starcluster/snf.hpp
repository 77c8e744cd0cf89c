#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starcluster {

using BigInt = boost::multiprecision::cpp_int;

/** Sparse integer matrix stored as row maps (column -> value, zeros absent). */
class SparseIntMatrix {
 public:
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_maps_(rows) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  /// Accumulates value at (r, c); entries that cancel to zero are erased.
  void add(int r, int c, const BigInt& value);

  const std::map<int, BigInt>& row(int r) const { return row_maps_[r]; }

  std::size_t nonzero_count() const;

 private:
  friend struct SmithEliminator;
  int rows_;
  int cols_;
  std::vector<std::map<int, BigInt>> row_maps_;
};

/** Rank and invariant factors of an integer matrix. */
struct SmithResult {
  int rank = 0;
  /// Positive, in a divisibility chain d_1 | d_2 | ... | d_rank.
  std::vector<BigInt> invariant_factors;
  /// Invariant factors exceeding 1 (the torsion part of the cokernel).
  std::vector<BigInt> nontrivial_factors() const;
};

/**
 * Smith normal form over the integers with arbitrary-precision arithmetic.
 * Pivoting always selects a minimum-absolute-value nonzero entry (units
 * first), performs unimodular row/column eliminations until the matrix is
 * diagonal, then normalizes the diagonal into a divisibility chain.
 */
SmithResult smith_normal_form(SparseIntMatrix m);

}  // namespace starcluster
