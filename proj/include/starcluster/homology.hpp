#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "starcluster/hypergraph.hpp"
#include "starcluster/snf.hpp"

namespace starcluster {

/// Default cap on vertex counts for full face enumeration.
inline constexpr int kDefaultVertexGuard = 22;

/**
 * The faces of an independence complex, grouped by dimension. Faces are
 * stored as bitmasks over positions in the ground vertex list and are kept in
 * lexicographic order of their sorted vertex sequences. The empty face (the
 * unique (-1)-dimensional simplex) is always present: the complex {∅} itself
 * is legal, the void complex cannot arise.
 */
class FaceSet {
 public:
  FaceSet(std::vector<Vertex> ground, std::vector<std::vector<std::uint32_t>> masks_by_dim);

  const std::vector<Vertex>& ground() const noexcept { return ground_; }
  /// Dimension of the complex; -1 when only the empty face exists.
  int max_dim() const noexcept { return static_cast<int>(masks_by_dim_.size()) - 2; }
  /// Number of faces of the given dimension (count(-1) == 1).
  std::size_t count(int dim) const;
  std::size_t total_count() const;
  const std::vector<std::uint32_t>& masks(int dim) const;
  std::vector<Vertex> face_vertices(std::uint32_t mask) const;
  std::vector<std::vector<Vertex>> faces(int dim) const;

 private:
  std::vector<Vertex> ground_;
  // index d+1 holds the d-faces; index 0 is {∅}
  std::vector<std::vector<std::uint32_t>> masks_by_dim_;
};

/**
 * Enumerates every independent set of h (subsets containing no edge) by a
 * pruned subset-lattice walk. Throws TooLargeError past the vertex guard.
 */
FaceSet enumerate_faces(const Hypergraph& h, int max_vertices = kDefaultVertexGuard);

/**
 * Boundary matrices of the reduced chain complex over Z. Entry d (for d in
 * 0..max_dim) maps d-chains to (d-1)-chains; faces are ordered
 * lexicographically per dimension and signs alternate by position of the
 * removed vertex. The d = 0 matrix sends every vertex to the empty face
 * (reduced convention).
 */
std::vector<SparseIntMatrix> boundary_matrices(const FaceSet& fs);

/** Reduced integer homology read off the Smith normal forms. */
struct HomologyProfile {
  /// dimension -> reduced Betti number, for every dimension from -1 to max_dim.
  std::map<int, std::int64_t> betti;
  /// dimension -> invariant factors > 1 (empty maps to no entry).
  std::map<int, std::vector<BigInt>> torsion;
  /// Reduced Euler characteristic: sum over i >= -1 of (-1)^i * betti_i.
  std::int64_t euler = 0;

  std::int64_t betti_at(int dim) const;
  /// Total reduced Betti number (sum over all dimensions, including -1).
  std::int64_t total() const;
  bool torsion_free() const { return torsion.empty(); }

  nlohmann::json to_json() const;
};

/// Full homology profile of the independence complex of h.
HomologyProfile betti(const Hypergraph& h, int max_vertices = kDefaultVertexGuard);

/**
 * Reduced Euler characteristic by direct counting, independent of any linear
 * algebra: (number of odd-size independent sets) minus (number of even-size
 * ones, the empty set included).
 */
std::int64_t euler_from_independent_sets(const Hypergraph& h,
                                         int max_vertices = kDefaultVertexGuard);

/**
 * Mayer-Vietoris bound for a graph g and vertex v: with K = I(g),
 * A = I(g - v), B = I(g - N(v)) and A ∩ B = I(g - N[v]), checks
 * betti_i(K) <= betti_i(A) + betti_i(B) + betti_{i-1}(A ∩ B) for every i.
 * Throws NotAGraphError on non-graph input.
 */
bool mv_inequality_check(const Hypergraph& g, Vertex v,
                         int max_vertices = kDefaultVertexGuard);

/**
 * Join identity for disjoint unions: I(a ⊔ b) is the join I(a) * I(b), so
 * betti_{r+1} of the union equals the convolution sum over i + j = r of
 * betti_i(I(a)) * betti_j(I(b)) (dimension -1 included), and the total Betti
 * number is multiplicative. Returns true when both hold exactly.
 */
bool join_betti_check(const Hypergraph& a, const Hypergraph& b,
                      int max_vertices = kDefaultVertexGuard);

/**
 * True when `suspended` has exactly the Betti numbers of `base` shifted up by
 * one dimension (and nothing in dimension -1), i.e. the homology of a
 * suspension of `base`'s space.
 */
bool is_suspension_shift(const HomologyProfile& suspended, const HomologyProfile& base);

}  // namespace starcluster
