#pragma once

#include <set>
#include <vector>

#include "starcluster/hypergraph.hpp"

namespace starcluster {

/// Default cap on universe sizes for full power-set enumeration.
inline constexpr int kDefaultClosureGuard = 18;

/**
 * A simplicial complex given by its explicit face list. Deliberately naive:
 * this is reference machinery for cross-checking the reduction engine, so it
 * shares no set-manipulation code with it (only the Hypergraph type).
 */
class ExplicitComplex {
 public:
  ExplicitComplex() = default;
  ExplicitComplex(std::vector<Vertex> ground, std::set<std::vector<Vertex>> faces);

  /// All independent sets of h by raw power-set scan (guarded).
  static ExplicitComplex independence_complex(const Hypergraph& h,
                                              int max_vertices = kDefaultClosureGuard);

  const std::vector<Vertex>& ground() const noexcept { return ground_; }
  const std::set<std::vector<Vertex>>& faces() const noexcept { return faces_; }
  bool contains(std::vector<Vertex> face) const;
  bool operator==(const ExplicitComplex&) const = default;

 private:
  std::vector<Vertex> ground_;
  std::set<std::vector<Vertex>> faces_;  // each face sorted ascending
};

/**
 * Star of sigma: all tau with tau ∪ sigma a face of c. Throws NotAFaceError
 * when sigma is not a face.
 */
ExplicitComplex star(const ExplicitComplex& c, const std::vector<Vertex>& sigma);

/**
 * Star cluster of a face sigma: the union of the stars of its vertices.
 */
ExplicitComplex star_cluster(const ExplicitComplex& c, const std::vector<Vertex>& sigma);

ExplicitComplex complex_union(const ExplicitComplex& a, const ExplicitComplex& b);
ExplicitComplex complex_intersection(const ExplicitComplex& a, const ExplicitComplex& b);

/**
 * Combinatorial closure of h's edge family within the given universe: every
 * subset of the universe containing at least one edge. The complement of the
 * independence complex inside the power set. Guarded power-set scan.
 */
std::set<std::vector<Vertex>> closure(const Hypergraph& h, const std::vector<Vertex>& universe,
                                      int max_universe = kDefaultClosureGuard);

/**
 * The auxiliary family H_i for a non-isolated vertex v and the i-th edge e_i
 * through v (1-based, edges in sorted order): strip e_i from every edge not
 * through v, and add ẽ_j = e_j ∖ {v} for every edge e_j through v. Its
 * independence complex is st(v) ∩ st(ẽ_i).
 */
Hypergraph build_hi(const Hypergraph& h, Vertex v, int i);

/// Inclusion-minimal elements of a family of vertex sets.
std::set<std::vector<Vertex>> minimal_elements(const std::set<std::vector<Vertex>>& family);

}  // namespace starcluster
