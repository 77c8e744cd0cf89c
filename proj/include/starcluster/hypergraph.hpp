#pragma once

#include <cstdint>
#include <vector>

#include "starcluster/errors.hpp"

namespace starcluster {

using Vertex = int;
/// An edge is kept sorted ascending with no duplicate ids.
using Edge = std::vector<Vertex>;
/// An edge list is kept sorted lexicographically with no duplicate edges.
using EdgeList = std::vector<Edge>;

/**
 * Finite hypergraph: an ordered set of non-negative vertex ids plus a family
 * of non-empty edges over them.
 *
 * Values are immutable after construction; every operation returns a new
 * value. Edges and the edge list are canonicalized (sorted, deduplicated) by
 * the constructor, and edge vertices are merged into the vertex set. Isolated
 * vertices (belonging to no edge) are allowed and meaningful: they make the
 * independence complex a cone, hence contractible.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<Vertex> vertices, EdgeList edges);

  /// Builds a hypergraph whose vertex set is exactly the union of the edges.
  static Hypergraph from_edges(EdgeList edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const EdgeList& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(const Edge& e) const;

  /// Edges containing v, in sorted order. Throws UnknownVertexError.
  EdgeList edges_containing(Vertex v) const;

  /// True when v belongs to no edge. Throws UnknownVertexError.
  bool is_isolated(Vertex v) const;

  /// Some vertex belongs to no edge (true for an edgeless non-empty vertex set).
  bool has_isolated_vertex() const;

  /// Largest vertex id, or -1 when the vertex set is empty.
  Vertex max_vertex_id() const;

  bool is_graph() const;       ///< every edge has exactly two vertices
  bool is_normalized() const;  ///< edges form an antichain and all have size >= 2

  bool operator==(const Hypergraph&) const = default;

 private:
  std::vector<Vertex> vertices_;
  EdgeList edges_;
};

/** Record of what normalize() removed, sufficient to replay the removals. */
struct NormalizationReport {
  /// Edges dropped because they strictly contain another edge.
  EdgeList removed_superset_edges;
  /// Vertices dropped because a singleton edge {v} forced them out (every
  /// edge containing such a vertex is dropped implicitly).
  std::vector<Vertex> removed_singleton_vertices;
  Hypergraph resulting;

  bool trivial() const {
    return removed_superset_edges.empty() && removed_singleton_vertices.empty();
  }
};

/**
 * Reduces h to an inclusion-minimal family with all edges of size >= 2,
 * iterating (a) drop any edge strictly containing another edge, then
 * (b) for each singleton edge {v} drop v and every edge containing v,
 * to a fixpoint. Face-preserving: a set is a face of the input's independence
 * complex iff it avoids the removed vertices and is a face of the result's.
 */
NormalizationReport normalize(const Hypergraph& h);

/// Cycle graph C_n on vertices 0..n-1 (n >= 3).
Hypergraph cycle_graph(int n);

/// Tight path P_{n,k}: vertices 0..n-1, edges {i,...,i+k-1} (n >= k >= 2).
Hypergraph tight_path(int n, int k);

/**
 * Tight-path expansion: requires the k-uniform tight path on the 2k-2 given
 * vertices (in the given order) to be present edge-for-edge; removes those
 * k-1 edges, inserts k+1 fresh vertices b_1..b_{k+1} (ids above every
 * existing id) and the 2k edges of the tight path on
 * a_1..a_{k-1}, b_1..b_{k+1}, a_k..a_{2k-2}. All other edges are retained.
 * The independence complex of the result is the (k-1)-fold suspension of the
 * input's.
 */
Hypergraph lk_expand(const Hypergraph& h, const std::vector<Vertex>& path_vertices, int k);

/// Disjoint union; vertex ids of b are shifted past those of a.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/**
 * Seed-determined random hypergraph on vertices 0..n-1: every candidate edge
 * with size in [min_edge_size, max_edge_size] is included independently with
 * the given density (sizes ascending, candidates in lexicographic order, one
 * draw each). The result is normalized.
 */
Hypergraph random_hypergraph(int n, int min_edge_size, int max_edge_size,
                             double density, std::uint64_t seed);

/// Vertex deletion: removes the listed vertices and every edge meeting them.
Hypergraph remove_vertices(const Hypergraph& h, const std::vector<Vertex>& removed);

// Sorted-range set helpers shared by the cycle and reduction machinery.
bool subset_of(const Edge& a, const Edge& b);        ///< a ⊆ b
bool intersects(const Edge& a, const Edge& b);       ///< a ∩ b ≠ ∅
Edge edge_difference(const Edge& a, const Edge& b);  ///< a ∖ b
Edge edge_union(const Edge& a, const Edge& b);       ///< a ∪ b
bool edge_contains(const Edge& e, Vertex v);

}  // namespace starcluster
