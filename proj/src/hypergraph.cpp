#include "starcluster/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace starcluster {

namespace {

void canonicalize_edge(Edge& e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
}

}  // namespace

Hypergraph::Hypergraph(std::vector<Vertex> vertices, EdgeList edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.empty()) throw EmptyEdgeError("edges must be non-empty");
    canonicalize_edge(e);
    vertices_.insert(vertices_.end(), e.begin(), e.end());
  }
  for (Vertex v : vertices_) {
    if (v < 0) throw Error("vertex ids must be non-negative, got " + std::to_string(v));
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_edges(EdgeList edges) {
  return Hypergraph({}, std::move(edges));
}

bool Hypergraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Hypergraph::has_edge(const Edge& e) const {
  Edge probe = e;
  canonicalize_edge(probe);
  return std::binary_search(edges_.begin(), edges_.end(), probe);
}

EdgeList Hypergraph::edges_containing(Vertex v) const {
  if (!has_vertex(v)) throw UnknownVertexError(v);
  EdgeList out;
  for (const Edge& e : edges_) {
    if (edge_contains(e, v)) out.push_back(e);
  }
  return out;
}

bool Hypergraph::is_isolated(Vertex v) const {
  return edges_containing(v).empty();
}

bool Hypergraph::has_isolated_vertex() const {
  for (Vertex v : vertices_) {
    bool covered = false;
    for (const Edge& e : edges_) {
      if (edge_contains(e, v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return true;
  }
  return false;
}

Vertex Hypergraph::max_vertex_id() const {
  return vertices_.empty() ? -1 : vertices_.back();
}

bool Hypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.size() == 2; });
}

bool Hypergraph::is_normalized() const {
  for (const Edge& e : edges_) {
    if (e.size() < 2) return false;
  }
  for (const Edge& a : edges_) {
    for (const Edge& b : edges_) {
      if (&a != &b && a != b && subset_of(a, b)) return false;
    }
  }
  return true;
}

NormalizationReport normalize(const Hypergraph& h) {
  EdgeList edges = h.edges();
  std::vector<Vertex> vertices = h.vertices();
  NormalizationReport report;

  bool changed = true;
  while (changed) {
    changed = false;

    // (a) drop edges strictly containing another current edge
    EdgeList kept;
    for (const Edge& e : edges) {
      bool superset = false;
      for (const Edge& f : edges) {
        if (f != e && subset_of(f, e)) {
          superset = true;
          break;
        }
      }
      if (superset) {
        report.removed_superset_edges.push_back(e);
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    edges = std::move(kept);

    // (b) a singleton edge {v} forces v (and every edge containing v) out
    std::vector<Vertex> singletons;
    for (const Edge& e : edges) {
      if (e.size() == 1) singletons.push_back(e.front());
    }
    if (!singletons.empty()) {
      changed = true;
      report.removed_singleton_vertices.insert(report.removed_singleton_vertices.end(),
                                               singletons.begin(), singletons.end());
      EdgeList surviving;
      for (const Edge& e : edges) {
        if (!intersects(e, singletons)) surviving.push_back(e);
      }
      edges = std::move(surviving);
      std::vector<Vertex> remaining;
      for (Vertex v : vertices) {
        if (!std::binary_search(singletons.begin(), singletons.end(), v)) {
          remaining.push_back(v);
        }
      }
      vertices = std::move(remaining);
    }
  }

  report.resulting = Hypergraph(std::move(vertices), std::move(edges));
  return report;
}

Hypergraph cycle_graph(int n) {
  if (n < 3) throw InvalidSizeError("cycle graph needs at least 3 vertices");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    Edge e{i, (i + 1) % n};
    edges.push_back(e);
  }
  return Hypergraph::from_edges(std::move(edges));
}

Hypergraph tight_path(int n, int k) {
  if (k < 2) throw InvalidSizeError("tight path arity must be at least 2");
  if (n < k) throw InvalidSizeError("tight path needs at least k vertices");
  EdgeList edges;
  for (int i = 0; i + k <= n; ++i) {
    Edge e;
    for (int j = i; j < i + k; ++j) e.push_back(j);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(std::move(edges));
}

Hypergraph lk_expand(const Hypergraph& h, const std::vector<Vertex>& path_vertices, int k) {
  if (k < 2) throw InvalidSizeError("expansion arity must be at least 2");
  const int m = 2 * k - 2;
  if (static_cast<int>(path_vertices.size()) != m) {
    throw InvalidSizeError("expected 2k-2 = " + std::to_string(m) + " path vertices, got " +
                           std::to_string(path_vertices.size()));
  }
  {
    std::set<Vertex> distinct(path_vertices.begin(), path_vertices.end());
    if (static_cast<int>(distinct.size()) != m) {
      throw InvalidSizeError("path vertices must be distinct");
    }
  }
  for (Vertex v : path_vertices) {
    if (!h.has_vertex(v)) throw UnknownVertexError(v);
  }

  auto window_edge = [&](const std::vector<Vertex>& seq, int from) {
    Edge e(seq.begin() + from, seq.begin() + from + k);
    std::sort(e.begin(), e.end());
    return e;
  };

  // the k-1 edges of the tight path on the given vertices must all be present
  EdgeList old_path_edges;
  for (int i = 0; i + k <= m; ++i) {
    Edge e = window_edge(path_vertices, i);
    if (!h.has_edge(e)) {
      std::string ids;
      for (Vertex v : e) ids += (ids.empty() ? "" : " ") + std::to_string(v);
      throw MissingPathEdgeError("required tight-path edge {" + ids + "} is absent");
    }
    old_path_edges.push_back(std::move(e));
  }
  std::sort(old_path_edges.begin(), old_path_edges.end());

  EdgeList edges;
  for (const Edge& e : h.edges()) {
    if (!std::binary_search(old_path_edges.begin(), old_path_edges.end(), e)) {
      edges.push_back(e);
    }
  }

  std::vector<Vertex> fresh;
  for (int j = 1; j <= k + 1; ++j) fresh.push_back(h.max_vertex_id() + j);

  // spliced sequence a_1..a_{k-1}, b_1..b_{k+1}, a_k..a_{2k-2} of length 3k-1
  std::vector<Vertex> spliced(path_vertices.begin(), path_vertices.begin() + (k - 1));
  spliced.insert(spliced.end(), fresh.begin(), fresh.end());
  spliced.insert(spliced.end(), path_vertices.begin() + (k - 1), path_vertices.end());
  for (int i = 0; i + k <= static_cast<int>(spliced.size()); ++i) {
    edges.push_back(window_edge(spliced, i));
  }

  std::vector<Vertex> vertices = h.vertices();
  vertices.insert(vertices.end(), fresh.begin(), fresh.end());
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const Vertex offset = a.max_vertex_id() + 1;
  std::vector<Vertex> vertices = a.vertices();
  for (Vertex v : b.vertices()) vertices.push_back(v + offset);
  EdgeList edges = a.edges();
  for (const Edge& e : b.edges()) {
    Edge shifted;
    for (Vertex v : e) shifted.push_back(v + offset);
    edges.push_back(std::move(shifted));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph random_hypergraph(int n, int min_edge_size, int max_edge_size,
                             double density, std::uint64_t seed) {
  if (n < 1) throw InvalidSizeError("random hypergraph needs at least one vertex");
  if (min_edge_size < 1 || max_edge_size < min_edge_size || max_edge_size > n) {
    throw InvalidSizeError("invalid edge size range");
  }
  if (density < 0.0 || density > 1.0) {
    throw InvalidSizeError("density must lie in [0,1]");
  }

  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0,1); hand-mapped so snapshots survive stdlib changes
  auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  EdgeList edges;
  for (int s = min_edge_size; s <= max_edge_size; ++s) {
    // lexicographic enumeration of s-combinations of 0..n-1
    std::vector<Vertex> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      if (draw() < density) edges.emplace_back(comb.begin(), comb.end());
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  std::vector<Vertex> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  return normalize(Hypergraph(std::move(vertices), std::move(edges))).resulting;
}

Hypergraph remove_vertices(const Hypergraph& h, const std::vector<Vertex>& removed) {
  std::vector<Vertex> gone = removed;
  std::sort(gone.begin(), gone.end());
  std::vector<Vertex> vertices;
  for (Vertex v : h.vertices()) {
    if (!std::binary_search(gone.begin(), gone.end(), v)) vertices.push_back(v);
  }
  EdgeList edges;
  for (const Edge& e : h.edges()) {
    if (!intersects(e, gone)) edges.push_back(e);
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

bool subset_of(const Edge& a, const Edge& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const Edge& a, const Edge& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

Edge edge_difference(const Edge& a, const Edge& b) {
  Edge out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Edge edge_union(const Edge& a, const Edge& b) {
  Edge out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edge_contains(const Edge& e, Vertex v) {
  return std::binary_search(e.begin(), e.end(), v);
}

}  // namespace starcluster
