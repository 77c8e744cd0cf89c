#include "starcluster/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include <json.hpp>

namespace starcluster {

void BergeCycle::validate(const Hypergraph& h) const {
  const std::size_t k = vertices.size();
  if (k < 2) throw NotACycleError("a Berge cycle needs at least 2 vertices");
  if (edges.size() != k) throw NotACycleError("vertex and edge counts differ");

  std::set<Vertex> vs(vertices.begin(), vertices.end());
  if (vs.size() != k) throw NotACycleError("cycle vertices must be distinct");
  std::set<Edge> es(edges.begin(), edges.end());
  if (es.size() != k) throw NotACycleError("cycle edges must be distinct");

  for (Vertex v : vertices) {
    if (!h.has_vertex(v)) throw NotACycleError("cycle vertex " + std::to_string(v) + " not in hypergraph");
  }
  for (const Edge& e : edges) {
    if (!h.has_edge(e)) throw NotACycleError("cycle edge not in hypergraph");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[(i + 1) % k];
    if (!edge_contains(edges[i], a) || !edge_contains(edges[i], b)) {
      throw NotACycleError("edge " + std::to_string(i + 1) + " misses its endpoints");
    }
  }
}

nlohmann::json BergeCycle::to_json() const {
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}};
}

bool is_induced(const Hypergraph& h, const BergeCycle& c) {
  c.validate(h);
  const std::size_t k = c.length();

  Edge cycle_set = c.vertices;
  std::sort(cycle_set.begin(), cycle_set.end());

  for (std::size_t i = 0; i < k; ++i) {
    Edge expect{c.vertices[i], c.vertices[(i + 1) % k]};
    std::sort(expect.begin(), expect.end());
    Edge met;
    for (Vertex v : c.edges[i]) {
      if (edge_contains(cycle_set, v)) met.push_back(v);
    }
    if (met != expect) return false;
  }

  if (k <= 3) return true;  // every pair of cycle vertices is consecutive

  // position of each cycle vertex along the cycle
  std::vector<std::pair<Vertex, int>> position;
  for (std::size_t i = 0; i < k; ++i) position.emplace_back(c.vertices[i], static_cast<int>(i));
  std::sort(position.begin(), position.end());
  auto index_of = [&](Vertex v) {
    auto it = std::lower_bound(position.begin(), position.end(), std::make_pair(v, 0));
    return it->second;
  };

  for (const Edge& g : h.edges()) {
    std::vector<int> hits;
    for (Vertex v : g) {
      if (edge_contains(cycle_set, v)) hits.push_back(index_of(v));
    }
    for (std::size_t a = 0; a < hits.size(); ++a) {
      for (std::size_t b = a + 1; b < hits.size(); ++b) {
        const int gap = std::abs(hits[a] - hits[b]);
        if (gap != 1 && gap != static_cast<int>(k) - 1) return false;
      }
    }
  }
  return true;
}

std::optional<BergeCycle> vertex_in_induced_3cycle(const Hypergraph& h, Vertex v) {
  const EdgeList through = h.edges_containing(v);
  for (const Edge& e : through) {
    for (const Edge& f : through) {
      if (f == e) continue;
      for (Vertex u : edge_difference(e, f)) {
        if (u == v) continue;
        for (Vertex w : edge_difference(f, e)) {
          if (w == v) continue;
          for (const Edge& g : h.edges()) {
            if (g == e || g == f) continue;
            if (!edge_contains(g, u) || !edge_contains(g, w)) continue;
            BergeCycle c{{v, u, w}, {e, g, f}};
            if (is_induced(h, c)) return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

/**
 * Shared backtracking core. Walks alternating sequences with the start vertex
 * fixed as the cycle minimum (rotation canonicalization); emit() receives
 * every ternary closure and returns true to stop the whole search.
 */
class TernaryWalker {
 public:
  TernaryWalker(const Hypergraph& h, std::uint64_t budget,
                std::function<bool(const std::vector<Vertex>&, const std::vector<int>&)> emit)
      : h_(h), budget_(budget), emit_(std::move(emit)) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (Vertex v : edges[i]) incident_[v].push_back(static_cast<int>(i));
    }
  }

  void run() {
    for (Vertex start : h_.vertices()) {
      path_.assign(1, start);
      on_path_ = {start};
      if (walk(start)) return;
    }
  }

 private:
  bool walk(Vertex current) {
    auto it = incident_.find(current);
    if (it == incident_.end()) return false;
    for (int ei : it->second) {
      if (edge_used_.count(ei)) continue;
      if (++nodes_ > budget_) throw SearchBudgetExceededError(nodes_);
      const Edge& e = h_.edges()[ei];
      edge_path_.push_back(ei);
      edge_used_.insert(ei);

      const std::size_t m = path_.size();
      if (m >= 3 && m % 3 == 0 && edge_contains(e, path_.front())) {
        if (emit_(path_, edge_path_)) {
          edge_used_.erase(ei);
          edge_path_.pop_back();
          return true;
        }
      }
      for (Vertex w : e) {
        if (w <= path_.front() || on_path_.count(w)) continue;
        path_.push_back(w);
        on_path_.insert(w);
        const bool stop = walk(w);
        on_path_.erase(w);
        path_.pop_back();
        if (stop) {
          edge_used_.erase(ei);
          edge_path_.pop_back();
          return true;
        }
      }

      edge_used_.erase(ei);
      edge_path_.pop_back();
    }
    return false;
  }

  const Hypergraph& h_;
  std::uint64_t budget_;
  std::function<bool(const std::vector<Vertex>&, const std::vector<int>&)> emit_;
  std::map<Vertex, std::vector<int>> incident_;
  std::vector<Vertex> path_;
  std::vector<int> edge_path_;
  std::unordered_set<Vertex> on_path_;
  std::unordered_set<int> edge_used_;
  std::uint64_t nodes_ = 0;
};

BergeCycle materialize(const Hypergraph& h, const std::vector<Vertex>& vs,
                       const std::vector<int>& edge_ids) {
  BergeCycle c;
  c.vertices = vs;
  for (int ei : edge_ids) c.edges.push_back(h.edges()[ei]);
  return c;
}

}  // namespace

std::optional<BergeCycle> has_ternary_berge_cycle(const Hypergraph& h,
                                                  const SearchOptions& options) {
  std::optional<BergeCycle> found;
  TernaryWalker walker(h, options.node_budget,
                       [&](const std::vector<Vertex>& vs, const std::vector<int>& es) {
                         found = materialize(h, vs, es);
                         return true;
                       });
  walker.run();
  return found;
}

int disjoint_ternary_packing(const Hypergraph& h, int limit, const SearchOptions& options) {
  if (limit <= 0) return 0;

  // enumerate ternary cycles up to rotation/reflection; for packing two
  // cycles are interchangeable when they cover the same vertices and edges
  std::set<std::pair<Edge, std::vector<int>>> seen;
  TernaryWalker walker(h, options.node_budget,
                       [&](const std::vector<Vertex>& vs, const std::vector<int>& es) {
                         Edge vset = vs;
                         std::sort(vset.begin(), vset.end());
                         std::vector<int> eset = es;
                         std::sort(eset.begin(), eset.end());
                         seen.emplace(std::move(vset), std::move(eset));
                         return false;  // keep enumerating
                       });
  walker.run();

  const std::vector<std::pair<Edge, std::vector<int>>> cycles(seen.begin(), seen.end());
  const int n = static_cast<int>(cycles.size());
  std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool share_vertex = intersects(cycles[i].first, cycles[j].first);
      bool share_edge = false;
      for (int a : cycles[i].second) {
        if (std::binary_search(cycles[j].second.begin(), cycles[j].second.end(), a)) {
          share_edge = true;
          break;
        }
      }
      conflict[i][j] = conflict[j][i] = (share_vertex || share_edge) ? 1 : 0;
    }
  }

  // exact maximum independent set on the conflict graph, capped at limit
  int best = 0;
  std::uint64_t nodes = 0;
  std::vector<char> blocked(n, 0);
  std::function<void(int, int)> grow = [&](int from, int count) {
    best = std::max(best, count);
    if (best >= limit) return;
    for (int i = from; i < n; ++i) {
      if (blocked[i]) continue;
      if (count + (n - i) <= best) return;  // cannot beat best anymore
      if (++nodes > options.node_budget) throw SearchBudgetExceededError(nodes);
      std::vector<int> newly;
      for (int j = i + 1; j < n; ++j) {
        if (!blocked[j] && conflict[i][j]) {
          blocked[j] = 1;
          newly.push_back(j);
        }
      }
      grow(i + 1, count + 1);
      for (int j : newly) blocked[j] = 0;
      if (best >= limit) return;
    }
  };
  grow(0, 0);
  return std::min(best, limit);
}

}  // namespace starcluster
