#include "starcluster/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "starcluster/io.hpp"

namespace starcluster {

namespace {

void require_normalized(const Hypergraph& h) {
  if (!h.is_normalized()) {
    throw PreconditionError(PreconditionError::Reason::NotNormalized,
                            "hypergraph must be normalized first");
  }
}

void require_eligible(const Hypergraph& h, Vertex v) {
  if (h.is_isolated(v)) {
    throw PreconditionError(PreconditionError::Reason::IsolatedVertex,
                            "vertex " + std::to_string(v) + " is isolated");
  }
  if (auto witness = vertex_in_induced_3cycle(h, v)) {
    throw PreconditionError(PreconditionError::Reason::InducedThreeCycle,
                            "vertex " + std::to_string(v) + " lies on an induced Berge 3-cycle",
                            std::move(witness));
  }
}

}  // namespace

Hypergraph star_cluster_reduce(const Hypergraph& h, Vertex v, const ReductionOptions& options) {
  require_normalized(h);
  if (!h.has_vertex(v)) throw UnknownVertexError(v);
  require_eligible(h, v);

  const EdgeList through = h.edges_containing(v);  // e_1 .. e_k, sorted
  const std::size_t k = through.size();
  EdgeList others;
  for (const Edge& e : h.edges()) {
    if (!edge_contains(e, v)) others.push_back(e);
  }

  // steps 1 and 2: the stripped edges through v, and the untouched others
  std::vector<Edge> collected;
  for (const Edge& e : through) collected.push_back(edge_difference(e, {v}));
  collected.insert(collected.end(), others.begin(), others.end());

  // step 3: per-index candidate differences D_i = { f ∖ e_i : f meets e_i }
  std::vector<std::vector<Edge>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::set<Edge> di;
    for (const Edge& f : others) {
      if (intersects(f, through[i])) di.insert(edge_difference(f, through[i]));
    }
    candidates[i].assign(di.begin(), di.end());
  }

  std::set<Edge> unions;
  const auto dominated = [&](const Edge& partial) {
    // a union that already contains a known candidate can never be a new
    // minimal edge, so the whole branch is prunable
    for (const Edge& c : collected) {
      if (subset_of(c, partial)) return true;
    }
    for (const Edge& u : unions) {
      if (subset_of(u, partial)) return true;
    }
    return false;
  };

  // depth-first product walk over D_1 x ... x D_k carrying partial unions;
  // dominated prefixes cannot yield new minimal edges and are cut wholesale
  std::uint64_t tuples = 0;
  const std::function<void(std::size_t, const Edge&)> walk = [&](std::size_t i, const Edge& partial) {
    if (dominated(partial)) return;
    if (i == k) {
      unions.insert(partial);
      return;
    }
    for (const Edge& d : candidates[i]) {
      if (++tuples > options.tuple_cap) throw CombinationBudgetExceededError(tuples);
      walk(i + 1, edge_union(partial, d));
    }
  };
  walk(0, {});

  // step 4: inclusion-minimal elements of everything collected
  collected.insert(collected.end(), unions.begin(), unions.end());
  std::sort(collected.begin(), collected.end());
  collected.erase(std::unique(collected.begin(), collected.end()), collected.end());
  EdgeList minimal;
  for (const Edge& c : collected) {
    bool keep = true;
    for (const Edge& other : collected) {
      if (other != c && subset_of(other, c)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(c);
  }

  std::vector<Vertex> ground;
  for (Vertex x : h.vertices()) {
    if (x != v) ground.push_back(x);
  }
  return Hypergraph(std::move(ground), std::move(minimal));
}

bool hv_edge_check(const Hypergraph& h, Vertex v, const Edge& f) {
  require_normalized(h);
  if (!h.has_vertex(v)) throw UnknownVertexError(v);
  if (h.is_isolated(v)) {
    throw PreconditionError(PreconditionError::Reason::IsolatedVertex,
                            "vertex " + std::to_string(v) + " is isolated");
  }
  Edge probe = f;
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  for (Vertex x : probe) {
    if (x == v || !h.has_vertex(x)) {
      throw Error("candidate edge must live inside V(h) minus the reduced vertex");
    }
  }

  const EdgeList through = h.edges_containing(v);
  EdgeList tildes;
  for (const Edge& e : through) tildes.push_back(edge_difference(e, {v}));
  EdgeList others;
  for (const Edge& e : h.edges()) {
    if (!edge_contains(e, v)) others.push_back(e);
  }

  if (std::find(tildes.begin(), tildes.end(), probe) != tildes.end()) return true;
  for (const Edge& t : tildes) {
    if (subset_of(t, probe)) return false;
  }

  // the covering property: for every i some edge avoiding v fits in f ∪ e_i
  const auto covers = [&](const Edge& g) {
    for (const Edge& ei : through) {
      const Edge room = edge_union(g, ei);
      bool hit = false;
      for (const Edge& other : others) {
        if (subset_of(other, room)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  if (!covers(probe)) return false;
  // the property is upward-monotone, so minimality only needs the co-atoms
  for (Vertex x : probe) {
    Edge smaller;
    for (Vertex y : probe) {
      if (y != x) smaller.push_back(y);
    }
    if (covers(smaller)) return false;
  }
  return true;
}

Hypergraph edge_gadget(const Hypergraph& h, const Edge& e) {
  Edge probe = e;
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  if (!h.has_edge(probe)) throw UnknownEdgeError("edge to expand is not in the hypergraph");

  const int k = static_cast<int>(probe.size());
  const Vertex w = h.max_vertex_id() + 1;
  EdgeList edges;
  for (const Edge& other : h.edges()) {
    if (other != probe) edges.push_back(other);
  }
  for (int i = 1; i <= k; ++i) {
    const Vertex ui = w + i;
    edges.push_back(Edge{w, ui});
    Edge leg{ui, probe[i - 1]};
    std::sort(leg.begin(), leg.end());
    edges.push_back(std::move(leg));
  }
  std::vector<Vertex> vertices = h.vertices();
  for (int i = 0; i <= k; ++i) vertices.push_back(w + i);
  return Hypergraph(std::move(vertices), std::move(edges));
}

ReductionTrace graphify_trace(const Hypergraph& h) {
  require_normalized(h);
  ReductionTrace trace;
  Hypergraph current = h;
  while (true) {
    const Edge* big = nullptr;
    for (const Edge& e : current.edges()) {
      if (e.size() >= 3) {
        big = &e;
        break;
      }
    }
    if (big == nullptr) break;
    const Edge chosen = *big;
    current = edge_gadget(current, chosen);
    ++trace.suspensions;
    trace.steps.push_back({ReductionMove::Kind::He, std::nullopt, chosen, std::nullopt,
                           current.vertex_count(), current.edge_count()});
  }
  trace.verdict = Verdict::residual(std::move(current));
  return trace;
}

std::pair<Hypergraph, int> graphify(const Hypergraph& h) {
  ReductionTrace trace = graphify_trace(h);
  return {std::move(trace.verdict.remainder), trace.suspensions};
}

namespace {

std::vector<Vertex> eligible_vertices(const Hypergraph& h) {
  std::vector<Vertex> out;
  for (Vertex v : h.vertices()) {
    if (h.is_isolated(v)) continue;
    if (vertex_in_induced_3cycle(h, v)) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

ReductionTrace reduce_pipeline(const Hypergraph& h, Strategy strategy,
                               const ReductionOptions& options) {
  ReductionTrace trace;
  Hypergraph current = h;

  while (true) {
    NormalizationReport report = normalize(current);
    current = report.resulting;
    if (!report.trivial()) {
      const std::size_t vc = current.vertex_count();
      const std::size_t ec = current.edge_count();
      trace.steps.push_back(
          {ReductionMove::Kind::Normalize, std::nullopt, std::nullopt, std::move(report), vc, ec});
    }

    if (current.vertex_count() == 0) {
      // only the empty face remains: a (-1)-sphere, suspended s times
      trace.verdict = Verdict::sphere(trace.suspensions - 1);
      return trace;
    }
    if (current.has_isolated_vertex()) {
      // cone point: the complex is contractible, suspensions keep it so
      trace.verdict = Verdict::contractible();
      return trace;
    }

    const std::vector<Vertex> eligible = eligible_vertices(current);
    if (eligible.empty()) {
      trace.verdict = Verdict::residual(std::move(current));
      return trace;
    }

    Vertex pick = eligible.front();
    Hypergraph next;
    if (strategy == Strategy::Lex) {
      try {
        next = star_cluster_reduce(current, pick, options);
      } catch (const CombinationBudgetExceededError& e) {
        throw PipelineBudgetError(e, std::move(trace));
      }
    } else {
      // Greedy: fewest resulting edges wins, ties to the lowest id; trials
      // that blow the tuple cap drop out unless every one of them does
      bool found = false;
      std::size_t best_edges = 0;
      std::optional<CombinationBudgetExceededError> first_failure;
      for (Vertex v : eligible) {
        try {
          Hypergraph trial = star_cluster_reduce(current, v, options);
          if (!found || trial.edge_count() < best_edges) {
            found = true;
            best_edges = trial.edge_count();
            pick = v;
            next = std::move(trial);
          }
        } catch (const CombinationBudgetExceededError& e) {
          if (!first_failure) first_failure = e;
        }
      }
      if (!found) throw PipelineBudgetError(*first_failure, std::move(trace));
    }

    current = std::move(next);
    ++trace.suspensions;
    trace.steps.push_back({ReductionMove::Kind::Hv, pick, std::nullopt, std::nullopt,
                           current.vertex_count(), current.edge_count()});
  }
}

nlohmann::json ReductionTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const ReductionMove& m : steps) {
    nlohmann::json j;
    switch (m.kind) {
      case ReductionMove::Kind::Hv:
        j["move"] = "Hv";
        j["argument"] = *m.vertex;
        break;
      case ReductionMove::Kind::He:
        j["move"] = "He";
        j["argument"] = *m.edge;
        break;
      case ReductionMove::Kind::Normalize:
        j["move"] = "Normalize";
        j["argument"] = {
            {"removed_superset_edges", m.report->removed_superset_edges},
            {"removed_singleton_vertices", m.report->removed_singleton_vertices},
        };
        break;
    }
    j["resulting_vertex_count"] = m.resulting_vertex_count;
    j["resulting_edge_count"] = m.resulting_edge_count;
    steps_json.push_back(std::move(j));
  }

  nlohmann::json verdict_json;
  switch (verdict.kind) {
    case Verdict::Kind::Contractible:
      verdict_json = {{"kind", "Contractible"}};
      break;
    case Verdict::Kind::Sphere:
      verdict_json = {{"kind", "Sphere"}, {"dimension", verdict.dimension}};
      break;
    case Verdict::Kind::Residual:
      verdict_json = {{"kind", "Residual"}, {"hypergraph", hypergraph_to_json(verdict.remainder)}};
      break;
  }
  return nlohmann::json{
      {"steps", std::move(steps_json)},
      {"suspensions", suspensions},
      {"verdict", std::move(verdict_json)},
  };
}

}  // namespace starcluster
