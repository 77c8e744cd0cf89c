#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include <json.hpp>

#include "starcluster/cycles.hpp"
#include "starcluster/hypergraph.hpp"

namespace starcluster {

struct ReductionOptions {
  /// Cap on tuple visits during the union enumeration of star_cluster_reduce.
  std::uint64_t tuple_cap = 1'000'000;
};

/**
 * A reduction precondition failed: the chosen vertex is isolated, sits on an
 * induced Berge 3-cycle (witness attached), or the input is not normalized.
 */
class PreconditionError : public Error {
 public:
  enum class Reason { NotNormalized, IsolatedVertex, InducedThreeCycle };

  PreconditionError(Reason reason, std::string message,
                    std::optional<BergeCycle> witness = std::nullopt)
      : Error(std::move(message)), reason_(reason), witness_(std::move(witness)) {}

  Reason reason() const noexcept { return reason_; }
  const std::optional<BergeCycle>& witness() const noexcept { return witness_; }

 private:
  Reason reason_;
  std::optional<BergeCycle> witness_;
};

/**
 * One-vertex star-cluster reduction. For a normalized h and an eligible
 * vertex v (not isolated, not on an induced Berge 3-cycle), builds the
 * hypergraph H_v on V(h) ∖ {v}:
 *
 *   1. ẽ_i = e_i ∖ {v} for every edge e_i through v,
 *   2. every edge of h not through v,
 *   3. for every choice of edges f_1..f_k (one per e_i, each avoiding v and
 *      meeting e_i), the union of the differences f_i ∖ e_i,
 *   4. keep the inclusion-minimal sets.
 *
 * The independence complex of h is homotopy equivalent to the suspension of
 * the result's, so reduced Betti numbers shift up by exactly one dimension.
 * The enumeration in step 3 walks per-index candidate sets with
 * superset pruning and is capped by options.tuple_cap
 * (CombinationBudgetExceededError beyond it).
 */
Hypergraph star_cluster_reduce(const Hypergraph& h, Vertex v,
                               const ReductionOptions& options = {});

/**
 * Membership oracle for H_v ∖ {ẽ_1..ẽ_k} that never builds H_v: f qualifies
 * iff no ẽ_i is contained in f, for every i some edge of h avoiding v fits
 * inside f ∪ e_i, and f is inclusion-minimal with that property (f = some ẽ_i
 * returns true as well). Independent check for star_cluster_reduce.
 */
bool hv_edge_check(const Hypergraph& h, Vertex v, const Edge& f);

/**
 * Edge-to-gadget move: removes e = {v_1 < ... < v_k}, adds fresh vertices
 * w, u_1..u_k (w = max id + 1, u_i = max id + 1 + i) and the 2k graph edges
 * {w, u_i}, {u_i, v_i}. The independence complex of the result is the
 * suspension of the input's, and the move cannot create ternary Berge cycle
 * packings that were not already there.
 */
Hypergraph edge_gadget(const Hypergraph& h, const Edge& e);

/**
 * Applies edge_gadget to the first (sorted order) edge of size >= 3 until
 * all edges are graph edges. Returns the graph and the number s of moves;
 * Betti numbers of the input shift up by exactly s dimensions.
 */
std::pair<Hypergraph, int> graphify(const Hypergraph& h);

enum class Strategy { Lex, Greedy };

struct ReductionMove {
  enum class Kind { Hv, He, Normalize };
  Kind kind;
  std::optional<Vertex> vertex;                  // Hv
  std::optional<Edge> edge;                      // He
  std::optional<NormalizationReport> report;     // Normalize
  std::size_t resulting_vertex_count = 0;
  std::size_t resulting_edge_count = 0;
};

struct Verdict {
  enum class Kind { Contractible, Sphere, Residual };
  Kind kind = Kind::Residual;
  int dimension = 0;      // Sphere only
  Hypergraph remainder;   // Residual only

  static Verdict contractible() { return {Kind::Contractible, 0, {}}; }
  static Verdict sphere(int dim) { return {Kind::Sphere, dim, {}}; }
  static Verdict residual(Hypergraph h) { return {Kind::Residual, 0, std::move(h)}; }
};

struct ReductionTrace {
  std::vector<ReductionMove> steps;
  int suspensions = 0;  ///< number of Hv / He moves
  Verdict verdict;

  nlohmann::json to_json() const;
};

/// Tuple-cap overflow surfaced from inside reduce_pipeline, partial trace attached.
class PipelineBudgetError : public CombinationBudgetExceededError {
 public:
  PipelineBudgetError(const CombinationBudgetExceededError& cause, ReductionTrace partial)
      : CombinationBudgetExceededError(cause), partial_trace_(std::move(partial)) {}
  const ReductionTrace& partial_trace() const noexcept { return partial_trace_; }

 private:
  ReductionTrace partial_trace_;
};

/**
 * Full reduction loop: normalize, stop with Contractible when an isolated
 * vertex remains (cone) or Sphere(s-1) when the vertex set empties after s
 * suspension moves, otherwise reduce at an eligible vertex chosen by the
 * strategy (Lex: lowest id; Greedy: fewest edges after a trial reduction,
 * ties to the lowest id) and repeat. When no eligible vertex exists the
 * verdict is Residual with the stuck hypergraph attached. Terminates because
 * every move removes at least one vertex.
 */
ReductionTrace reduce_pipeline(const Hypergraph& h, Strategy strategy = Strategy::Lex,
                               const ReductionOptions& options = {});

/// graphify as a traced sequence of He moves; verdict is Residual(graph).
ReductionTrace graphify_trace(const Hypergraph& h);

}  // namespace starcluster
