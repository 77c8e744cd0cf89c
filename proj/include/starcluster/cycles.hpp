#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "starcluster/hypergraph.hpp"

namespace starcluster {

/**
 * Berge cycle of length k: an alternating sequence v_1 e_1 v_2 e_2 ... v_k e_k
 * of k distinct vertices and k distinct edges with v_i, v_{i+1} ∈ e_i
 * (indices mod k). Lengths start at 2: two edges sharing two vertices already
 * form a cycle. Stored in traversal order.
 */
struct BergeCycle {
  std::vector<Vertex> vertices;  ///< v_1 .. v_k in cycle order
  EdgeList edges;                ///< e_1 .. e_k, e_i joining v_i to v_{i+1}

  std::size_t length() const noexcept { return vertices.size(); }

  /// Throws NotACycleError with a reason unless this is a valid Berge cycle of h.
  void validate(const Hypergraph& h) const;

  nlohmann::json to_json() const;
};

/**
 * Induced test: every e_i meets the cycle's vertex set in exactly
 * {v_i, v_{i+1}}, and no edge of h contains two non-consecutive cycle
 * vertices. Validates c first (NotACycleError).
 */
bool is_induced(const Hypergraph& h, const BergeCycle& c);

/**
 * Searches for an induced Berge 3-cycle through v: scans ordered pairs of
 * distinct edges e, f through v, vertices u ∈ e∖f and w ∈ f∖e (both != v),
 * and a third edge g ∉ {e, f} containing u and w, returning the first
 * candidate that passes is_induced. Returns nullopt when none exists.
 */
std::optional<BergeCycle> vertex_in_induced_3cycle(const Hypergraph& h, Vertex v);

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000;
};

/**
 * Finds a ternary Berge cycle (length divisible by 3) by canonical
 * backtracking (cycles start at their minimum vertex). Returns a witness or
 * nullopt; throws SearchBudgetExceededError when the node budget runs out,
 * which means "unknown", never a verdict.
 */
std::optional<BergeCycle> has_ternary_berge_cycle(const Hypergraph& h,
                                                  const SearchOptions& options = {});

/**
 * t(h) up to the given limit: the maximum number of ternary Berge cycles that
 * are pairwise vertex- and edge-disjoint. Enumerates ternary cycles up to
 * rotation/reflection (deduplicated by vertex-set/edge-set pair), then solves
 * the packing exactly by branch and bound. Returns min(t(h), limit).
 */
int disjoint_ternary_packing(const Hypergraph& h, int limit,
                             const SearchOptions& options = {});

}  // namespace starcluster
