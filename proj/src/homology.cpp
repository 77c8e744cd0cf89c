#include "starcluster/homology.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <json.hpp>

namespace starcluster {

FaceSet::FaceSet(std::vector<Vertex> ground, std::vector<std::vector<std::uint32_t>> masks_by_dim)
    : ground_(std::move(ground)), masks_by_dim_(std::move(masks_by_dim)) {}

std::size_t FaceSet::count(int dim) const {
  const int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(masks_by_dim_.size())) return 0;
  return masks_by_dim_[idx].size();
}

std::size_t FaceSet::total_count() const {
  std::size_t n = 0;
  for (const auto& level : masks_by_dim_) n += level.size();
  return n;
}

const std::vector<std::uint32_t>& FaceSet::masks(int dim) const {
  static const std::vector<std::uint32_t> empty;
  const int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(masks_by_dim_.size())) return empty;
  return masks_by_dim_[idx];
}

std::vector<Vertex> FaceSet::face_vertices(std::uint32_t mask) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) out.push_back(ground_[i]);
  }
  return out;
}

std::vector<std::vector<Vertex>> FaceSet::faces(int dim) const {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask : masks(dim)) out.push_back(face_vertices(mask));
  return out;
}

FaceSet enumerate_faces(const Hypergraph& h, int max_vertices) {
  const int n = static_cast<int>(h.vertex_count());
  if (n > max_vertices) {
    throw TooLargeError(h.vertex_count(), static_cast<std::size_t>(max_vertices));
  }

  // edges as position masks, indexed by their highest vertex position: when a
  // walk extends an independent set by position p, only edges whose maximum
  // lies at p can become contained
  const auto& ids = h.vertices();
  auto position_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<std::vector<std::uint32_t>> edges_topping_at(n);
  for (const Edge& e : h.edges()) {
    std::uint32_t mask = 0;
    int top = -1;
    for (Vertex v : e) {
      const int p = position_of(v);
      mask |= std::uint32_t{1} << p;
      top = std::max(top, p);
    }
    edges_topping_at[top].push_back(mask);
  }

  std::vector<std::vector<std::uint32_t>> by_dim(1);
  by_dim[0].push_back(0);  // the empty face

  // iterative DFS in ascending-extension order yields lexicographic order
  // within each dimension
  struct Frame {
    std::uint32_t mask;
    int next;
    int size;
  };
  std::vector<Frame> stack{{0u, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (int p = f.next; p < n; ++p) {
      const std::uint32_t candidate = f.mask | (std::uint32_t{1} << p);
      bool blocked = false;
      for (std::uint32_t em : edges_topping_at[p]) {
        if ((em & candidate) == em) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (static_cast<int>(by_dim.size()) <= f.size + 1) by_dim.resize(f.size + 2);
      by_dim[f.size + 1].push_back(candidate);
      stack.push_back({candidate, p + 1, f.size + 1});
    }
  }

  // the DFS stack visits extensions depth-first from the back, which scrambles
  // order across branches; restore lexicographic order per dimension
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end(), [n](std::uint32_t a, std::uint32_t b) {
      for (int p = 0; p < n; ++p) {
        const bool ia = a & (std::uint32_t{1} << p);
        const bool ib = b & (std::uint32_t{1} << p);
        if (ia != ib) return ia;  // containing the smaller position sorts first
      }
      return false;
    });
  }

  return FaceSet(ids, std::move(by_dim));
}

std::vector<SparseIntMatrix> boundary_matrices(const FaceSet& fs) {
  std::vector<SparseIntMatrix> out;
  const int top = fs.max_dim();
  for (int d = 0; d <= top; ++d) {
    const auto& lower = fs.masks(d - 1);
    const auto& upper = fs.masks(d);
    std::unordered_map<std::uint32_t, int> lower_index;
    lower_index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      lower_index.emplace(lower[i], static_cast<int>(i));
    }
    SparseIntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const std::uint32_t mask = upper[j];
      int sign = 1;
      for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
        const std::uint32_t lowest = bits & (~bits + 1);
        m.add(lower_index.at(mask ^ lowest), static_cast<int>(j), sign);
        sign = -sign;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::int64_t HomologyProfile::betti_at(int dim) const {
  auto it = betti.find(dim);
  return it == betti.end() ? 0 : it->second;
}

std::int64_t HomologyProfile::total() const {
  std::int64_t t = 0;
  for (const auto& [dim, b] : betti) t += b;
  return t;
}

nlohmann::json HomologyProfile::to_json() const {
  nlohmann::json jb = nlohmann::json::object();
  for (const auto& [dim, b] : betti) jb[std::to_string(dim)] = b;
  nlohmann::json jt = nlohmann::json::object();
  for (const auto& [dim, factors] : torsion) {
    nlohmann::json list = nlohmann::json::array();
    for (const BigInt& d : factors) {
      if (d <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        list.push_back(static_cast<std::int64_t>(d));
      } else {
        list.push_back(d.str());
      }
    }
    jt[std::to_string(dim)] = list;
  }
  return nlohmann::json{{"betti", jb}, {"torsion", jt}, {"euler", euler}, {"total", total()}};
}

HomologyProfile betti(const Hypergraph& h, int max_vertices) {
  const FaceSet fs = enumerate_faces(h, max_vertices);
  auto mats = boundary_matrices(fs);

  const int top = fs.max_dim();
  std::vector<int> rank(top + 2, 0);                  // rank[d] = rank of boundary_d
  std::vector<std::vector<BigInt>> factors(top + 2);  // of boundary_d
  for (int d = 0; d <= top; ++d) {
    SmithResult s = smith_normal_form(std::move(mats[d]));
    rank[d] = s.rank;
    factors[d] = s.nontrivial_factors();
  }

  HomologyProfile profile;
  for (int d = -1; d <= top; ++d) {
    const std::int64_t faces = static_cast<std::int64_t>(fs.count(d));
    const int rank_d = d >= 0 ? rank[d] : 0;
    const int rank_up = d + 1 <= top ? rank[d + 1] : 0;
    profile.betti[d] = faces - rank_d - rank_up;
    if (d + 1 <= top && !factors[d + 1].empty()) {
      profile.torsion[d] = factors[d + 1];
    }
  }
  for (const auto& [dim, b] : profile.betti) {
    const int sign = ((dim % 2) == 0) ? 1 : -1;  // (-1)^{-1} = -1
    profile.euler += sign * b;
  }
  return profile;
}

std::int64_t euler_from_independent_sets(const Hypergraph& h, int max_vertices) {
  const FaceSet fs = enumerate_faces(h, max_vertices);
  // (#odd-size independent sets) - (#even-size ones, counting ∅): a d-face has
  // d+1 vertices, so dimension parity carries the sign
  std::int64_t chi = 0;
  for (int d = -1; d <= fs.max_dim(); ++d) {
    const std::int64_t c = static_cast<std::int64_t>(fs.count(d));
    chi += ((d % 2) == 0) ? c : -c;
  }
  return chi;
}

bool mv_inequality_check(const Hypergraph& g, Vertex v, int max_vertices) {
  if (!g.is_graph()) throw NotAGraphError("Mayer-Vietoris check requires a graph");
  if (!g.has_vertex(v)) throw UnknownVertexError(v);

  std::vector<Vertex> neighbors;
  for (const Edge& e : g.edges_containing(v)) {
    neighbors.push_back(e[0] == v ? e[1] : e[0]);
  }
  std::vector<Vertex> closed = neighbors;
  closed.push_back(v);

  const HomologyProfile k = betti(g, max_vertices);
  const HomologyProfile a = betti(remove_vertices(g, {v}), max_vertices);
  const HomologyProfile b = betti(remove_vertices(g, neighbors), max_vertices);
  const HomologyProfile ab = betti(remove_vertices(g, closed), max_vertices);

  const int hi = k.betti.empty() ? -1 : k.betti.rbegin()->first;
  for (int d = -1; d <= hi; ++d) {
    if (k.betti_at(d) > a.betti_at(d) + b.betti_at(d) + ab.betti_at(d - 1)) {
      return false;
    }
  }
  return true;
}

bool join_betti_check(const Hypergraph& a, const Hypergraph& b, int max_vertices) {
  const HomologyProfile pa = betti(a, max_vertices);
  const HomologyProfile pb = betti(b, max_vertices);
  const HomologyProfile pu = betti(disjoint_union(a, b), max_vertices);

  std::map<int, std::int64_t> convolution;
  for (const auto& [i, bi] : pa.betti) {
    for (const auto& [j, bj] : pb.betti) {
      convolution[i + j + 1] += bi * bj;
    }
  }

  std::map<int, std::int64_t> actual = pu.betti;
  for (const auto& [dim, value] : convolution) {
    if (value != (actual.count(dim) ? actual[dim] : 0)) return false;
  }
  for (const auto& [dim, value] : actual) {
    if (value != (convolution.count(dim) ? convolution[dim] : 0)) return false;
  }
  return pu.total() == pa.total() * pb.total();
}

bool is_suspension_shift(const HomologyProfile& suspended, const HomologyProfile& base) {
  if (suspended.betti_at(-1) != 0) return false;
  int hi = suspended.betti.empty() ? -1 : suspended.betti.rbegin()->first;
  if (!base.betti.empty()) hi = std::max(hi, base.betti.rbegin()->first + 1);
  for (int d = -1; d <= hi; ++d) {
    if (suspended.betti_at(d + 1) != base.betti_at(d)) return false;
  }
  return true;
}

}  // namespace starcluster
