#include "starcluster/oracle.hpp"

#include <algorithm>

namespace starcluster {

// Local set helpers. The reduction engine has its own; the whole point of
// this module is to be an independent reference path, so nothing here is
// shared with it beyond the Hypergraph type itself.
namespace {

std::vector<Vertex> sorted(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool contains_all(const std::vector<Vertex>& haystack, const std::vector<Vertex>& needle) {
  // both sorted
  return std::includes(haystack.begin(), haystack.end(), needle.begin(), needle.end());
}

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> subset_by_mask(const std::vector<Vertex>& universe, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) out.push_back(universe[i]);
  }
  return out;
}

}  // namespace

ExplicitComplex::ExplicitComplex(std::vector<Vertex> ground, std::set<std::vector<Vertex>> faces)
    : ground_(sorted(std::move(ground))), faces_(std::move(faces)) {}

ExplicitComplex ExplicitComplex::independence_complex(const Hypergraph& h, int max_vertices) {
  const auto& ids = h.vertices();
  const int n = static_cast<int>(ids.size());
  if (n > max_vertices) {
    throw TooLargeError(ids.size(), static_cast<std::size_t>(max_vertices));
  }
  std::set<std::vector<Vertex>> faces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> subset = subset_by_mask(ids, mask);
    bool independent = true;
    for (const Edge& e : h.edges()) {
      if (contains_all(subset, e)) {
        independent = false;
        break;
      }
    }
    if (independent) faces.insert(std::move(subset));
  }
  return ExplicitComplex(ids, std::move(faces));
}

bool ExplicitComplex::contains(std::vector<Vertex> face) const {
  return faces_.count(sorted(std::move(face))) > 0;
}

ExplicitComplex star(const ExplicitComplex& c, const std::vector<Vertex>& sigma) {
  const std::vector<Vertex> s = sorted(sigma);
  if (!c.contains(s)) throw NotAFaceError("sigma is not a face of the complex");
  std::set<std::vector<Vertex>> out;
  for (const auto& gamma : c.faces()) {
    if (!contains_all(gamma, s)) continue;
    // every subset of gamma joins with sigma inside gamma, so all belong
    const int m = static_cast<int>(gamma.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      out.insert(subset_by_mask(gamma, mask));
    }
  }
  return ExplicitComplex(c.ground(), std::move(out));
}

ExplicitComplex star_cluster(const ExplicitComplex& c, const std::vector<Vertex>& sigma) {
  const std::vector<Vertex> s = sorted(sigma);
  if (!c.contains(s)) throw NotAFaceError("sigma is not a face of the complex");
  std::set<std::vector<Vertex>> out;
  for (Vertex v : s) {
    ExplicitComplex sv = star(c, {v});
    out.insert(sv.faces().begin(), sv.faces().end());
  }
  return ExplicitComplex(c.ground(), std::move(out));
}

ExplicitComplex complex_union(const ExplicitComplex& a, const ExplicitComplex& b) {
  std::set<std::vector<Vertex>> faces = a.faces();
  faces.insert(b.faces().begin(), b.faces().end());
  return ExplicitComplex(merged(a.ground(), b.ground()), std::move(faces));
}

ExplicitComplex complex_intersection(const ExplicitComplex& a, const ExplicitComplex& b) {
  std::set<std::vector<Vertex>> faces;
  for (const auto& f : a.faces()) {
    if (b.faces().count(f)) faces.insert(f);
  }
  return ExplicitComplex(merged(a.ground(), b.ground()), std::move(faces));
}

std::set<std::vector<Vertex>> closure(const Hypergraph& h, const std::vector<Vertex>& universe,
                                      int max_universe) {
  const std::vector<Vertex> u = sorted(universe);
  const int n = static_cast<int>(u.size());
  if (n > max_universe) {
    throw TooLargeError(u.size(), static_cast<std::size_t>(max_universe));
  }
  for (const Edge& e : h.edges()) {
    if (!contains_all(u, e)) {
      throw Error("closure universe must contain every edge vertex");
    }
  }
  std::set<std::vector<Vertex>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> subset = subset_by_mask(u, mask);
    for (const Edge& e : h.edges()) {
      if (contains_all(subset, e)) {
        out.insert(std::move(subset));
        break;
      }
    }
  }
  return out;
}

Hypergraph build_hi(const Hypergraph& h, Vertex v, int i) {
  const EdgeList through = h.edges_containing(v);
  if (through.empty()) throw Error("vertex " + std::to_string(v) + " is isolated");
  if (i < 1 || i > static_cast<int>(through.size())) {
    throw IndexOutOfRangeError("edge index " + std::to_string(i) + " out of range 1.." +
                               std::to_string(through.size()));
  }
  const Edge& ei = through[i - 1];

  EdgeList family;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) continue;  // edges through v excluded
    std::vector<Vertex> stripped;
    std::set_difference(e.begin(), e.end(), ei.begin(), ei.end(), std::back_inserter(stripped));
    family.push_back(std::move(stripped));  // empty differences are rejected below
  }
  for (const Edge& e : through) {
    std::vector<Vertex> tilde;
    for (Vertex x : e) {
      if (x != v) tilde.push_back(x);
    }
    family.push_back(std::move(tilde));
  }

  std::vector<Vertex> ground;
  for (Vertex x : h.vertices()) {
    if (x != v) ground.push_back(x);
  }
  return Hypergraph(std::move(ground), std::move(family));
}

std::set<std::vector<Vertex>> minimal_elements(const std::set<std::vector<Vertex>>& family) {
  std::set<std::vector<Vertex>> out;
  for (const auto& candidate : family) {
    bool minimal = true;
    for (const auto& other : family) {
      if (other != candidate && contains_all(candidate, other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(candidate);
  }
  return out;
}

}  // namespace starcluster
