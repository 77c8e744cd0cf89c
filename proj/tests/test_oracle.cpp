#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "starcluster/cycles.hpp"
#include "starcluster/errors.hpp"
#include "starcluster/hypergraph.hpp"
#include "starcluster/oracle.hpp"
#include "starcluster/reduction.hpp"

using namespace starcluster;

namespace {

Hypergraph from(std::initializer_list<Edge> edges) {
  return Hypergraph::from_edges(EdgeList(edges));
}

bool eligible(const Hypergraph& h, Vertex v) {
  return !h.is_isolated(v) && !vertex_in_induced_3cycle(h, v).has_value();
}

// Direct filter definition of the star: faces whose union with sigma is a face.
std::set<std::vector<Vertex>> star_by_filter(const ExplicitComplex& c,
                                             const std::vector<Vertex>& sigma) {
  std::set<std::vector<Vertex>> out;
  for (const auto& face : c.faces()) {
    Edge joined = edge_union(face, sigma);
    if (c.contains(joined)) out.insert(face);
  }
  return out;
}

std::vector<Hypergraph> identity_corpus() {
  std::vector<Hypergraph> corpus = {cycle_graph(4), cycle_graph(5),  cycle_graph(6),
                                    cycle_graph(7), tight_path(5, 2), tight_path(6, 3),
                                    tight_path(5, 3), from({{1, 2}}),  from({{1, 2, 3}, {3, 4}})};
  for (unsigned seed = 1; seed <= 21; ++seed) {
    corpus.push_back(random_hypergraph(5 + static_cast<int>(seed % 4), 2, 3,
                                       0.15 + 0.05 * (seed % 4), seed));
  }
  return corpus;
}

}  // namespace

TEST_CASE("independence_complex enumerates exactly the edge-free subsets") {
  ExplicitComplex c = ExplicitComplex::independence_complex(cycle_graph(3));
  CHECK(c.faces() == std::set<std::vector<Vertex>>{{}, {0}, {1}, {2}});
  CHECK(c.contains({}));
  CHECK(c.contains({2}));
  CHECK_FALSE(c.contains({0, 1}));
  CHECK(c.ground() == std::vector<Vertex>{0, 1, 2});

  ExplicitComplex simplex = ExplicitComplex::independence_complex(Hypergraph({1, 2, 3}, {}));
  CHECK(simplex.faces().size() == 8);

  // contains() canonicalizes its probe.
  ExplicitComplex pentagon = ExplicitComplex::independence_complex(cycle_graph(5));
  CHECK(pentagon.contains({3, 1}));
}

TEST_CASE("independence_complex honours the vertex guard") {
  std::vector<Vertex> ids;
  for (int i = 0; i < 19; ++i) ids.push_back(i);
  CHECK_THROWS_AS(ExplicitComplex::independence_complex(Hypergraph(ids, {})), TooLargeError);
  CHECK_THROWS_AS(ExplicitComplex::independence_complex(cycle_graph(6), 5), TooLargeError);
}

TEST_CASE("star of the empty face is the whole complex") {
  ExplicitComplex c = ExplicitComplex::independence_complex(cycle_graph(5));
  CHECK(star(c, {}).faces() == c.faces());
}

TEST_CASE("star matches the direct filter definition") {
  for (const Hypergraph& h : {cycle_graph(5), cycle_graph(6), tight_path(6, 3),
                              random_hypergraph(7, 2, 3, 0.3, 3)}) {
    ExplicitComplex c = ExplicitComplex::independence_complex(h);
    for (Vertex v : h.vertices()) {
      if (!c.contains({v})) continue;
      CAPTURE(v);
      CHECK(star(c, {v}).faces() == star_by_filter(c, {v}));
    }
  }
}

TEST_CASE("star of a face in a full simplex is everything") {
  ExplicitComplex simplex = ExplicitComplex::independence_complex(Hypergraph({1, 2, 3}, {}));
  CHECK(star(simplex, {1, 3}).faces() == simplex.faces());
}

TEST_CASE("star requires a face") {
  ExplicitComplex c = ExplicitComplex::independence_complex(cycle_graph(3));
  CHECK_THROWS_AS(star(c, {0, 1}), NotAFaceError);
  CHECK_THROWS_AS(star(c, {7}), NotAFaceError);
}

TEST_CASE("star_cluster unions the vertex stars") {
  ExplicitComplex c = ExplicitComplex::independence_complex(cycle_graph(5));
  CHECK(star_cluster(c, {2}).faces() == star(c, {2}).faces());

  std::set<std::vector<Vertex>> expected;
  const ExplicitComplex star2 = star(c, {2});
  const ExplicitComplex star0 = star(c, {0});
  expected.insert(star2.faces().begin(), star2.faces().end());
  expected.insert(star0.faces().begin(), star0.faces().end());
  CHECK(star_cluster(c, {0, 2}).faces() == expected);

  // In I(K_3) the cluster of a single vertex is just the edge-free pair.
  ExplicitComplex k3 = ExplicitComplex::independence_complex(cycle_graph(3));
  CHECK(star_cluster(k3, {1}).faces() == std::set<std::vector<Vertex>>{{}, {1}});
}

TEST_CASE("complex union and intersection") {
  ExplicitComplex c = ExplicitComplex::independence_complex(cycle_graph(5));
  ExplicitComplex a = star(c, {0});
  ExplicitComplex b = star(c, {2});
  ExplicitComplex u = complex_union(a, b);
  ExplicitComplex i = complex_intersection(a, b);
  for (const auto& f : u.faces()) CHECK((a.faces().count(f) || b.faces().count(f)));
  for (const auto& f : i.faces()) {
    CHECK(a.faces().count(f));
    CHECK(b.faces().count(f));
  }
  CHECK(u.faces().size() + i.faces().size() == a.faces().size() + b.faces().size());
}

TEST_CASE("closure lists the dependent sets") {
  auto cl = closure(from({{1, 2}}), {1, 2, 3});
  CHECK(cl == std::set<Edge>{{1, 2}, {1, 2, 3}});

  CHECK(closure(Hypergraph({1, 2}, {}), {1, 2}).empty());

  // Closure complements the independence complex inside the power set.
  for (unsigned seed = 1; seed <= 8; ++seed) {
    Hypergraph h = random_hypergraph(6, 2, 3, 0.3, seed);
    auto dependent = closure(h, h.vertices());
    auto independent = ExplicitComplex::independence_complex(h).faces();
    CHECK(dependent.size() + independent.size() == (1u << 6));
    for (const auto& s : dependent) CHECK_FALSE(independent.count(s));
  }
}

TEST_CASE("closure validates the universe and the guard") {
  CHECK_THROWS_AS(closure(from({{1, 2}}), {1}), Error);
  std::vector<Vertex> big;
  for (int i = 0; i < 19; ++i) big.push_back(i);
  CHECK_THROWS_AS(closure(from({{0, 1}}), big), TooLargeError);
  CHECK_THROWS_AS(closure(from({{0, 1}}), {0, 1, 2}, 2), TooLargeError);
}

TEST_CASE("build_hi strips one incident edge and cuts the rest") {
  // Pentagon on 1..5: edges through 1 are {1,2} (i=1) and {1,5} (i=2).
  Hypergraph c5({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  Hypergraph h1 = build_hi(c5, 1, 1);
  CHECK(h1.vertices() == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(h1.edges() == EdgeList{{2}, {3}, {3, 4}, {4, 5}, {5}});

  Hypergraph h2 = build_hi(c5, 1, 2);
  CHECK(h2.edges() == EdgeList{{2}, {2, 3}, {3, 4}, {4}, {5}});

  CHECK(build_hi(from({{1, 2}}), 1, 1).edges() == EdgeList{{2}});

  CHECK_THROWS_AS(build_hi(c5, 1, 0), IndexOutOfRangeError);
  CHECK_THROWS_AS(build_hi(c5, 1, 3), IndexOutOfRangeError);
  CHECK_THROWS_AS(build_hi(c5, 9, 1), UnknownVertexError);
  CHECK_THROWS_AS(build_hi(Hypergraph({1, 2, 3}, {{1, 2}}), 3, 1), Error);
}

TEST_CASE("minimal_elements keeps the inclusion-minimal sets") {
  std::set<Edge> family = {{1}, {1, 2}, {2, 3}, {3}};
  CHECK(minimal_elements(family) == std::set<Edge>{{1}, {3}});
  CHECK(minimal_elements({}).empty());
  std::set<Edge> antichain = {{1, 2}, {2, 3}};
  CHECK(minimal_elements(antichain) == antichain);
  // The empty set dominates everything.
  std::set<Edge> with_empty = {{}, {1}, {2, 3}};
  CHECK(minimal_elements(with_empty) == std::set<Edge>{{}});
}

TEST_CASE("independence complex of H_i is the intersection of two stars") {
  for (const Hypergraph& h : identity_corpus()) {
    ExplicitComplex complex = ExplicitComplex::independence_complex(h);
    for (Vertex v : h.vertices()) {
      if (!eligible(h, v)) continue;
      const auto through = h.edges_containing(v);
      const ExplicitComplex star_v = star(complex, {v});
      for (int i = 1; i <= static_cast<int>(through.size()); ++i) {
        const Edge tilde = edge_difference(through[static_cast<std::size_t>(i - 1)], {v});
        const ExplicitComplex lhs =
            ExplicitComplex::independence_complex(build_hi(h, v, i));
        const ExplicitComplex rhs = complex_intersection(star_v, star(complex, tilde));
        CAPTURE(v);
        CAPTURE(i);
        CHECK(lhs.faces() == rhs.faces());
      }
    }
  }
}

TEST_CASE("the stars of v and its stripped edges cover the whole complex") {
  for (const Hypergraph& h : identity_corpus()) {
    ExplicitComplex complex = ExplicitComplex::independence_complex(h);
    for (Vertex v : h.vertices()) {
      if (!eligible(h, v)) continue;
      ExplicitComplex covered = star(complex, {v});
      for (const Edge& e : h.edges_containing(v)) {
        covered = complex_union(covered, star(complex, edge_difference(e, {v})));
      }
      CAPTURE(v);
      CHECK(covered.faces() == complex.faces());
    }
  }
}

TEST_CASE("closure of the reduction equals the intersection of H_i closures") {
  for (const Hypergraph& h : identity_corpus()) {
    for (Vertex v : h.vertices()) {
      if (!eligible(h, v)) continue;
      std::vector<Vertex> universe;
      for (Vertex u : h.vertices())
        if (u != v) universe.push_back(u);

      const int k = static_cast<int>(h.edges_containing(v).size());
      std::set<Edge> intersection;
      for (int i = 1; i <= k; ++i) {
        auto cl = closure(build_hi(h, v, i), universe);
        if (i == 1) {
          intersection = std::move(cl);
        } else {
          std::set<Edge> next;
          for (const auto& s : cl)
            if (intersection.count(s)) next.insert(s);
          intersection = std::move(next);
        }
      }

      const Hypergraph reduced = star_cluster_reduce(h, v);
      CAPTURE(v);
      CHECK(closure(reduced, universe) == intersection);

      const auto minimal = minimal_elements(intersection);
      const std::set<Edge> reduced_edges(reduced.edges().begin(), reduced.edges().end());
      CHECK(minimal == reduced_edges);
    }
  }
}
