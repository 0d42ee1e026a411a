#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "qwgsim/generators.hpp"
#include "qwgsim/io.hpp"
#include "qwgsim/permutation.hpp"

using namespace qwgsim;

namespace {

void check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree_sum += g.degree(v);
    for (Vertex u : g.neighbours(v)) CHECK(g.has_edge(u, v));
  }
  CHECK(degree_sum == 2 * g.edge_count() - g.loop_count());
  std::set<Edge> unique(g.edges().begin(), g.edges().end());
  CHECK(unique.size() == g.edge_count());
  CHECK(g.edge_count() <= g.vertex_count() * (g.vertex_count() + 1) / 2);
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

// Vertices of the neighbourhood of v, as an induced subgraph.
Graph neighbourhood(const Graph& g, Vertex v) {
  auto nb = g.neighbours(v);
  std::vector<Vertex> list(nb.begin(), nb.end());
  return induced_subgraph(g, list);
}

}  // namespace

TEST_CASE("graph stores edges once with a symmetric view") {
  const std::vector<Edge> edges{{1, 0}, {1, 2}, {2, 2}};
  Graph g(3, edges);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(2) == 2);  // edge to 1 plus a loop counted once
  CHECK(g.loop_count() == 1);
  check_invariants(g);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 2}}), GraphError);
}

TEST_CASE("edge list parsing") {
  SUBCASE("header fixes the vertex count") {
    Graph g = parse_edge_list("n 3\n0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("self-loop has degree one") {
    Graph g = parse_edge_list("0 0");
    CHECK(g.vertex_count() == 1);
    CHECK(g.degree(0) == 1);
  }
  SUBCASE("comments and blank lines") {
    Graph g = parse_edge_list("# a path\n\n0 1 # first\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("duplicate reported at its line") {
    try {
      parse_edge_list("0 1\n0 1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse_edge_list("0 1\n2 3\n1 0");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed token and out-of-range index") {
    try {
      parse_edge_list("0 1\n1 x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse_edge_list("n 2\n0 2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);
  }
  SUBCASE("format then parse reproduces the graph") {
    Graph g = gen_er(12, 0.4, 3);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    Graph isolated_tail(5, std::vector<Edge>{{0, 1}});
    CHECK(parse_edge_list(format_edge_list(isolated_tail)).vertex_count() == 5);
  }
}

TEST_CASE("graph6 fixed vectors") {
  Graph k3 = graph6_decode("Bw");
  CHECK(k3 == complete_graph(3));
  CHECK(graph6_encode(complete_graph(3)) == "Bw");
  Graph one = graph6_decode("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(graph6_encode(Graph(0)) == "?");
  CHECK(graph6_decode(">>graph6<<Bw\n") == complete_graph(3));

  // Corpus strings re-encode to themselves.
  for (const char* s : {"Bw", "@", "?", "A_", "DQc", "Ch", "E?~w", "GCZJd_", "Kq`j^?_WB`H?"}) {
    CAPTURE(s);
    CHECK(graph6_encode(graph6_decode(s)) == s);
  }
}

TEST_CASE("graph6 large vertex counts use the long header") {
  Graph g = gen_er(70, 0.1, 9);
  const std::string s = graph6_encode(g);
  CHECK(s[0] == '~');
  CHECK(graph6_decode(s) == g);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(graph6_decode("B"), ParseError);            // truncated
  CHECK_THROWS_AS(graph6_decode("B\x20"), ParseError);        // byte < 63
  CHECK_THROWS_AS(graph6_decode("Bw?"), ParseError);          // trailing data
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_encode(parse_edge_list("0 0\n0 1")), GraphError);
}

TEST_CASE("graph6 round trip on random simple graphs") {
  Rng rng(2024);
  for (std::size_t n = 1; n <= 64; ++n) {
    const double p = rng.uniform();
    Graph g = gen_er(n, p, rng.split(n).seed());
    CAPTURE(n);
    const std::string s = graph6_encode(g);
    CHECK(graph6_decode(s) == g);
    CHECK(graph6_encode(graph6_decode(s)) == s);
  }
}

TEST_CASE("Erdos-Renyi generator") {
  CHECK(gen_er(10, 0.0, 5).edge_count() == 0);
  CHECK(gen_er(10, 1.0, 5) == complete_graph(10));
  CHECK(gen_er(20, 0.3, 11) == gen_er(20, 0.3, 11));
  CHECK_THROWS_AS(gen_er(5, 1.5, 1), GraphError);
  CHECK_THROWS_AS(gen_er(5, -0.1, 1), GraphError);

  // Binomial mean 0.3 * 190 = 57.
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Graph g = gen_er(20, 0.3, seed);
    CHECK(g.loop_count() == 0);
    total += static_cast<double>(g.edge_count());
  }
  CHECK(total / 1000.0 == doctest::Approx(57.0).epsilon(3.0 / 57.0));
}

TEST_CASE("scale-free generator") {
  CHECK(gen_scale_free(30, 3, 7).edge_count() == 84);
  CHECK(gen_scale_free(50, 2, 7).edge_count() == 97);
  CHECK(gen_scale_free(4, 4, 7) == complete_graph(4));
  CHECK(gen_scale_free(10, 1, 3).edge_count() == 9);
  CHECK_THROWS_AS(gen_scale_free(2, 3, 1), GraphError);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_scale_free(40, 3, seed);
    CHECK(g.edge_count() == 3 + 37 * 3);
    CHECK(g.loop_count() == 0);
    check_invariants(g);
    // Every attached vertex brings exactly m new edges to earlier vertices.
    for (Vertex v = 3; v < 40; ++v) {
      std::size_t earlier = 0;
      for (Vertex u : g.neighbours(v)) earlier += u < v;
      CHECK(earlier == 3);
    }
  }
  CHECK(gen_scale_free(30, 3, 1) == gen_scale_free(30, 3, 1));
}

TEST_CASE("uniform edge-count generator") {
  CHECK(gen_uniform(8, 0, 1).edge_count() == 0);
  CHECK(gen_uniform(8, 28, 1) == complete_graph(8));
  CHECK(gen_uniform(20, 40, 1).edge_count() == 40);
  CHECK(gen_uniform(20, 40, 1) == gen_uniform(20, 40, 1));
  CHECK_THROWS_AS(gen_uniform(8, 29, 1), GraphError);
}

TEST_CASE("generators satisfy graph invariants") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    check_invariants(gen_er(15, 0.3, seed));
    check_invariants(gen_scale_free(15, 2, seed));
    check_invariants(gen_uniform(15, 30, seed));
  }
}

TEST_CASE("permutations") {
  Rng rng(77);
  Graph g = gen_er(14, 0.35, 4);
  CHECK(permute(g, Permutation::identity(14)) == g);
  for (int trial = 0; trial < 20; ++trial) {
    Permutation p = Permutation::random(14, rng);
    Graph h = permute(g, p);
    CHECK(permute(h, p.inverse()) == g);
    CHECK(sorted_degrees(h) == sorted_degrees(g));
    CHECK(diameter(h) == diameter(g));
    for (const Edge& e : g.edges()) CHECK(h.has_edge(p(e.first), p(e.second)));
  }
  CHECK_THROWS_AS(Permutation({0, 0, 1}), GraphError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), GraphError);
  CHECK_THROWS_AS(permute(g, Permutation::identity(3)), GraphError);
}

TEST_CASE("diameter") {
  CHECK(diameter(path_graph(4)) == 3);
  CHECK(diameter(complete_graph(5)) == 1);
  const std::vector<Edge> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK(diameter(Graph(6, triangles)) == 1);
  CHECK(diameter(empty_graph(5)) == 0);
  CHECK(diameter(Graph(0)) == 0);
  CHECK(diameter(cycle_graph(7)) == 3);
  const std::vector<Edge> path_plus_edge{{0, 1}, {1, 2}, {2, 3}, {5, 6}};
  CHECK(diameter(Graph(7, path_plus_edge)) == 3);
}

TEST_CASE("random edge removal") {
  Graph g = gen_er(20, 0.3, 8);
  CHECK(remove_random_edges(g, 0, 1) == g);
  Graph bare = remove_random_edges(g, g.edge_count(), 1);
  CHECK(bare.edge_count() == 0);
  CHECK(bare.vertex_count() == 20);
  Graph a = remove_random_edges(g, 10, 42);
  CHECK(a == remove_random_edges(g, 10, 42));
  CHECK(a.edge_count() == g.edge_count() - 10);
  for (const Edge& e : a.edges()) CHECK(g.has_edge(e.first, e.second));
  CHECK_THROWS_AS(remove_random_edges(g, g.edge_count() + 1, 1), GraphError);
}

TEST_CASE("builtin graphs") {
  CHECK(srg_check(builtin_graph("k33"), SrgParams{6, 3, 0, 3}));
  CHECK(srg_check(builtin_graph("octahedron"), SrgParams{6, 4, 2, 4}));
  CHECK(srg_check(builtin_graph("rook4x4"), SrgParams{16, 6, 2, 2}));
  CHECK(srg_check(builtin_graph("shrikhande"), SrgParams{16, 6, 2, 2}));
  CHECK_FALSE(srg_check(path_graph(4), SrgParams{4, 1, 0, 0}));
  CHECK_FALSE(srg_params(path_graph(4)).has_value());

  // Rook graph: each neighbourhood is two disjoint triangles. Shrikhande:
  // each neighbourhood is a 6-cycle. So the two are not isomorphic.
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  Graph rook = builtin_graph("rook4x4");
  Graph shrik = builtin_graph("shrikhande");
  for (Vertex v = 0; v < 16; ++v) {
    Graph rn = neighbourhood(rook, v);
    Graph sn = neighbourhood(shrik, v);
    CHECK(rn.edge_count() == 6);
    CHECK(sn.edge_count() == 6);
    CHECK(diameter(rn) == 1);  // two triangles
    CHECK(diameter(sn) == 3);  // C6
    CHECK(srg_params(rn) == SrgParams{6, 2, 1, 0});
    CHECK(srg_params(sn) == std::nullopt);
  }

  CHECK(builtin_graph("complete(5)") == complete_graph(5));
  CHECK(builtin_graph("empty(4)").edge_count() == 0);
  CHECK(builtin_graph("path(4)") == path_graph(4));
  CHECK(builtin_graph("cycle(5)").edge_count() == 5);
  CHECK_THROWS_AS(builtin_graph("petersen"), GraphError);
  CHECK_THROWS_AS(builtin_graph("complete(x)"), GraphError);
}

TEST_CASE("load_graph sources") {
  CHECK(load_graph("builtin:k33") == builtin_graph("k33"));
  CHECK_THROWS(load_graph("/nonexistent/graph.el"));
}
