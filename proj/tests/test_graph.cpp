#include <doctest.h>

#include "diamaug/distance.hpp"
#include "diamaug/generate.hpp"
#include "diamaug/graph.hpp"
#include "diamaug/graph_io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace diamaug;

using testutil::error_code;

TEST_CASE("from_edge_list builds simple graphs") {
  const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3.size() == 2);
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(2) == 1);
  CHECK(p3.adjacent(2, 1));

  const Graph k1 = Graph::from_edge_list(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.size() == 1);
  CHECK(dup.degree(0) == 1);
  CHECK(dup.degree(3) == 0);

  CHECK(error_code([] { Graph::from_edge_list(2, {{0, 2}}); }) == Errc::OutOfRange);
  CHECK(error_code([] { Graph::from_edge_list(2, {{1, 1}}); }) == Errc::SelfLoop);
}

TEST_CASE("edge count is half the degree sum and adjacency is symmetric") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected_graph(1 + seed % 9, 0.3, seed);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) {
        CHECK(w != v);
        CHECK(g.adjacent(w, v));
      }
    }
    CHECK(2 * g.size() == degree_sum);
  }
}

TEST_CASE("bfs_distances") {
  CHECK(bfs_distances(path_graph(4), 0) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(bfs_distances(complete_graph(3), 1) == std::vector<std::uint32_t>{1, 0, 1});
  const Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(bfs_distances(two_edges, 0) ==
        std::vector<std::uint32_t>{0, 1, kUnreachable, kUnreachable});
  CHECK(error_code([] { bfs_distances(path_graph(2), 2); }) == Errc::OutOfRange);
}

TEST_CASE("bfs distances are symmetric, step-bounded and match Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_connected_graph(2 + seed % 10, 0.15, seed);
    const auto fw = oracle::floyd_warshall(g);
    std::vector<std::vector<std::uint32_t>> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK(d[u][u] == 0);
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(d[u][v] == d[v][u]);
        CHECK(d[u][v] == fw[u][v]);
      }
      for (Vertex w : g.neighbors(u)) {
        const auto gap = d[0][u] > d[0][w] ? d[0][u] - d[0][w] : d[0][w] - d[0][u];
        CHECK(gap <= 1);
      }
    }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(3)) == Diameter{1});
  CHECK(diameter(path_graph(4)) == Diameter{3});
  CHECK(diameter(Graph(1)) == Diameter{0});
  CHECK_FALSE(diameter(Graph::from_edge_list(4, {{0, 1}, {2, 3}})).has_value());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_connected_graph(1 + seed % 9, 0.25, seed);
    std::uint32_t expected = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (auto d : bfs_distances(g, v)) expected = std::max(expected, d);
    }
    CHECK(diameter(g) == Diameter{expected});
    CHECK(diameter(g) == oracle::diameter(g));
  }
}

TEST_CASE("is_dominating") {
  CHECK(is_dominating(path_graph(3), {1}));
  CHECK_FALSE(is_dominating(cycle_graph(5), {0}));
  const Graph g = random_connected_graph(6, 0.3, 11);
  CHECK(is_dominating(g, VertexSet({0, 1, 2, 3, 4, 5})));
  CHECK(error_code([] { is_dominating(path_graph(2), {5}); }) == Errc::OutOfRange);
}

TEST_CASE("is_dominating agrees with the definition on every graph n <= 7 and every subset") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v) {
          if (mask >> v & 1) s.push_back(v);
        }
        REQUIRE(is_dominating(g, VertexSet(s)) == oracle::dominates(g, s));
        ++checked;
      }
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("diameter_with_augmentation") {
  const Graph p5 = path_graph(5);
  CHECK(diameter_with_augmentation(p5, {Edge(0, 4)}) == Diameter{2});
  CHECK(oracle::diameter(p5, {Edge(0, 4)}) == std::optional<std::uint32_t>{2});
  CHECK(p5.size() == 4);  // not mutated
  CHECK(diameter_with_augmentation(path_graph(4), {Edge(0, 3)}) == Diameter{2});
  CHECK(error_code([&] { diameter_with_augmentation(p5, {Edge(0, 9)}); }) == Errc::OutOfRange);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_connected_graph(2 + seed % 7, 0.3, seed);
    CHECK(diameter_with_augmentation(g, {}) == diameter(g));
  }
}

TEST_CASE("parse_graph and serialize_graph") {
  const std::string text = "p 3 2\ne 0 1\ne 1 2\n";
  const Graph p3 = parse_graph(text);
  CHECK(p3 == path_graph(3));
  CHECK(serialize_graph(p3) == text);

  CHECK(parse_graph("# a comment\np 3 2\n\ne 2 1\ne 1 0\n") == path_graph(3));
  CHECK(parse_graph("p 1 0\n") == Graph(1));

  CHECK(error_code([] { parse_graph("p 2 1\ne 0 5\n"); }) == Errc::OutOfRange);
  CHECK(error_code([] { parse_graph("p 3 2\ne 0 1\n"); }) == Errc::HeaderMismatch);
  CHECK(error_code([] { parse_graph("p 3 2\ne 0 1\ne 1 0\n"); }) == Errc::HeaderMismatch);
  CHECK(error_code([] { parse_graph("p 3 1\ne 1 1\n"); }) == Errc::SelfLoop);
  CHECK(error_code([] { parse_graph("e 0 1\n"); }) == Errc::ParseError);

  try {
    parse_graph("p 3 2\ne 0 1\ne 1 x\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse inverts serialize on generated graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_connected_graph(1 + seed % 12, 0.35, seed);
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("edge set files") {
  const EdgeSet s = parse_edge_set("# set\ne 4 1\ne 0 2\n");
  CHECK(s == EdgeSet{Edge(0, 2), Edge(1, 4)});
  CHECK(serialize_edge_set(s) == "e 0 2\ne 1 4\n");
  CHECK(parse_edge_set("").empty());
  CHECK(error_code([] { parse_edge_set("e 1\n"); }) == Errc::ParseError);
}

TEST_CASE("induced_subgraph relabels in ascending order") {
  const Graph c5 = cycle_graph(5);
  const Graph sub = induced_subgraph(c5, {0, 1, 2});
  CHECK(sub == path_graph(3));
}
