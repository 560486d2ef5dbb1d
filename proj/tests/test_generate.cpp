#include <doctest.h>

#include <set>

#include "diamaug/generate.hpp"
#include "diamaug/random.hpp"

using namespace diamaug;

TEST_CASE("random_connected_graph") {
  CHECK(random_connected_graph(1, 0.5, 7) == Graph(1));
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(random_connected_graph(n, 1.0, n * 13) == complete_graph(n));
    const Graph tree = random_connected_graph(n, 0.0, n);
    CHECK(tree.size() == n - 1);
    CHECK(is_connected(tree));
  }
  CHECK(random_connected_graph(5, 0.4, 42) == random_connected_graph(5, 0.4, 42));

  std::set<std::uint64_t> shapes;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_connected_graph(6, 0.2, seed);
    CHECK(is_connected(g));
    shapes.insert(canonical_code(g));
  }
  CHECK(shapes.size() > 20);

  CHECK_THROWS_AS(random_connected_graph(0, 0.5, 1), Error);
  CHECK_THROWS_AS(random_connected_graph(3, 1.5, 1), Error);
}

TEST_CASE("labeled connected graph counts") {
  // Connected labeled graphs: 1, 1, 4, 38, 728.
  const std::vector<std::size_t> expected{1, 1, 4, 38, 728};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(all_connected_graphs(n).size() == expected[n - 1]);
  }
}

TEST_CASE("connected graphs up to isomorphism") {
  // Connected unlabeled graphs: 1, 1, 2, 6, 21, 112, 853, 11117.
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto graphs = connected_graphs_up_to_isomorphism(n);
    CHECK(graphs.size() == expected[n - 1]);
    for (const Graph& g : graphs) CHECK(is_connected(g));
  }
}

TEST_CASE("edge-subset filtering and vertex extension give the same classes") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> labeled;
    for (const Graph& g : all_connected_graphs(n)) labeled.insert(canonical_code(g));
    std::set<std::uint64_t> extended;
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) extended.insert(canonical_code(g));
    CHECK(labeled == extended);
  }
}

TEST_CASE("canonical_code is invariant under relabelling") {
  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const Graph g = random_connected_graph(n, 0.4, seed);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
    const Graph h = Graph::from_edge_list(n, pairs);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(graph_from_code(n, canonical_code(g)).size() == g.size());
  }
  // P4 and the star K1,3 have the same edge count but differ.
  const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_code(path_graph(4)) != canonical_code(star));
}
