#include "diamaug/generate.hpp"

#include <map>
#include <numeric>
#include <set>

#include "diamaug/random.hpp"

namespace diamaug {

Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::InvalidArgument, "random_connected_graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }

  EdgeSet edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.insert(Edge(perm[i], perm[rng.below(i)]));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Edge e(u, v);
      if (!edges.contains(e) && rng.bernoulli(p)) edges.insert(e);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "all_connected_graphs needs n >= 1");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() > 24) throw Error(Errc::InvalidArgument, "labeled enumeration too large");

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) chosen.push_back(slots[i]);
    }
    Graph g = Graph::from_edges(n, EdgeSet(std::move(chosen)));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<std::uint16_t> adjacency_rows(const Graph& g) {
  std::vector<std::uint16_t> rows(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) rows[v] |= static_cast<std::uint16_t>(1u << w);
  }
  return rows;
}

std::uint64_t code_for_order(const std::vector<std::uint16_t>& rows,
                             const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (rows[order[i]] >> order[j] & 1) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

// Colour refinement to a stable partition. Colours are ranks of
// isomorphism-invariant signatures, so the resulting ordered partition is
// itself invariant.
std::vector<int> refine_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw Error(Errc::InvalidArgument, "canonical_code supports n <= 11");
  if (n <= 1) return 0;

  const auto rows = adjacency_rows(g);
  const auto colour = refine_colours(g);
  std::vector<std::vector<Vertex>> cells;
  {
    std::map<int, std::vector<Vertex>> by_colour;
    for (Vertex v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
    for (auto& [c, members] : by_colour) cells.push_back(std::move(members));
  }

  std::uint64_t best = UINT64_MAX;
  std::vector<Vertex> order;
  order.reserve(n);
  while (true) {
    order.clear();
    for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
    best = std::min(best, code_for_order(rows, order));

    std::size_t c = cells.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      if (std::next_permutation(cells[c].begin(), cells[c].end())) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if (code >> bit & 1) pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "need n >= 1");
  if (n > 10) throw Error(Errc::InvalidArgument, "isomorphism-class enumeration supports n <= 10");
  if (n == 1) return {Graph(1)};

  // Every connected graph has a vertex whose removal leaves it connected,
  // so extending all (n-1)-classes by one vertex reaches every n-class.
  std::set<std::uint64_t> codes;
  for (const Graph& base : connected_graphs_up_to_isomorphism(n - 1)) {
    const EdgeSet base_edges = base.edges();
    const Vertex fresh = static_cast<Vertex>(n - 1);
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      EdgeSet edges = base_edges;
      for (Vertex w = 0; w < fresh; ++w) {
        if (mask >> w & 1) edges.insert(Edge(w, fresh));
      }
      codes.insert(canonical_code(Graph::from_edges(n, edges)));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace diamaug
