#include "diamaug/distance.hpp"

#include <queue>

namespace diamaug {

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

Diameter diameter(const Graph& g) {
  if (g.order() == 0) {
    throw Error(Errc::InvalidArgument, "diameter of the empty graph is undefined");
  }
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::uint32_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Diameter diameter_with_augmentation(const Graph& g, const EdgeSet& s) {
  if (s.empty()) return diameter(g);
  return diameter(g.with_edges(s));
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : s) {
    g.check_vertex(v);
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::find(covered.begin(), covered.end(), false) == covered.end();
}

}  // namespace diamaug
