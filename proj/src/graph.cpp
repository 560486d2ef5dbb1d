#include "diamaug/graph.hpp"

#include <queue>

namespace diamaug {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::ParseError: return "ParseError";
    case Errc::HeaderMismatch: return "HeaderMismatch";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::NotUVertex: return "NotUVertex";
    case Errc::EqualEndpoints: return "EqualEndpoints";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InconsistentMap: return "InconsistentMap";
    case Errc::NotAugmenting: return "NotAugmenting";
    case Errc::NotProper: return "NotProper";
    case Errc::ExistingEdge: return "ExistingEdge";
    case Errc::RuleUnsound: return "RuleUnsound";
    case Errc::NonTermination: return "NonTermination";
    case Errc::UMinusNonEmpty: return "UMinusNonEmpty";
  }
  return "Unknown";
}

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(a));
  }
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return false;
  members_.erase(it);
  return true;
}

EdgeSet::EdgeSet(std::vector<Edge> es) : edges_(std::move(es)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::insert(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::erase(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  return true;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

std::string to_string(const EdgeSet& s) {
  std::string out = "{";
  for (const Edge& e : s) {
    if (out.size() > 1) out += ",";
    out += to_string(e);
  }
  return out + "}";
}

Graph Graph::from_edge_list(std::size_t n,
                            const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Graph g(n);
  for (auto [a, b] : pairs) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) {
      throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(a));
    }
    g.add_edge_unchecked(a, b);
  }
  g.finalize();
  return g;
}

Graph Graph::from_edges(std::size_t n, const EdgeSet& edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.v);
    g.add_edge_unchecked(e.u, e.v);
  }
  g.finalize();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

EdgeSet Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return EdgeSet(std::move(out));
}

Graph Graph::with_edges(const EdgeSet& extra) const {
  Graph g = *this;
  for (const Edge& e : extra) {
    check_vertex(e.v);
    g.add_edge_unchecked(e.u, e.v);
  }
  g.finalize();
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) +
                                      " out of range for graph of order " +
                                      std::to_string(order()));
  }
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

void Graph::finalize() {
  std::size_t degree_sum = 0;
  for (auto& a : adjacency_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    degree_sum += a.size();
  }
  num_edges_ = degree_sum / 2;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> relabel(g.order(), static_cast<Vertex>(-1));
  Vertex next = 0;
  for (Vertex v : keep) {
    g.check_vertex(v);
    relabel[v] = next++;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v : keep) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && relabel[w] != static_cast<Vertex>(-1)) {
        pairs.emplace_back(relabel[v], relabel[w]);
      }
    }
  }
  return Graph::from_edge_list(keep.size(), pairs);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == g.order();
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    pairs.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(std::size_t n) {
  auto pairs = std::vector<std::pair<Vertex, Vertex>>{};
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, pairs);
}

}  // namespace diamaug
