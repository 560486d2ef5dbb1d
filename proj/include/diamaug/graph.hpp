#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diamaug/error.hpp"

namespace diamaug {

using Vertex = std::uint32_t;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b);

  bool touches(Vertex w) const noexcept { return u == w || v == w; }
  // Endpoint opposite to `w`; `w` must be an endpoint.
  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  bool erase(Vertex v);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> es) : EdgeSet(std::vector<Edge>(es)) {}
  explicit EdgeSet(std::vector<Edge> es);

  bool contains(const Edge& e) const;
  // Returns false if `e` was already present.
  bool insert(const Edge& e);
  bool erase(const Edge& e);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const EdgeSet&) const = default;
  auto operator<=>(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

std::string to_string(const VertexSet& s);
std::string to_string(const EdgeSet& s);

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds a graph from raw pairs. Duplicates (in either orientation) are
  /// collapsed; ids >= n throw OutOfRange, u == v throws SelfLoop.
  static Graph from_edge_list(std::size_t n,
                              const std::vector<std::pair<Vertex, Vertex>>& pairs);
  static Graph from_edges(std::size_t n, const EdgeSet& edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// All edges, sorted.
  EdgeSet edges() const;

  /// Copy of this graph with the extra edges added (existing ones ignored).
  Graph with_edges(const EdgeSet& extra) const;

  void check_vertex(Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  void add_edge_unchecked(Vertex u, Vertex v);
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_connected(const Graph& g);

// Common small graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace diamaug
