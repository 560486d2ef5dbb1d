#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Diameter of a graph; std::nullopt means the graph is disconnected.
using Diameter = std::optional<std::uint32_t>;

/// Single-source BFS. Unreachable vertices get kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Max shortest-path length over all pairs (0 for a single vertex).
Diameter diameter(const Graph& g);

/// Diameter of (V, E ∪ s) without modifying g.
Diameter diameter_with_augmentation(const Graph& g, const EdgeSet& s);

/// True iff every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

}  // namespace diamaug
