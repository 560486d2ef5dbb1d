#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug {

enum class Answer { Yes, No, ResourceExceeded };

const char* to_string(Answer a);

template <class Witness>
struct SolveResult {
  Answer answer = Answer::No;
  std::optional<Witness> witness;  // present iff answer == Yes
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{0};

  bool yes() const noexcept { return answer == Answer::Yes; }
};

using DominatingSetResult = SolveResult<VertexSet>;
using AugmentationResult = SolveResult<EdgeSet>;

struct SolverLimits {
  // Search nodes before giving up with ResourceExceeded.
  std::uint64_t max_nodes = 20'000'000;
};

/// Is there a dominating set of size <= k? Branches on the undominated vertex
/// with the smallest closed neighborhood, trying its members in ascending
/// order. Throws DisconnectedInput.
DominatingSetResult solve_dominating_set(const Graph& g, std::size_t k,
                                         const SolverLimits& limits = {});

/// Can at most k new edges bring the diameter to <= d_target?
/// Branch and bound over uncovered pairs, see branch_set(). Throws
/// DisconnectedInput, InvalidArgument for d_target == 0.
AugmentationResult solve_diameter_augmentation(const Graph& g, std::size_t k,
                                               std::uint32_t d_target,
                                               const SolverLimits& limits = {});

/// Can at most k new edges make the diameter strictly smaller? Answers No
/// when the diameter is already <= 1.
AugmentationResult solve_diameter_improvement(const Graph& g, std::size_t k,
                                              const SolverLimits& limits = {});

/// A vertex pair whose distance exceeds the target diameter.
struct UncoveredPair {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const UncoveredPair&) const = default;
};

/// Pairs u < v at distance > d_target in (V, E ∪ s), sorted.
std::vector<UncoveredPair> uncovered_pairs(const Graph& g, const EdgeSet& s,
                                           std::uint32_t d_target);

/// Candidate edges the augmentation search branches on to repair `pair` in
/// graph `current`; every repairing augmentation contains one of them.
///  d_target == 1: {u, v} only.
///  d_target == 2: {u, v} plus non-edges at u plus non-edges at v (a repair
///                 path has length <= 2, so it uses a new edge at u or v).
///  d_target >= 3: non-edges with an endpoint within distance d_target - 1 of
///                 u (the first new edge on any repair path), or the same
///                 for v, whichever set is smaller.
/// Sorted lexicographically.
std::vector<Edge> branch_set(const Graph& current, UncoveredPair pair, std::uint32_t d_target);

}  // namespace diamaug
