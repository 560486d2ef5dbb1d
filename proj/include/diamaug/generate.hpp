#pragma once

#include <cstdint>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug {

/// Random connected graph: a random recursive spanning tree over a random
/// vertex permutation, plus every remaining pair independently with
/// probability p. Deterministic in (n, p, seed).
Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed);

/// Every connected labeled graph on n vertices, found by filtering all
/// 2^C(n,2) edge subsets. Practical for n <= 6.
std::vector<Graph> all_connected_graphs(std::size_t n);

/// One representative per isomorphism class of connected graphs on n
/// vertices, in canonical labelling and sorted by canonical code.
/// Built by vertex extension from n-1; practical for n <= 9.
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

/// Canonical upper-triangle adjacency code: equal for isomorphic graphs and
/// only for them. Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Inverse of the code layout used by canonical_code.
Graph graph_from_code(std::size_t n, std::uint64_t code);

}  // namespace diamaug
