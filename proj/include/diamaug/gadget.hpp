#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug {

/// How U1 and U2 are joined.
///  - ClosedNeighborhood: u1(a) ~ u2(b) iff b ∈ N[a] in the base graph.
///  - TwinOnly: u1(a) ~ u2(a) only.
/// Only the closed-neighborhood gadget makes a dominating set of the base
/// graph map to a diameter-2 augmenting set.
enum class GadgetVariant { ClosedNeighborhood, TwinOnly };

enum class Role { U1, U2, Y, Z, X };

const char* to_string(GadgetVariant v);
const char* to_string(Role r);
GadgetVariant parse_variant(std::string_view s);
Role parse_role(std::string_view s);

/// The reduction image of a base graph G1 with n1 vertices. Ids are laid out
/// as: U1 = [0, n1) by base id, U2 = [n1, 2n1), then one Y vertex per
/// unordered pair of U vertices in lexicographic order, then z, then x.
class GadgetGraph {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const Graph& base_graph() const noexcept { return base_; }
  GadgetVariant variant() const noexcept { return variant_; }
  std::size_t base_order() const noexcept { return base_.order(); }
  std::size_t order() const noexcept { return graph_.order(); }

  Role role(Vertex v) const;
  bool is_u(Vertex v) const { return v < 2 * base_order(); }
  bool is_y(Vertex v) const { return v >= 2 * base_order() && v < z(); }

  Vertex u1(Vertex b) const;
  Vertex u2(Vertex b) const;
  Vertex z() const noexcept { return static_cast<Vertex>(graph_.order() - 2); }
  Vertex x() const noexcept { return static_cast<Vertex>(graph_.order() - 1); }

  /// Same base vertex, other copy.
  Vertex twin(Vertex u) const;
  /// Originating base-graph vertex of a U vertex.
  Vertex base(Vertex u) const;

  /// The Y vertex y(a, b) for distinct U vertices a, b (symmetric).
  Vertex pair_index(Vertex a, Vertex b) const;
  /// The two U vertices a Y vertex stands for, smaller first.
  std::pair<Vertex, Vertex> pair_of(Vertex y) const;

 private:
  friend GadgetGraph build_gadget(const Graph& g1, GadgetVariant variant);

  Graph base_;
  Graph graph_;
  GadgetVariant variant_ = GadgetVariant::ClosedNeighborhood;
  std::vector<std::pair<Vertex, Vertex>> pairs_;  // indexed by y - 2n1
};

/// Builds the gadget. Throws DisconnectedInput if g1 is disconnected and
/// InvalidArgument if it is empty.
GadgetGraph build_gadget(const Graph& g1,
                         GadgetVariant variant = GadgetVariant::ClosedNeighborhood);

/// Same as gadget.role(v).
Role classify_vertex(const GadgetGraph& gadget, Vertex v);

/// {x, u1(d)} for each d in the base-graph vertex set.
EdgeSet forward_map(const GadgetGraph& gadget, const VertexSet& d);

/// Number of vertices a gadget over n1 base vertices has.
std::size_t gadget_order(std::size_t n1);

/// Human-readable vertex name: u1(b), u2(b), y(a,b), z or x.
std::string vertex_label(const GadgetGraph& gadget, Vertex v);

// Sidecar map file:
//   variant <closed-neighborhood|twin-only>
//   n1 <n1>
//   vertices <|V2|>
//   role <id> <U1|U2|Y|Z|X>     one per vertex
//   twin <u1> <u2>              one per base vertex
//   base <u> <b>                one per U vertex
//   y <a> <b> <id>              one per Y vertex
std::string serialize_gadget_map(const GadgetGraph& gadget);

/// Rebuilds a gadget from its serialized graph and sidecar map. The map must
/// describe exactly the given graph: the base graph is read off U1, the gadget
/// is rebuilt, and any disagreement throws InconsistentMap.
GadgetGraph load_gadget(const Graph& graph, std::string_view map_text);

}  // namespace diamaug
