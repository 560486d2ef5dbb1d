#include "diamaug/gadget.hpp"

namespace diamaug {

const char* to_string(GadgetVariant v) {
  return v == GadgetVariant::ClosedNeighborhood ? "closed-neighborhood" : "twin-only";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::U1: return "U1";
    case Role::U2: return "U2";
    case Role::Y: return "Y";
    case Role::Z: return "Z";
    case Role::X: return "X";
  }
  return "?";
}

GadgetVariant parse_variant(std::string_view s) {
  if (s == "closed-neighborhood") return GadgetVariant::ClosedNeighborhood;
  if (s == "twin-only") return GadgetVariant::TwinOnly;
  throw Error(Errc::InvalidArgument, "unknown gadget variant '" + std::string(s) + "'");
}

Role parse_role(std::string_view s) {
  if (s == "U1") return Role::U1;
  if (s == "U2") return Role::U2;
  if (s == "Y") return Role::Y;
  if (s == "Z") return Role::Z;
  if (s == "X") return Role::X;
  throw Error(Errc::InvalidArgument, "unknown role '" + std::string(s) + "'");
}

std::size_t gadget_order(std::size_t n1) {
  const std::size_t u = 2 * n1;
  return u + u * (u - 1) / 2 + 2;
}

Role GadgetGraph::role(Vertex v) const {
  graph_.check_vertex(v);
  const std::size_t n1 = base_order();
  if (v < n1) return Role::U1;
  if (v < 2 * n1) return Role::U2;
  if (v < z()) return Role::Y;
  return v == z() ? Role::Z : Role::X;
}

Vertex GadgetGraph::u1(Vertex b) const {
  base_.check_vertex(b);
  return b;
}

Vertex GadgetGraph::u2(Vertex b) const {
  base_.check_vertex(b);
  return static_cast<Vertex>(base_order() + b);
}

Vertex GadgetGraph::twin(Vertex u) const {
  if (!is_u(u)) throw Error(Errc::NotUVertex, "twin of non-U vertex " + std::to_string(u));
  const auto n1 = static_cast<Vertex>(base_order());
  return u < n1 ? u + n1 : u - n1;
}

Vertex GadgetGraph::base(Vertex u) const {
  if (!is_u(u)) throw Error(Errc::NotUVertex, "base of non-U vertex " + std::to_string(u));
  const auto n1 = static_cast<Vertex>(base_order());
  return u < n1 ? u : u - n1;
}

Vertex GadgetGraph::pair_index(Vertex a, Vertex b) const {
  graph_.check_vertex(a);
  graph_.check_vertex(b);
  if (!is_u(a) || !is_u(b)) {
    throw Error(Errc::NotUVertex, "pair_index needs two U vertices, got " +
                                      std::to_string(a) + " and " + std::to_string(b));
  }
  if (a == b) throw Error(Errc::EqualEndpoints, "pair_index needs distinct vertices");
  if (a > b) std::swap(a, b);
  // Rank of (a, b) among lexicographically ordered pairs over 2n1 vertices.
  const std::size_t u = 2 * base_order();
  const std::size_t rank = a * u - a * (a + 1) / 2 + (b - a - 1);
  return static_cast<Vertex>(u + rank);
}

std::pair<Vertex, Vertex> GadgetGraph::pair_of(Vertex y) const {
  if (!is_y(y)) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(y) + " is not a Y vertex");
  return pairs_[y - 2 * base_order()];
}

GadgetGraph build_gadget(const Graph& g1, GadgetVariant variant) {
  if (g1.order() == 0) throw Error(Errc::InvalidArgument, "base graph must be non-empty");
  if (!is_connected(g1)) throw Error(Errc::DisconnectedInput, "base graph is disconnected");

  const auto n1 = static_cast<Vertex>(g1.order());
  const Vertex num_u = 2 * n1;
  const std::size_t total = gadget_order(n1);
  const auto z = static_cast<Vertex>(total - 2);
  const auto x = static_cast<Vertex>(total - 1);

  GadgetGraph out;
  out.base_ = g1;
  out.variant_ = variant;

  std::vector<std::pair<Vertex, Vertex>> pairs;

  // Two copies of the base graph.
  for (const Edge& e : g1.edges()) {
    pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(e.u + n1, e.v + n1);
  }

  // Cross edges between the copies.
  for (Vertex a = 0; a < n1; ++a) {
    pairs.emplace_back(a, a + n1);
    if (variant == GadgetVariant::ClosedNeighborhood) {
      for (Vertex b : g1.neighbors(a)) pairs.emplace_back(a, b + n1);
    }
  }

  // One Y vertex per unordered pair of U vertices, attached to both.
  Vertex y = num_u;
  for (Vertex a = 0; a < num_u; ++a) {
    for (Vertex b = a + 1; b < num_u; ++b, ++y) {
      out.pairs_.emplace_back(a, b);
      pairs.emplace_back(y, a);
      pairs.emplace_back(y, b);
      pairs.emplace_back(y, z);
    }
  }
  for (Vertex p = num_u; p < z; ++p) {
    for (Vertex q = p + 1; q < z; ++q) pairs.emplace_back(p, q);
  }
  pairs.emplace_back(z, x);

  out.graph_ = Graph::from_edge_list(total, pairs);
  return out;
}

Role classify_vertex(const GadgetGraph& gadget, Vertex v) { return gadget.role(v); }

EdgeSet forward_map(const GadgetGraph& gadget, const VertexSet& d) {
  EdgeSet out;
  for (Vertex b : d) out.insert(Edge(gadget.x(), gadget.u1(b)));
  return out;
}

std::string vertex_label(const GadgetGraph& gadget, Vertex v) {
  switch (gadget.role(v)) {
    case Role::U1: return "u1(" + std::to_string(gadget.base(v)) + ")";
    case Role::U2: return "u2(" + std::to_string(gadget.base(v)) + ")";
    case Role::Y: {
      auto [a, b] = gadget.pair_of(v);
      return "y(" + vertex_label(gadget, a) + "," + vertex_label(gadget, b) + ")";
    }
    case Role::Z: return "z";
    case Role::X: return "x";
  }
  return "?";
}

}  // namespace diamaug
