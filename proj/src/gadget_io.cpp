#include <charconv>
#include <optional>
#include <sstream>

#include "diamaug/gadget.hpp"

namespace diamaug {

namespace {

struct MapRecord {
  std::optional<GadgetVariant> variant;
  std::optional<std::size_t> n1;
  std::optional<std::size_t> vertices;
  std::vector<std::pair<Vertex, Role>> roles;
  std::vector<std::pair<Vertex, Vertex>> twins;
  std::vector<std::pair<Vertex, Vertex>> bases;
  std::vector<std::tuple<Vertex, Vertex, Vertex>> ys;
};

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw Error(Errc::ParseError, "map line " + std::to_string(line_no) + ": " + why, line_no);
}

Vertex number(std::string_view tok, std::size_t line_no) {
  Vertex value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    bad_line(line_no, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

MapRecord parse_map(std::string_view text) {
  MapRecord rec;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& key = toks[0];
    auto want = [&](std::size_t count) {
      if (toks.size() != count) bad_line(line_no, "wrong field count for '" + key + "'");
    };
    try {
      if (key == "variant") {
        want(2);
        rec.variant = parse_variant(toks[1]);
      } else if (key == "n1") {
        want(2);
        rec.n1 = number(toks[1], line_no);
      } else if (key == "vertices") {
        want(2);
        rec.vertices = number(toks[1], line_no);
      } else if (key == "role") {
        want(3);
        rec.roles.emplace_back(number(toks[1], line_no), parse_role(toks[2]));
      } else if (key == "twin") {
        want(3);
        rec.twins.emplace_back(number(toks[1], line_no), number(toks[2], line_no));
      } else if (key == "base") {
        want(3);
        rec.bases.emplace_back(number(toks[1], line_no), number(toks[2], line_no));
      } else if (key == "y") {
        want(4);
        rec.ys.emplace_back(number(toks[1], line_no), number(toks[2], line_no),
                            number(toks[3], line_no));
      } else {
        bad_line(line_no, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      bad_line(line_no, e.what());
    }
  }
  if (!rec.variant || !rec.n1 || !rec.vertices) {
    throw Error(Errc::ParseError, "map is missing one of 'variant', 'n1', 'vertices'");
  }
  return rec;
}

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(Errc::InconsistentMap, "gadget map does not match graph: " + why);
}

}  // namespace

std::string serialize_gadget_map(const GadgetGraph& gadget) {
  std::ostringstream out;
  out << "# gadget map\n";
  out << "variant " << to_string(gadget.variant()) << '\n';
  out << "n1 " << gadget.base_order() << '\n';
  out << "vertices " << gadget.order() << '\n';
  for (Vertex v = 0; v < gadget.order(); ++v) {
    out << "role " << v << ' ' << to_string(gadget.role(v)) << '\n';
  }
  for (Vertex b = 0; b < gadget.base_order(); ++b) {
    out << "twin " << gadget.u1(b) << ' ' << gadget.u2(b) << '\n';
  }
  for (Vertex u = 0; u < 2 * gadget.base_order(); ++u) {
    out << "base " << u << ' ' << gadget.base(u) << '\n';
  }
  for (Vertex y = static_cast<Vertex>(2 * gadget.base_order()); y < gadget.z(); ++y) {
    auto [a, b] = gadget.pair_of(y);
    out << "y " << a << ' ' << b << ' ' << y << '\n';
  }
  return out.str();
}

GadgetGraph load_gadget(const Graph& graph, std::string_view map_text) {
  const MapRecord rec = parse_map(map_text);
  if (*rec.vertices != graph.order()) {
    inconsistent("map has " + std::to_string(*rec.vertices) + " vertices, graph has " +
                 std::to_string(graph.order()));
  }
  if (*rec.n1 == 0 || gadget_order(*rec.n1) != graph.order()) {
    inconsistent("n1 = " + std::to_string(*rec.n1) + " does not give " +
                 std::to_string(graph.order()) + " vertices");
  }

  // Base graph = the subgraph induced by U1, relabelled through the base map.
  const std::size_t n1 = *rec.n1;
  std::vector<Vertex> u1_of_base(n1, static_cast<Vertex>(-1));
  std::vector<Role> roles(graph.order(), Role::X);
  std::vector<bool> role_seen(graph.order(), false);
  for (auto [v, r] : rec.roles) {
    if (v >= graph.order()) inconsistent("role for vertex " + std::to_string(v));
    roles[v] = r;
    role_seen[v] = true;
  }
  for (auto [u, b] : rec.bases) {
    if (u >= graph.order() || b >= n1) inconsistent("base entry " + std::to_string(u));
    if (roles[u] == Role::U1) u1_of_base[b] = u;
  }
  std::vector<std::pair<Vertex, Vertex>> base_pairs;
  for (Vertex a = 0; a < n1; ++a) {
    if (u1_of_base[a] == static_cast<Vertex>(-1)) {
      inconsistent("no U1 vertex for base vertex " + std::to_string(a));
    }
    for (Vertex b = a + 1; b < n1; ++b) {
      if (u1_of_base[b] != static_cast<Vertex>(-1) &&
          graph.adjacent(u1_of_base[a], u1_of_base[b])) {
        base_pairs.emplace_back(a, b);
      }
    }
  }
  const Graph g1 = Graph::from_edge_list(n1, base_pairs);
  if (!is_connected(g1)) inconsistent("U1 does not induce a connected base graph");

  GadgetGraph rebuilt = build_gadget(g1, *rec.variant);
  if (rebuilt.graph() != graph) inconsistent("edges differ from the rebuilt gadget");

  if (rec.roles.size() != graph.order() ||
      std::find(role_seen.begin(), role_seen.end(), false) != role_seen.end()) {
    inconsistent("role list is incomplete");
  }
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (roles[v] != rebuilt.role(v)) inconsistent("role of vertex " + std::to_string(v));
  }
  if (rec.twins.size() != n1 || rec.bases.size() != 2 * n1 ||
      rec.ys.size() != rebuilt.order() - 2 * n1 - 2) {
    inconsistent("twin/base/y table sizes");
  }
  for (auto [a, b] : rec.twins) {
    if (!rebuilt.is_u(a) || rebuilt.twin(a) != b) inconsistent("twin " + std::to_string(a));
  }
  for (auto [u, b] : rec.bases) {
    if (!rebuilt.is_u(u) || rebuilt.base(u) != b) inconsistent("base " + std::to_string(u));
  }
  for (auto [a, b, y] : rec.ys) {
    if (!rebuilt.is_u(a) || !rebuilt.is_u(b) || a == b || rebuilt.pair_index(a, b) != y) {
      inconsistent("y entry " + std::to_string(y));
    }
  }
  return rebuilt;
}

}  // namespace diamaug
