#include "diamaug/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace diamaug {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_number(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                    std::string(tok) + "'",
                line_no);
  }
  return value;
}

bool is_blank_or_comment(const std::vector<std::string_view>& toks) {
  return toks.empty() || toks.front().front() == '#';
}

struct EdgeLine {
  std::uint64_t u;
  std::uint64_t v;
  std::size_t line_no;
};

EdgeLine parse_edge_line(const std::vector<std::string_view>& toks, std::size_t line_no) {
  if (toks.size() != 3 || toks[0] != "e") {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": expected 'e <u> <v>'", line_no);
  }
  return {to_number(toks[1], line_no), to_number(toks[2], line_no), line_no};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<EdgeLine> body;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto toks = tokens(lines[i]);
    if (is_blank_or_comment(toks)) continue;
    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "p") {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": expected header 'p <n> <m>'",
                    line_no);
      }
      n = to_number(toks[1], line_no);
      m = to_number(toks[2], line_no);
      have_header = true;
      continue;
    }
    body.push_back(parse_edge_line(toks, line_no));
  }
  if (!have_header) throw Error(Errc::ParseError, "missing header 'p <n> <m>'", 1);
  if (body.size() != m) {
    throw Error(Errc::HeaderMismatch, "header declares " + std::to_string(m) +
                                          " edges but body has " +
                                          std::to_string(body.size()));
  }

  EdgeSet edges;
  for (const auto& e : body) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::OutOfRange,
                  "line " + std::to_string(e.line_no) + ": vertex id out of range for n = " +
                      std::to_string(n),
                  e.line_no);
    }
    if (e.u == e.v) {
      throw Error(Errc::SelfLoop, "line " + std::to_string(e.line_no) + ": self-loop",
                  e.line_no);
    }
    if (!edges.insert(Edge(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v)))) {
      throw Error(Errc::HeaderMismatch,
                  "line " + std::to_string(e.line_no) +
                      ": duplicate edge, body disagrees with declared m",
                  e.line_no);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeSet parse_edge_set(std::string_view text) {
  const auto lines = split_lines(text);
  EdgeSet out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (is_blank_or_comment(toks)) continue;
    const auto e = parse_edge_line(toks, i + 1);
    if (e.u == e.v) throw Error(Errc::SelfLoop, "line " + std::to_string(i + 1) + ": self-loop", i + 1);
    out.insert(Edge(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v)));
  }
  return out;
}

std::string serialize_edge_set(const EdgeSet& s) {
  std::ostringstream out;
  for (const Edge& e : s) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace diamaug
