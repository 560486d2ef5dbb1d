#include "diamaug/solvers.hpp"

#include <set>

#include <boost/dynamic_bitset.hpp>

#include "diamaug/distance.hpp"

namespace diamaug {

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

struct NodeCapHit {};

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(g.order(), Bits(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].set(w);
  }
  return adj;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(static_cast<Vertex>(i));
}

// Vertices within `radius` of v.
Bits ball(const std::vector<Bits>& adj, Vertex v, std::uint32_t radius) {
  const std::size_t n = adj.size();
  Bits seen(n);
  seen.set(v);
  Bits frontier = seen;
  for (std::uint32_t r = 0; r < radius && frontier.any(); ++r) {
    Bits next(n);
    for_each_bit(frontier, [&](Vertex w) { next |= adj[w]; });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<UncoveredPair> uncovered_bits(const std::vector<Bits>& adj, std::uint32_t d_target) {
  std::vector<UncoveredPair> out;
  const std::size_t n = adj.size();
  for (Vertex u = 0; u < n; ++u) {
    Bits far = ~ball(adj, u, d_target);
    for (auto v = far.find_next(u); v != Bits::npos; v = far.find_next(v)) {
      out.push_back({u, static_cast<Vertex>(v)});
    }
  }
  return out;
}

// Non-edges with one endpoint in `from`.
std::vector<Edge> non_edges_touching(const std::vector<Bits>& adj, const Bits& from) {
  std::set<Edge> out;
  for_each_bit(from, [&](Vertex a) {
    Bits missing = ~adj[a];
    missing.reset(a);
    for_each_bit(missing, [&](Vertex b) { out.insert(Edge(a, b)); });
  });
  return {out.begin(), out.end()};
}

std::vector<Edge> branch_bits(const std::vector<Bits>& adj, UncoveredPair p, std::uint32_t d_target) {
  if (d_target == 1) return {Edge(p.u, p.v)};
  if (d_target == 2) {
    Bits ends(adj.size());
    ends.set(p.u);
    ends.set(p.v);
    return non_edges_touching(adj, ends);
  }
  auto from_u = non_edges_touching(adj, ball(adj, p.u, d_target - 1));
  auto from_v = non_edges_touching(adj, ball(adj, p.v, d_target - 1));
  return from_v.size() < from_u.size() ? from_v : from_u;
}

std::size_t branch_size_estimate(const std::vector<Bits>& adj, UncoveredPair p) {
  const std::size_t n = adj.size();
  return (n - 1 - adj[p.u].count()) + (n - 1 - adj[p.v].count()) - 1;
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::InvalidArgument, "graph must be non-empty");
  if (!is_connected(g)) throw Error(Errc::DisconnectedInput, "input graph is disconnected");
}

class AugmentationSearch {
 public:
  AugmentationSearch(const Graph& g, std::size_t k, std::uint32_t d_target, const SolverLimits& limits)
      : adj_(adjacency_bits(g)), k_(k), d_target_(d_target), limits_(limits) {}

  bool run() { return search(); }
  const std::vector<Edge>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t lower_bound(const std::vector<UncoveredPair>& pairs) const {
    if (d_target_ == 1) return pairs.size();
    if (d_target_ >= 3) return 1;
    // A repair edge for (u, v) touches u or v, so it can serve at most two
    // pairs of a vertex-disjoint family.
    Bits used(adj_.size());
    std::size_t disjoint = 0;
    for (const auto& p : pairs) {
      if (!used.test(p.u) && !used.test(p.v)) {
        used.set(p.u);
        used.set(p.v);
        ++disjoint;
      }
    }
    return (disjoint + 1) / 2;
  }

  UncoveredPair pick(const std::vector<UncoveredPair>& pairs) const {
    if (d_target_ != 2) return pairs.front();
    UncoveredPair best = pairs.front();
    std::size_t best_size = branch_size_estimate(adj_, best);
    for (const auto& p : pairs) {
      const std::size_t size = branch_size_estimate(adj_, p);
      if (size < best_size) {
        best = p;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<std::uint32_t> key() const {
    std::vector<std::uint32_t> k;
    k.reserve(chosen_.size());
    const auto n = static_cast<std::uint32_t>(adj_.size());
    for (const Edge& e : chosen_) k.push_back(e.u * n + e.v);
    std::sort(k.begin(), k.end());
    return k;
  }

  bool search() {
    if (++nodes_ > limits_.max_nodes) throw NodeCapHit{};
    const auto pairs = uncovered_bits(adj_, d_target_);
    if (pairs.empty()) return true;
    const std::size_t remaining = k_ - chosen_.size();
    if (remaining == 0 || lower_bound(pairs) > remaining) return false;
    auto state = key();
    if (failed_.contains(state)) return false;

    for (const Edge& e : branch_bits(adj_, pick(pairs), d_target_)) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
      chosen_.push_back(e);
      const bool found = search();
      if (found) return true;
      chosen_.pop_back();
      adj_[e.u].reset(e.v);
      adj_[e.v].reset(e.u);
    }
    failed_.insert(std::move(state));
    return false;
  }

  std::vector<Bits> adj_;
  std::size_t k_;
  std::uint32_t d_target_;
  SolverLimits limits_;
  std::vector<Edge> chosen_;
  std::set<std::vector<std::uint32_t>> failed_;
  std::uint64_t nodes_ = 0;
};

class DominationSearch {
 public:
  DominationSearch(const Graph& g, std::size_t k, const SolverLimits& limits)
      : closed_(adjacency_bits(g)), k_(k), limits_(limits) {
    for (Vertex v = 0; v < g.order(); ++v) closed_[v].set(v);
  }

  bool run() { return search(Bits(closed_.size())); }
  const std::vector<Vertex>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(const Bits& dominated) {
    if (++nodes_ > limits_.max_nodes) throw NodeCapHit{};
    if (dominated.all()) return true;
    const std::size_t remaining = k_ - chosen_.size();
    if (remaining == 0) return false;

    const Bits open = ~dominated;
    Vertex target = 0;
    std::size_t target_options = SIZE_MAX;
    std::size_t best_gain = 0;
    for_each_bit(open, [&](Vertex v) {
      const std::size_t options = closed_[v].count();
      if (options < target_options) {
        target = v;
        target_options = options;
      }
    });
    for (Vertex c = 0; c < closed_.size(); ++c) {
      best_gain = std::max(best_gain, (closed_[c] & open).count());
    }
    if ((open.count() + best_gain - 1) / best_gain > remaining) return false;

    const Bits& options = closed_[target];
    for (auto c = options.find_first(); c != Bits::npos; c = options.find_next(c)) {
      chosen_.push_back(static_cast<Vertex>(c));
      if (search(dominated | closed_[c])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Bits> closed_;
  std::size_t k_;
  SolverLimits limits_;
  std::vector<Vertex> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DominatingSetResult solve_dominating_set(const Graph& g, std::size_t k, const SolverLimits& limits) {
  require_connected(g);
  const auto start = Clock::now();
  DominatingSetResult result;
  DominationSearch search(g, k, limits);
  try {
    if (search.run()) {
      result.answer = Answer::Yes;
      result.witness = VertexSet(search.chosen());
    }
  } catch (const NodeCapHit&) {
    result.answer = Answer::ResourceExceeded;
  }
  result.nodes_expanded = search.nodes();
  result.elapsed = Clock::now() - start;
  return result;
}

AugmentationResult solve_diameter_augmentation(const Graph& g, std::size_t k,
                                               std::uint32_t d_target,
                                               const SolverLimits& limits) {
  require_connected(g);
  if (d_target == 0) throw Error(Errc::InvalidArgument, "target diameter must be >= 1");
  const auto start = Clock::now();
  AugmentationResult result;

  if (k == 0) {
    result.nodes_expanded = 1;
    if (*diameter(g) <= d_target) {
      result.answer = Answer::Yes;
      result.witness = EdgeSet{};
    }
    result.elapsed = Clock::now() - start;
    return result;
  }

  AugmentationSearch search(g, k, d_target, limits);
  try {
    if (search.run()) {
      result.answer = Answer::Yes;
      result.witness = EdgeSet(search.chosen());
    }
  } catch (const NodeCapHit&) {
    result.answer = Answer::ResourceExceeded;
  }
  result.nodes_expanded = search.nodes();
  result.elapsed = Clock::now() - start;
  return result;
}

AugmentationResult solve_diameter_improvement(const Graph& g, std::size_t k,
                                              const SolverLimits& limits) {
  require_connected(g);
  const std::uint32_t d = *diameter(g);
  if (d <= 1) return AugmentationResult{};
  return solve_diameter_augmentation(g, k, d - 1, limits);
}

std::vector<UncoveredPair> uncovered_pairs(const Graph& g, const EdgeSet& s, std::uint32_t d_target) {
  const Graph h = g.with_edges(s);
  std::vector<UncoveredPair> out;
  for (Vertex u = 0; u < h.order(); ++u) {
    const auto dist = bfs_distances(h, u);
    for (Vertex v = u + 1; v < h.order(); ++v) {
      if (dist[v] > d_target) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Edge> branch_set(const Graph& current, UncoveredPair pair, std::uint32_t d_target) {
  current.check_vertex(pair.u);
  current.check_vertex(pair.v);
  if (d_target == 0) throw Error(Errc::InvalidArgument, "target diameter must be >= 1");
  return branch_bits(adjacency_bits(current), pair, d_target);
}

}  // namespace diamaug
