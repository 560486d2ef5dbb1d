#include "diamaug/normalize.hpp"

#include "diamaug/distance.hpp"

namespace diamaug {

namespace {

void check_endpoints(const GadgetGraph& gadget, const EdgeSet& s) {
  for (const Edge& e : s) gadget.graph().check_vertex(e.v);
}

// x–Y edges of s in sorted order, as the Y endpoint.
std::vector<Vertex> x_to_y(const GadgetGraph& gadget, const EdgeSet& s) {
  std::vector<Vertex> ys;
  for (const Edge& e : s) {
    if (e.touches(gadget.x()) && gadget.is_y(e.other(gadget.x()))) ys.push_back(e.other(gadget.x()));
  }
  return ys;
}

bool in_u_x(const GadgetGraph& gadget, const EdgeSet& s, Vertex u) {
  return s.contains(Edge(gadget.x(), u));
}

// The recorded step is the actual difference: an edge the rule "adds" that
// is already in s is not listed as added.
RuleApplication swap(const EdgeSet& s, int rule, const std::vector<Edge>& removed,
                     const std::vector<Edge>& added) {
  RuleApplication out{s, SwapStep{rule, {}, {}, 0}};
  for (const Edge& e : removed) {
    if (out.result.erase(e)) out.step.removed.insert(e);
  }
  for (const Edge& e : added) {
    if (out.result.insert(e)) out.step.added.insert(e);
  }
  return out;
}

std::optional<RuleApplication> match_rule(const GadgetGraph& gadget, const EdgeSet& s, int rule) {
  const Graph& g2 = gadget.graph();
  const Vertex x = gadget.x();
  const Vertex z = gadget.z();

  switch (rule) {
    case 0:
      for (const Edge& e : s) {
        if (e.touches(x) || e.touches(z)) continue;
        const bool xa = in_u_x(gadget, s, e.u);
        const bool xb = in_u_x(gadget, s, e.v);
        if (xa && !xb) return swap(s, 0, {e}, {Edge(x, e.v)});
        if (xb && !xa) return swap(s, 0, {e}, {Edge(x, e.u)});
        return swap(s, 0, {e}, {});
      }
      return std::nullopt;

    case 1:
      for (const Edge& e : s) {
        if (!e.touches(z)) continue;
        const Vertex w = e.other(z);
        if (w == x) return swap(s, 1, {e}, {});
        return swap(s, 1, {e}, {Edge(x, w)});
      }
      return std::nullopt;

    case 2:
      for (Vertex y : x_to_y(gadget, s)) {
        auto [a, b] = gadget.pair_of(y);
        if (g2.adjacent(a, b)) return swap(s, 2, {Edge(x, y)}, {Edge(x, a)});
      }
      return std::nullopt;

    case 3:
      for (Vertex y : x_to_y(gadget, s)) {
        auto [a, b] = gadget.pair_of(y);
        if (in_u_x(gadget, s, a)) return swap(s, 3, {Edge(x, y)}, {Edge(x, b)});
        if (in_u_x(gadget, s, b)) return swap(s, 3, {Edge(x, y)}, {Edge(x, a)});
      }
      return std::nullopt;

    case 4: {
      const VertexSet ux = partition_u(gadget, s).u_x;
      auto near_ux = [&](Vertex a) {
        for (Vertex c : g2.neighbors(a)) {
          if (ux.contains(c)) return true;
        }
        return false;
      };
      for (Vertex y : x_to_y(gadget, s)) {
        auto [a, b] = gadget.pair_of(y);
        if (near_ux(a)) return swap(s, 4, {Edge(x, y)}, {Edge(x, b)});
        if (near_ux(b)) return swap(s, 4, {Edge(x, y)}, {Edge(x, a)});
      }
      return std::nullopt;
    }

    case 5: {
      const auto ys = x_to_y(gadget, s);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
          auto [p, q] = gadget.pair_of(ys[i]);
          auto [r, t] = gadget.pair_of(ys[j]);
          Vertex shared;
          Vertex a;
          Vertex c;
          if (p == r) { shared = p; a = q; c = t; }
          else if (p == t) { shared = p; a = q; c = r; }
          else if (q == r) { shared = q; a = p; c = t; }
          else if (q == t) { shared = q; a = p; c = r; }
          else continue;
          return swap(s, 5, {Edge(x, ys[i]), Edge(x, ys[j])},
                      {Edge(x, gadget.pair_index(a, c)), Edge(x, shared)});
        }
      }
      return std::nullopt;
    }

    case 6: {
      const auto ys = x_to_y(gadget, s);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
          auto [p, q] = gadget.pair_of(ys[i]);
          auto [r, t] = gadget.pair_of(ys[j]);
          if (p == r || p == t || q == r || q == t) continue;
          for (Vertex a : {p, q}) {
            for (Vertex c : {r, t}) {
              if (!g2.adjacent(a, c)) continue;
              const Vertex b = a == p ? q : p;
              const Vertex d = c == r ? t : r;
              return swap(s, 6, {Edge(x, ys[i]), Edge(x, ys[j])},
                          {Edge(x, a), Edge(x, gadget.pair_index(b, d))});
            }
          }
        }
      }
      return std::nullopt;
    }

    case 7:
      for (const Edge& e : s) {
        if (!e.touches(x)) continue;
        const Vertex u = e.other(x);
        if (gadget.is_u(u) && gadget.role(u) == Role::U2) {
          return swap(s, 7, {e}, {Edge(x, gadget.twin(u))});
        }
      }
      return std::nullopt;

    default:
      throw Error(Errc::InvalidArgument, "no rule " + std::to_string(rule));
  }
}

}  // namespace

UPartition partition_u(const GadgetGraph& gadget, const EdgeSet& s) {
  check_endpoints(gadget, s);
  std::vector<Vertex> ux;
  std::vector<Vertex> minus;
  for (const Edge& e : s) {
    if (!e.touches(gadget.x())) continue;
    const Vertex w = e.other(gadget.x());
    if (gadget.is_u(w)) ux.push_back(w);
  }
  UPartition out;
  out.u_x = VertexSet(std::move(ux));
  for (Vertex y : x_to_y(gadget, s)) {
    auto [a, b] = gadget.pair_of(y);
    if (!out.u_x.contains(a)) minus.push_back(a);
    if (!out.u_x.contains(b)) minus.push_back(b);
  }
  out.u_minus = VertexSet(std::move(minus));
  std::vector<Vertex> plus;
  for (Vertex u = 0; u < 2 * gadget.base_order(); ++u) {
    if (!out.u_x.contains(u) && !out.u_minus.contains(u)) plus.push_back(u);
  }
  out.u_plus = VertexSet(std::move(plus));
  return out;
}

EdgeSet replay(const EdgeSet& initial, const std::vector<SwapStep>& steps) {
  EdgeSet cur = initial;
  for (const auto& step : steps) {
    for (const Edge& e : step.removed) cur.erase(e);
    for (const Edge& e : step.added) cur.insert(e);
  }
  return cur;
}

std::optional<RuleApplication> apply_rule(const GadgetGraph& gadget, const EdgeSet& s, int rule) {
  check_endpoints(gadget, s);
  auto applied = match_rule(gadget, s, rule);
  if (!applied) return std::nullopt;

  const Diameter d = diameter_with_augmentation(gadget.graph(), applied->result);
  applied->step.diameter_after = d.value_or(kUnreachable);
  if (!d || *d > 2) {
    SwapTrace trace{s, {applied->step}, applied->result};
    throw NormalizeError(Errc::RuleUnsound,
                         "rule " + std::to_string(rule) + " raised the diameter above 2 (removed " +
                             to_string(applied->step.removed) + ", added " +
                             to_string(applied->step.added) + ")",
                         std::move(trace));
  }
  return applied;
}

std::array<std::size_t, 4> progress_measure(const GadgetGraph& gadget, const EdgeSet& s) {
  std::array<std::size_t, 4> m{0, 0, 0, 0};
  for (const Edge& e : s) {
    if (e.touches(gadget.z())) {
      ++m[1];
    } else if (!e.touches(gadget.x())) {
      ++m[0];
    } else {
      const Vertex w = e.other(gadget.x());
      if (gadget.is_y(w)) ++m[2];
      else if (gadget.role(w) == Role::U2) ++m[3];
    }
  }
  return m;
}

std::size_t step_budget(std::size_t initial_size, std::size_t gadget_order) {
  const std::size_t base = initial_size + gadget_order;
  return 4 * base * base;
}

bool is_proper(const GadgetGraph& gadget, const EdgeSet& s) {
  for (const Edge& e : s) {
    if (!e.touches(gadget.x())) return false;
    const Vertex w = e.other(gadget.x());
    if (!gadget.is_u(w) || gadget.role(w) != Role::U1) return false;
  }
  return true;
}

Normalized normalize(const GadgetGraph& gadget, const EdgeSet& s) {
  check_endpoints(gadget, s);
  for (const Edge& e : s) {
    if (gadget.graph().has_edge(e)) {
      throw Error(Errc::ExistingEdge, "edge " + to_string(e) + " is already in the gadget");
    }
  }
  const Diameter d0 = diameter_with_augmentation(gadget.graph(), s);
  if (!d0 || *d0 > 2) {
    throw Error(Errc::NotAugmenting, "edge set does not bring the gadget to diameter 2");
  }

  SwapTrace trace;
  trace.initial = s;
  EdgeSet cur = s;
  const std::size_t budget = step_budget(s.size(), gadget.order());

  auto step = [&](int rule) {
    std::optional<RuleApplication> applied;
    try {
      applied = apply_rule(gadget, cur, rule);
    } catch (const NormalizeError& err) {
      SwapTrace full = trace;
      full.steps.push_back(err.trace().steps.back());
      full.final_set = err.trace().final_set;
      throw NormalizeError(err.code(), err.what(), std::move(full));
    }
    if (!applied) return false;
    if (trace.steps.size() >= budget) {
      trace.final_set = cur;
      throw NormalizeError(Errc::NonTermination,
                           "step budget of " + std::to_string(budget) + " exhausted", trace);
    }
    cur = std::move(applied->result);
    trace.steps.push_back(std::move(applied->step));
    return true;
  };

  while (step(0)) {}
  while (step(1)) {}
  while (true) {
    bool hit = false;
    for (int rule = 2; rule <= 6 && !hit; ++rule) hit = step(rule);
    if (!hit) break;
  }
  if (!partition_u(gadget, cur).u_minus.empty()) {
    trace.final_set = cur;
    throw NormalizeError(Errc::UMinusNonEmpty,
                         "U- is non-empty after rules 2-6 are exhausted", trace);
  }
  while (step(7)) {}

  trace.final_set = cur;
  if (!is_proper(gadget, cur)) {
    throw NormalizeError(Errc::NotProper, "rule fixed point is not proper", trace);
  }
  return Normalized{cur, std::move(trace)};
}

VertexSet extract_dominating_set(const GadgetGraph& gadget, const EdgeSet& proper_s) {
  check_endpoints(gadget, proper_s);
  if (!is_proper(gadget, proper_s)) {
    throw Error(Errc::NotProper, "edge set is not proper: " + to_string(proper_s));
  }
  const Diameter d = diameter_with_augmentation(gadget.graph(), proper_s);
  if (!d || *d > 2) {
    throw Error(Errc::NotAugmenting, "edge set does not bring the gadget to diameter 2");
  }
  std::vector<Vertex> out;
  for (const Edge& e : proper_s) out.push_back(gadget.base(e.other(gadget.x())));
  return VertexSet(std::move(out));
}

}  // namespace diamaug
