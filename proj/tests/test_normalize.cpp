#include <doctest.h>

#include "diamaug/gadget.hpp"
#include "diamaug/generate.hpp"
#include "diamaug/normalize.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace diamaug;
using testutil::error_code;

namespace {

bool augments(const GadgetGraph& gadget, const EdgeSet& s) {
  const auto d = oracle::diameter(gadget.graph(), s);
  return d && *d <= 2;
}

std::vector<Vertex> as_vector(const VertexSet& s) {
  return {s.begin(), s.end()};
}

// Checks every claim about one normalization run.
void check_normalization(const GadgetGraph& gadget, const EdgeSet& s) {
  const Normalized out = normalize(gadget, s);
  CHECK(out.trace.initial == s);
  CHECK(out.trace.final_set == out.proper);
  CHECK(replay(s, out.trace.steps) == out.proper);
  CHECK(is_proper(gadget, out.proper));
  CHECK(out.proper.size() <= s.size());
  CHECK(augments(gadget, out.proper));

  EdgeSet current = s;
  auto measure = progress_measure(gadget, current);
  for (const SwapStep& step : out.trace.steps) {
    const EdgeSet next = replay(current, {step});
    CHECK(next.size() <= current.size());
    const auto next_measure = progress_measure(gadget, next);
    CHECK(next_measure < measure);
    CHECK(step.diameter_after <= 2);
    CHECK(augments(gadget, next));
    for (const Edge& e : step.added) CHECK_FALSE(gadget.graph().has_edge(e));
    current = next;
    measure = next_measure;
  }

  const VertexSet d = extract_dominating_set(gadget, out.proper);
  CHECK(d.size() <= s.size());
  CHECK(oracle::dominates(gadget.base_graph(), as_vector(d)));
}

}  // namespace

TEST_CASE("partition_u") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const EdgeSet s{Edge(x, gadget.pair_index(gadget.u1(0), gadget.u2(2))), Edge(x, gadget.u1(1))};
  const UPartition p = partition_u(gadget, s);
  CHECK(p.u_x == VertexSet{1});
  CHECK(p.u_minus == VertexSet{0, 5});
  CHECK(p.u_plus == VertexSet{2, 3, 4});

  const UPartition empty = partition_u(gadget, {});
  CHECK(empty.u_x.size() == 0);
  CHECK(empty.u_minus.size() == 0);
  CHECK(empty.u_plus.size() == 6);
}

TEST_CASE("rule 1 moves a z edge to x") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const Vertex z = gadget.z();
  // {z, u1(1)} alone does not augment: x - z - u1(1) - u1(0) has length 3.
  CHECK_FALSE(augments(gadget, {Edge(z, 1)}));

  const EdgeSet s{Edge(z, 1), Edge(x, 1)};
  REQUIRE(augments(gadget, s));
  const auto app = apply_rule(gadget, s, 1);
  REQUIRE(app);
  CHECK(app->result == EdgeSet{Edge(x, 1)});
  CHECK(app->step.rule == 1);
  CHECK(app->step.removed == EdgeSet{Edge(z, 1)});
  CHECK(app->step.diameter_after == 2);

  const Normalized out = normalize(gadget, s);
  CHECK(out.proper == EdgeSet{Edge(x, 1)});
  CHECK(out.trace.steps.size() == 1);
  CHECK(extract_dominating_set(gadget, out.proper) == VertexSet{1});
}

TEST_CASE("rule 5 merges two x-Y edges sharing a U vertex") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const Vertex y01 = gadget.pair_index(gadget.u1(0), gadget.u1(1));
  const Vertex y12 = gadget.pair_index(gadget.u1(1), gadget.u1(2));
  const Vertex y02 = gadget.pair_index(gadget.u1(0), gadget.u1(2));
  const EdgeSet s{Edge(x, y01), Edge(x, y12), Edge(x, gadget.u2(1))};
  REQUIRE(augments(gadget, s));
  const auto app = apply_rule(gadget, s, 5);
  REQUIRE(app);
  CHECK(app->result == EdgeSet{Edge(x, y02), Edge(x, gadget.u1(1)), Edge(x, gadget.u2(1))});
  CHECK(augments(gadget, app->result));
  check_normalization(gadget, s);
}

TEST_CASE("rule 6 splits two x-Y edges with adjacent endpoints") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  // Pairs (u1(0), u2(2)) and (u1(2), u2(0)); u1(0) ~ u2(0).
  const EdgeSet s{Edge(x, gadget.pair_index(0, 5)), Edge(x, gadget.pair_index(2, 3)),
                  Edge(x, gadget.pair_index(1, 4))};
  REQUIRE(augments(gadget, s));
  const auto app = apply_rule(gadget, s, 6);
  REQUIRE(app);
  CHECK(app->step.rule == 6);
  CHECK(app->result.size() == s.size());
  CHECK(partition_u(gadget, app->result).u_x.size() == 1);
  CHECK(augments(gadget, app->result));
  CHECK(progress_measure(gadget, app->result) < progress_measure(gadget, s));
  check_normalization(gadget, s);
}

TEST_CASE("rule 7 swaps a U2 endpoint for its twin") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const EdgeSet s{Edge(x, gadget.u2(1))};
  REQUIRE(augments(gadget, s));
  const auto app = apply_rule(gadget, s, 7);
  REQUIRE(app);
  CHECK(app->result == EdgeSet{Edge(x, gadget.u1(1))});
  for (int rule = 0; rule < 7; ++rule) CHECK_FALSE(apply_rule(gadget, s, rule));
  CHECK(normalize(gadget, s).proper == EdgeSet{Edge(x, gadget.u1(1))});
}

TEST_CASE("rule 0 redirects an edge that carries a path from x") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  // u1(2) is reached from x only through x - u1(0) - u1(2); dropping that
  // edge would break the diameter bound.
  const EdgeSet s{Edge(x, 0), Edge(0, 2), Edge(0, gadget.u2(2))};
  REQUIRE(augments(gadget, s));
  CHECK_FALSE(augments(gadget, {Edge(x, 0), Edge(0, gadget.u2(2))}));

  const auto app = apply_rule(gadget, s, 0);
  REQUIRE(app);
  CHECK(app->step.removed == EdgeSet{Edge(0, 2)});
  CHECK(app->step.added == EdgeSet{Edge(x, 2)});
  CHECK(augments(gadget, app->result));
  check_normalization(gadget, s);
}

TEST_CASE("proper input needs no steps") {
  const GadgetGraph gadget = build_gadget(cycle_graph(5));
  const EdgeSet s = forward_map(gadget, {0, 3});
  const Normalized out = normalize(gadget, s);
  CHECK(out.trace.steps.empty());
  CHECK(out.proper == s);
  CHECK(extract_dominating_set(gadget, out.proper) == VertexSet{0, 3});
}

TEST_CASE("normalize rejects bad input") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  CHECK(error_code([&] { normalize(gadget, {}); }) == Errc::NotAugmenting);
  CHECK(error_code([&] { normalize(gadget, {Edge(gadget.z(), 1)}); }) == Errc::NotAugmenting);
  CHECK(error_code([&] {
          normalize(gadget, {Edge(gadget.x(), 1), Edge(gadget.z(), gadget.x())});
        }) == Errc::ExistingEdge);
  CHECK(error_code([&] { normalize(gadget, {Edge(1, 40)}); }) == Errc::OutOfRange);
}

TEST_CASE("extract_dominating_set") {
  const GadgetGraph p3 = build_gadget(path_graph(3));
  CHECK(extract_dominating_set(p3, {Edge(p3.x(), 1)}) == VertexSet{1});
  CHECK(error_code([&] { extract_dominating_set(p3, {Edge(p3.x(), p3.u2(1))}); }) ==
        Errc::NotProper);
  CHECK(error_code([&] { extract_dominating_set(p3, {Edge(p3.x(), 0)}); }) ==
        Errc::NotAugmenting);
  const GadgetGraph k1 = build_gadget(Graph(1));
  CHECK(error_code([&] { extract_dominating_set(k1, {}); }) == Errc::NotAugmenting);
}

TEST_CASE("progress_measure and is_proper") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const Vertex z = gadget.z();
  const Vertex y = gadget.pair_index(0, 1);
  const EdgeSet s{Edge(0, 2), Edge(z, 1), Edge(x, y), Edge(x, 4), Edge(x, 1)};
  CHECK(progress_measure(gadget, s) == std::array<std::size_t, 4>{1, 1, 1, 1});
  CHECK(is_proper(gadget, {Edge(x, 0), Edge(x, 2)}));
  CHECK_FALSE(is_proper(gadget, {Edge(x, 4)}));
  CHECK(is_proper(gadget, {}));
}

TEST_CASE("every augmenting set of size <= 2 normalizes correctly (n1 <= 3)") {
  std::size_t normalized = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      const GadgetGraph gadget = build_gadget(g);
      const std::size_t k = n <= 2 ? 3 : 2;
      oracle::for_each_non_edge_subset(gadget.graph(), k, [&](const std::vector<Edge>& edges) {
        const EdgeSet s(edges);
        if (!augments(gadget, s)) return false;
        check_normalization(gadget, s);
        ++normalized;
        return false;
      });
    }
  }
  MESSAGE("normalized sets: " << normalized);
  CHECK(normalized > 1000);
}

TEST_CASE("normalize is deterministic") {
  const GadgetGraph gadget = build_gadget(path_graph(3));
  const Vertex x = gadget.x();
  const EdgeSet s{Edge(x, 0), Edge(0, 2), Edge(gadget.z(), 1), Edge(x, gadget.u2(1))};
  REQUIRE(augments(gadget, s));
  const Normalized a = normalize(gadget, s);
  const Normalized b = normalize(gadget, s);
  CHECK(a.proper == b.proper);
  REQUIRE(a.trace.steps.size() == b.trace.steps.size());
  for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
    CHECK(a.trace.steps[i].rule == b.trace.steps[i].rule);
    CHECK(a.trace.steps[i].removed == b.trace.steps[i].removed);
    CHECK(a.trace.steps[i].added == b.trace.steps[i].added);
  }
}
