#include "diamaug/harness.hpp"

#include <sstream>

#include "diamaug/distance.hpp"
#include "diamaug/generate.hpp"
#include "diamaug/random.hpp"

namespace diamaug {

const char* to_string(CampaignMode m) {
  return m == CampaignMode::Exhaustive ? "exhaustive" : "random";
}

CampaignMode parse_mode(std::string_view s) {
  if (s == "exhaustive") return CampaignMode::Exhaustive;
  if (s == "random") return CampaignMode::Random;
  throw Error(Errc::InvalidArgument, "unknown campaign mode '" + std::string(s) + "'");
}

void validate(const CampaignConfig& c) {
  if (c.n_min == 0) throw Error(Errc::InvalidArgument, "n_min must be >= 1");
  if (c.n_min > c.n_max) throw Error(Errc::InvalidArgument, "n_min must not exceed n_max");
  if (c.samples == 0) throw Error(Errc::InvalidArgument, "samples must be >= 1");
  if (!(c.edge_prob >= 0.0 && c.edge_prob <= 1.0)) {
    throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  if (c.mode == CampaignMode::Exhaustive && c.n_max > 7) {
    throw Error(Errc::InvalidArgument, "exhaustive mode supports n_max <= 7");
  }
}

namespace {

bool augments(const GadgetGraph& gadget, const EdgeSet& s) {
  const Diameter d = diameter_with_augmentation(gadget.graph(), s);
  return d && *d <= 2;
}

std::string describe_trace(const SwapTrace& trace) {
  std::ostringstream out;
  out << "initial " << to_string(trace.initial);
  for (const auto& step : trace.steps) {
    out << " | rule " << step.rule << " removed " << to_string(step.removed) << " added "
        << to_string(step.added) << " diameter_after ";
    if (step.diameter_after == kUnreachable) out << "inf";
    else out << step.diameter_after;
  }
  return out.str();
}

std::vector<Vertex> u_vertices(const GadgetGraph& gadget) {
  std::vector<Vertex> out(2 * gadget.base_order());
  for (Vertex u = 0; u < out.size(); ++u) out[u] = u;
  return out;
}

}  // namespace

Theorem1Record verify_theorem1(const Graph& g1, std::size_t k, GadgetVariant variant,
                               const SolverLimits& limits) {
  const GadgetGraph gadget = build_gadget(g1, variant);
  Theorem1Record rec;
  rec.k = k;
  const auto ds = solve_dominating_set(g1, k, limits);
  const auto aug = solve_diameter_augmentation(gadget.graph(), k, 2, limits);
  rec.ds = ds.answer;
  rec.aug = aug.answer;
  rec.ds_witness = ds.witness;
  rec.aug_witness = aug.witness;
  rec.match = rec.ds == rec.aug && rec.ds != Answer::ResourceExceeded;

  if (aug.yes()) {
    try {
      const Normalized norm = normalize(gadget, *aug.witness);
      rec.extracted = extract_dominating_set(gadget, norm.proper);
      rec.extracted_ok = is_dominating(g1, *rec.extracted) && rec.extracted->size() <= k;
    } catch (const Error& e) {
      rec.normalize_error = std::string(to_string(e.code())) + ": " + e.what();
    }
  }
  return rec;
}

std::size_t RuleCampaignRecord::violations() const {
  return rule_unsound + u_minus_failures + non_termination + not_proper +
         measure_violations + size_increases + replay_mismatches + not_dominating;
}

EdgeSet sample_augmenting_set(const GadgetGraph& gadget, std::uint64_t seed) {
  Rng rng(seed);
  const Graph& g1 = gadget.base_graph();
  const Graph& g2 = gadget.graph();
  const std::size_t n1 = g1.order();
  const Vertex x = gadget.x();
  const Vertex z = gadget.z();
  const auto us = u_vertices(gadget);

  auto add_extras = [&](EdgeSet s) {
    // Redundant extras: supersets of an augmenting set still augment.
    if (rng.bernoulli(0.3)) {
      const auto extra = 1 + rng.below(2);
      for (std::uint64_t i = 0; i < extra; ++i) {
        const Vertex a = us[rng.below(us.size())];
        const Vertex b = us[rng.below(us.size())];
        if (a != b) s.insert(Edge(x, gadget.pair_index(a, b)));
      }
    }
    if (rng.bernoulli(0.2)) {
      const Vertex a = us[rng.below(us.size())];
      const auto b = static_cast<Vertex>(rng.below(z));  // any U or Y vertex
      if (a != b && !g2.adjacent(a, b)) s.insert(Edge(a, b));
    }
    if (rng.bernoulli(0.2)) s.insert(Edge(z, us[rng.below(us.size())]));
    return s;
  };

  // Sometimes: only x–Y edges whose pairs cover U. Each U vertex is then two
  // steps from x through its y, so the set augments. Pairs are walked as
  // chains and prefer non-adjacent endpoints, which is what the pair-merging
  // rules need to see.
  if (rng.bernoulli(0.25)) {
    std::vector<bool> covered(us.size(), false);
    std::size_t left = us.size();
    auto pick_uncovered = [&](auto&& ok) -> std::optional<Vertex> {
      std::vector<Vertex> cands;
      for (Vertex u : us) {
        if (!covered[u] && ok(u)) cands.push_back(u);
      }
      if (cands.empty()) return std::nullopt;
      return cands[rng.below(cands.size())];
    };
    EdgeSet cover;
    Vertex a = us[rng.below(us.size())];
    covered[a] = true;
    --left;
    while (left > 0) {
      auto b = pick_uncovered([&](Vertex u) { return !g2.adjacent(a, u); });
      if (!b) b = pick_uncovered([](Vertex) { return true; });
      cover.insert(Edge(x, gadget.pair_index(a, *b)));
      covered[*b] = true;
      --left;
      if (left > 0 && !rng.bernoulli(0.5)) {
        a = *pick_uncovered([](Vertex) { return true; });
        covered[a] = true;
        --left;
        if (left == 0) {
          Vertex c = us[rng.below(us.size())];
          if (c == a) c = us[(a + 1) % us.size()];
          cover.insert(Edge(x, gadget.pair_index(a, c)));
        }
      } else {
        a = *b;
      }
    }
    return add_extras(std::move(cover));
  }

  // A random dominating set: greedy over a random order, plus extras.
  std::vector<Vertex> order(n1);
  for (Vertex v = 0; v < n1; ++v) order[v] = v;
  for (std::size_t i = n1; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  VertexSet dom;
  for (Vertex v : order) {
    if (is_dominating(g1, dom)) break;
    dom.insert(v);
  }
  for (Vertex v = 0; v < n1; ++v) {
    if (rng.bernoulli(0.2)) dom.insert(v);
  }

  EdgeSet s = forward_map(gadget, dom);
  if (!augments(gadget, s)) {
    // The twin-only gadget needs both copies of each dominator.
    for (Vertex d : dom) s.insert(Edge(x, gadget.u2(d)));
  }
  if (!augments(gadget, s)) return s;

  auto try_replace = [&](const std::vector<Edge>& removed, const std::vector<Edge>& added) {
    EdgeSet next = s;
    for (const Edge& e : removed) next.erase(e);
    for (const Edge& e : added) next.insert(e);
    if (augments(gadget, next)) s = std::move(next);
  };

  const std::vector<Edge> base_edges(s.begin(), s.end());
  for (const Edge& e : base_edges) {
    const Vertex u = e.other(x);
    switch (rng.below(5)) {
      case 0:
        break;
      case 1:
        try_replace({e}, {Edge(z, u)});
        break;
      case 2:
        try_replace({e}, {Edge(x, gadget.twin(u))});
        break;
      case 3: {
        Vertex w = us[rng.below(us.size())];
        if (w != u) try_replace({e}, {Edge(x, gadget.pair_index(u, w))});
        break;
      }
      default:
        try_replace({e}, {Edge(z, gadget.twin(u))});
        break;
    }
  }

  // Merge two direct x–U edges into one x–Y edge.
  if (rng.bernoulli(0.5)) {
    std::vector<Vertex> direct;
    for (const Edge& e : s) {
      if (e.touches(x) && gadget.is_u(e.other(x))) direct.push_back(e.other(x));
    }
    if (direct.size() >= 2) {
      const Vertex a = direct[rng.below(direct.size())];
      const Vertex b = direct[rng.below(direct.size())];
      if (a != b) try_replace({Edge(x, a), Edge(x, b)}, {Edge(x, gadget.pair_index(a, b))});
    }
  }

  return add_extras(std::move(s));
}

RuleCampaignRecord verify_rules_on_random_sets(const GadgetGraph& gadget, std::size_t trials,
                                               std::uint64_t seed) {
  RuleCampaignRecord rec;
  const Graph& g1 = gadget.base_graph();
  for (std::size_t t = 0; t < trials; ++t) {
    const EdgeSet s = sample_augmenting_set(gadget, derive_seed(seed, t));
    if (!augments(gadget, s)) continue;
    ++rec.trials;
    const std::string where = "trial " + std::to_string(t) + ": ";
    try {
      const Normalized norm = normalize(gadget, s);
      const auto& steps = norm.trace.steps;
      rec.total_steps += steps.size();
      rec.max_steps = std::max(rec.max_steps, steps.size());
      if (steps.empty()) ++rec.zero_step_traces;
      for (const auto& step : steps) ++rec.rule_hits[step.rule];

      EdgeSet cur = s;
      auto measure = progress_measure(gadget, cur);
      for (const auto& step : steps) {
        cur = replay(cur, {step});
        const auto next = progress_measure(gadget, cur);
        if (!(next < measure)) {
          ++rec.measure_violations;
          rec.findings.push_back(where + "progress measure did not drop at rule " +
                                 std::to_string(step.rule) + ": " + describe_trace(norm.trace));
          break;
        }
        measure = next;
      }
      if (replay(s, steps) != norm.proper) {
        ++rec.replay_mismatches;
        rec.findings.push_back(where + "replay mismatch: " + describe_trace(norm.trace));
      }
      if (norm.proper.size() > s.size()) {
        ++rec.size_increases;
        rec.findings.push_back(where + "size increased: " + describe_trace(norm.trace));
      }
      if (!is_proper(gadget, norm.proper) || !partition_u(gadget, norm.proper).u_minus.empty()) {
        ++rec.not_proper;
        rec.findings.push_back(where + "fixed point not proper: " + describe_trace(norm.trace));
        continue;
      }
      const VertexSet d = extract_dominating_set(gadget, norm.proper);
      if (!is_dominating(g1, d) || d.size() > s.size()) {
        ++rec.not_dominating;
        rec.findings.push_back(where + "extracted set " + to_string(d) +
                               " does not dominate: " + describe_trace(norm.trace));
      }
    } catch (const NormalizeError& e) {
      switch (e.code()) {
        case Errc::RuleUnsound: ++rec.rule_unsound; break;
        case Errc::UMinusNonEmpty: ++rec.u_minus_failures; break;
        case Errc::NonTermination: ++rec.non_termination; break;
        default: ++rec.not_proper; break;
      }
      rec.findings.push_back(where + to_string(e.code()) + " (" + e.what() +
                             "): " + describe_trace(e.trace()));
    } catch (const Error& e) {
      ++rec.not_dominating;
      rec.findings.push_back(where + to_string(e.code()) + ": " + e.what() + ": initial " +
                             to_string(s));
    }
  }
  return rec;
}

std::size_t InstanceRecord::violations() const {
  return rules.violations() + (gamma && min_aug && !backward_ok ? 1 : 0);
}

InstanceRecord verify_instance(const Graph& g1, std::size_t id, std::uint64_t seed,
                               const CampaignConfig& config) {
  InstanceRecord rec;
  rec.id = id;
  rec.graph = g1;
  rec.seed = seed;
  const GadgetGraph gadget = build_gadget(g1, config.variant);
  const Graph& g2 = gadget.graph();

  {
    std::vector<UncoveredPair> expected;
    for (Vertex w = 0; w < 2 * g1.order(); ++w) expected.push_back({w, gadget.x()});
    rec.structure_ok = g2.order() == gadget_order(g1.order()) && diameter(g2) == Diameter{3} &&
                       uncovered_pairs(g2, {}, 2) == expected;
  }

  for (std::size_t k = 0; k <= g1.order(); ++k) {
    const auto ds = solve_dominating_set(g1, k, config.limits);
    if (ds.answer == Answer::ResourceExceeded) {
      rec.resource_exceeded = true;
      break;
    }
    if (ds.yes()) {
      rec.gamma = k;
      rec.min_dominating_set = *ds.witness;
      break;
    }
  }

  std::optional<EdgeSet> aug_witness;
  for (std::size_t k = 0; k <= config.k_max && !rec.resource_exceeded; ++k) {
    const auto aug = solve_diameter_augmentation(g2, k, 2, config.limits);
    if (aug.answer == Answer::ResourceExceeded) {
      rec.resource_exceeded = true;
      break;
    }
    if (aug.yes()) {
      rec.min_aug = k;
      aug_witness = aug.witness;
      break;
    }
  }

  if (!rec.resource_exceeded && rec.gamma) {
    const bool gamma_in_range = *rec.gamma <= config.k_max;
    rec.match = gamma_in_range ? rec.min_aug == rec.gamma : !rec.min_aug.has_value();

    const EdgeSet image = forward_map(gadget, rec.min_dominating_set);
    const Diameter d = diameter_with_augmentation(g2, image);
    rec.forward_ok = image.size() == rec.min_dominating_set.size() && d && *d <= 2;
  }

  if (aug_witness) {
    try {
      const Normalized norm = normalize(gadget, *aug_witness);
      const VertexSet d = extract_dominating_set(gadget, norm.proper);
      rec.backward_ok = is_dominating(g1, d) && d.size() <= aug_witness->size();
    } catch (const NormalizeError& e) {
      rec.rules.findings.push_back("solver witness: " + std::string(to_string(e.code())) + " (" +
                                   e.what() + "): " + describe_trace(e.trace()));
    } catch (const Error& e) {
      rec.rules.findings.push_back("solver witness: " + std::string(to_string(e.code())) + ": " +
                                   e.what());
    }
  }

  rec.rules = [&] {
    auto findings = std::move(rec.rules.findings);
    auto rules = verify_rules_on_random_sets(gadget, config.rule_trials, derive_seed(seed, 0x5eed));
    findings.insert(findings.end(), rules.findings.begin(), rules.findings.end());
    rules.findings = std::move(findings);
    return rules;
  }();
  return rec;
}

std::vector<std::pair<Graph, std::uint64_t>> campaign_instances(const CampaignConfig& config) {
  validate(config);
  std::vector<std::pair<Graph, std::uint64_t>> out;
  if (config.mode == CampaignMode::Exhaustive) {
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
      for (Graph& g : connected_graphs_up_to_isomorphism(n)) {
        out.emplace_back(std::move(g), derive_seed(config.seed, out.size()));
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < config.samples; ++i) {
    const std::uint64_t seed = derive_seed(config.seed, i);
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(config.n_min, config.n_max));
    out.emplace_back(random_connected_graph(n, config.edge_prob, seed), seed);
  }
  return out;
}

VerificationReport run_campaign(const CampaignConfig& config) {
  VerificationReport report;
  report.config = config;
  const auto instances = campaign_instances(config);
  for (std::size_t id = 0; id < instances.size(); ++id) {
    report.records.push_back(
        verify_instance(instances[id].first, id, instances[id].second, config));
  }
  return report;
}

namespace {

template <class Pred>
std::size_t count_if(const VerificationReport& r, Pred pred) {
  return static_cast<std::size_t>(std::count_if(r.records.begin(), r.records.end(), pred));
}

}  // namespace

std::size_t VerificationReport::mismatches() const {
  return count_if(*this, [](const InstanceRecord& r) { return !r.resource_exceeded && !r.match; });
}
std::size_t VerificationReport::structure_failures() const {
  return count_if(*this, [](const InstanceRecord& r) { return !r.structure_ok; });
}
std::size_t VerificationReport::forward_failures() const {
  return count_if(*this, [](const InstanceRecord& r) { return !r.resource_exceeded && !r.forward_ok; });
}
std::size_t VerificationReport::backward_failures() const {
  return count_if(*this, [](const InstanceRecord& r) { return r.min_aug && !r.backward_ok; });
}
std::size_t VerificationReport::resource_exceeded() const {
  return count_if(*this, [](const InstanceRecord& r) { return r.resource_exceeded; });
}
std::size_t VerificationReport::violations() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.violations();
  return total;
}
std::size_t VerificationReport::sampled_sets() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.rules.trials;
  return total;
}

std::size_t VerificationReport::hard_failures() const {
  std::size_t hard = structure_failures() + resource_exceeded();
  if (config.variant == GadgetVariant::ClosedNeighborhood) {
    hard += mismatches() + forward_failures() + backward_failures() + violations();
  }
  return hard;
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "id,n,m,seed,gamma,min_aug,match,violations,status\n";
  for (const auto& r : report.records) {
    out << r.id << ',' << r.graph.order() << ',' << r.graph.size() << ',' << r.seed << ',';
    if (r.gamma) out << *r.gamma;
    out << ',';
    if (r.min_aug) out << *r.min_aug;
    else out << ">" << report.config.k_max;
    out << ',' << (r.match ? 1 : 0) << ',' << r.violations() << ','
        << (r.resource_exceeded ? "resource-exceeded" : "ok") << '\n';
  }
  return out.str();
}

std::string report_summary(const VerificationReport& report) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "variant = " << to_string(c.variant) << '\n';
  out << "mode = " << to_string(c.mode) << '\n';
  out << "n_range = " << c.n_min << ".." << c.n_max << '\n';
  if (c.mode == CampaignMode::Random) {
    out << "samples = " << c.samples << '\n';
    out << "edge_prob = " << c.edge_prob << '\n';
  }
  out << "seed = " << c.seed << '\n';
  out << "k_max = " << c.k_max << '\n';
  out << "instances = " << report.records.size() << '\n';
  out << "theorem1_matches = " << report.records.size() - report.mismatches() - report.resource_exceeded()
      << '\n';
  out << "theorem1_mismatches = " << report.mismatches() << '\n';
  out << "structure_failures = " << report.structure_failures() << '\n';
  out << "forward_failures = " << report.forward_failures() << '\n';
  out << "backward_failures = " << report.backward_failures() << '\n';
  out << "resource_exceeded = " << report.resource_exceeded() << '\n';
  out << "sampled_sets = " << report.sampled_sets() << '\n';

  std::array<std::size_t, 8> hits{};
  std::size_t unsound = 0;
  std::size_t prop1 = 0;
  for (const auto& r : report.records) {
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += r.rules.rule_hits[i];
    unsound += r.rules.rule_unsound;
    prop1 += r.rules.u_minus_failures;
  }
  out << "rule_hits =";
  for (std::size_t h : hits) out << ' ' << h;
  out << '\n';
  out << "rule_unsound = " << unsound << '\n';
  out << "u_minus_failures = " << prop1 << '\n';
  out << "violations = " << report.violations() << '\n';
  out << "hard_failures = " << report.hard_failures() << '\n';
  for (const auto& r : report.records) {
    if (!r.match && !r.resource_exceeded) {
      out << "finding: instance " << r.id << " gamma ";
      if (r.gamma) out << *r.gamma;
      out << " min_aug ";
      if (r.min_aug) out << *r.min_aug;
      else out << ">" << c.k_max;
      out << " edges " << to_string(r.graph.edges()) << '\n';
    }
    for (const auto& f : r.rules.findings) out << "finding: instance " << r.id << ' ' << f << '\n';
  }
  return out.str();
}

}  // namespace diamaug
