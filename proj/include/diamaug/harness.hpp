#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamaug/gadget.hpp"
#include "diamaug/normalize.hpp"
#include "diamaug/solvers.hpp"

namespace diamaug {

enum class CampaignMode { Exhaustive, Random };

const char* to_string(CampaignMode m);
CampaignMode parse_mode(std::string_view s);

struct CampaignConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 4;
  CampaignMode mode = CampaignMode::Exhaustive;
  std::size_t samples = 50;  // random mode only
  double edge_prob = 0.4;    // random mode only
  std::uint64_t seed = 1;
  GadgetVariant variant = GadgetVariant::ClosedNeighborhood;
  std::size_t k_max = 3;
  std::size_t rule_trials = 5;  // sampled augmenting sets per instance
  SolverLimits limits;
};

/// Throws InvalidArgument on n_min == 0, n_min > n_max, samples == 0,
/// edge_prob outside [0, 1], or exhaustive n_max > 7.
void validate(const CampaignConfig& config);

/// Both sides of the reduction at one budget.
struct Theorem1Record {
  std::size_t k = 0;
  Answer ds = Answer::No;
  Answer aug = Answer::No;
  bool match = false;
  std::optional<VertexSet> ds_witness;
  std::optional<EdgeSet> aug_witness;
  // Backward direction, filled when aug == Yes.
  std::optional<VertexSet> extracted;
  bool extracted_ok = false;
  std::string normalize_error;
};

Theorem1Record verify_theorem1(const Graph& g1, std::size_t k,
                               GadgetVariant variant = GadgetVariant::ClosedNeighborhood,
                               const SolverLimits& limits = {});

struct RuleCampaignRecord {
  std::size_t trials = 0;
  std::size_t zero_step_traces = 0;
  std::size_t total_steps = 0;
  std::size_t max_steps = 0;
  std::array<std::size_t, 8> rule_hits{};
  std::size_t rule_unsound = 0;
  std::size_t u_minus_failures = 0;
  std::size_t non_termination = 0;
  std::size_t not_proper = 0;
  std::size_t measure_violations = 0;  // progress measure failed to drop
  std::size_t size_increases = 0;
  std::size_t replay_mismatches = 0;
  std::size_t not_dominating = 0;
  // One replayable description per failed trial.
  std::vector<std::string> findings;

  std::size_t violations() const;
};

/// Samples diameter-2 augmenting sets of the gadget by perturbing the image
/// of random dominating sets (z-edges, twin swaps, x–Y edges, pair merges and
/// redundant extra edges, each kept only if the set still has diameter <= 2),
/// normalizes each one and checks every claim about the result. Never throws
/// for rule failures; they are counted and described in `findings`.
RuleCampaignRecord verify_rules_on_random_sets(const GadgetGraph& gadget, std::size_t trials,
                                               std::uint64_t seed);

/// Augmenting set sampler used by verify_rules_on_random_sets.
EdgeSet sample_augmenting_set(const GadgetGraph& gadget, std::uint64_t seed);

struct InstanceRecord {
  std::size_t id = 0;
  Graph graph;
  std::uint64_t seed = 0;
  std::optional<std::size_t> gamma;    // minimum dominating set size
  std::optional<std::size_t> min_aug;  // minimum augmenting size, if <= k_max
  VertexSet min_dominating_set;
  bool match = false;
  bool structure_ok = false;  // |V2|, diameter 3, distance-3 pairs are (x, w)
  bool forward_ok = false;    // forward_map of the minimum dominating set augments
  bool backward_ok = false;   // normalize + extract on the solver's witness
  bool resource_exceeded = false;
  RuleCampaignRecord rules;

  std::size_t violations() const;
};

struct VerificationReport {
  CampaignConfig config;
  std::vector<InstanceRecord> records;

  std::size_t mismatches() const;
  std::size_t structure_failures() const;
  std::size_t forward_failures() const;
  std::size_t backward_failures() const;
  std::size_t resource_exceeded() const;
  std::size_t violations() const;
  std::size_t sampled_sets() const;
  /// Failures that falsify a claim under the configured variant. Under
  /// twin-only, reduction mismatches and rule failures are findings instead.
  std::size_t hard_failures() const;
};

/// Checks one base graph end to end.
InstanceRecord verify_instance(const Graph& g1, std::size_t id, std::uint64_t seed,
                               const CampaignConfig& config);

/// Instances of the campaign: every connected graph on n_min..n_max vertices
/// up to isomorphism (exhaustive), or `samples` seeded random connected
/// graphs with n drawn uniformly from [n_min, n_max].
std::vector<std::pair<Graph, std::uint64_t>> campaign_instances(const CampaignConfig& config);

VerificationReport run_campaign(const CampaignConfig& config);

/// One CSV row per instance:
/// id,n,m,seed,gamma,min_aug,match,violations,status
std::string report_csv(const VerificationReport& report);

/// key = value summary with aggregate counts and findings.
std::string report_summary(const VerificationReport& report);

}  // namespace diamaug
