#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "diamaug/gadget.hpp"

namespace diamaug {

/// Split of U1 ∪ U2 by how an augmenting set reaches each U vertex from x.
struct UPartition {
  VertexSet u_x;      // {x, u} is in the set
  VertexSet u_minus;  // not in u_x, but some {x, y(u, .)} is in the set
  VertexSet u_plus;   // everything else
};

UPartition partition_u(const GadgetGraph& gadget, const EdgeSet& s);

/// One rewrite of the augmenting set. The set after the step is
/// (before \ removed) ∪ added.
struct SwapStep {
  int rule = 0;
  EdgeSet removed;
  EdgeSet added;
  std::uint32_t diameter_after = 0;
};

struct SwapTrace {
  EdgeSet initial;
  std::vector<SwapStep> steps;
  EdgeSet final_set;
};

/// Replays `steps` from `initial`.
EdgeSet replay(const EdgeSet& initial, const std::vector<SwapStep>& steps);

/// Error raised by the rule engine; carries the trace up to and including
/// the offending step.
class NormalizeError : public Error {
 public:
  NormalizeError(Errc code, const std::string& what, SwapTrace trace)
      : Error(code, what), trace_(std::move(trace)) {}
  const SwapTrace& trace() const noexcept { return trace_; }

 private:
  SwapTrace trace_;
};

struct RuleApplication {
  EdgeSet result;
  SwapStep step;
};

/// Applies the first match of one rewrite rule to s, or returns nullopt.
///
///  0: an edge {a, b} touching neither x nor z. If {x, a} is in s it becomes
///     {x, b} (and symmetrically); if both or neither are, it is dropped.
///  1: {z, w} becomes {x, w}.
///  2: {x, y(a, b)} with a ~ b becomes {x, a}.
///  3: {x, y(a, b)} with a ∈ U_x becomes {x, b}.
///  4: {x, y(a, b)} with a adjacent to some c ∈ U_x becomes {x, b}.
///  5: {x, y(a, b)}, {x, y(b, c)} become {x, y(a, c)}, {x, b}.
///  6: {x, y(a, b)}, {x, y(c, d)} with a ~ c become {x, a}, {x, y(b, d)}.
///  7: {x, u} with u ∈ U2 becomes {x, twin(u)}.
///
/// Edges are scanned in sorted order and pair endpoints in ascending id
/// order, so the match is deterministic. The result is re-checked for
/// diameter <= 2; a failure throws NormalizeError(RuleUnsound).
std::optional<RuleApplication> apply_rule(const GadgetGraph& gadget, const EdgeSet& s, int rule);

/// Lexicographic progress measure: (edges touching neither x nor z,
/// edges touching z, x–Y edges, x–U2 edges). Every rule strictly decreases it.
std::array<std::size_t, 4> progress_measure(const GadgetGraph& gadget, const EdgeSet& s);

/// Rule applications allowed before NonTermination is declared.
std::size_t step_budget(std::size_t initial_size, std::size_t gadget_order);

/// All edges are {x, u} with u ∈ U1.
bool is_proper(const GadgetGraph& gadget, const EdgeSet& s);

struct Normalized {
  EdgeSet proper;
  SwapTrace trace;
};

/// Rewrites a diameter-2 augmenting set into a proper one of no larger size.
/// Order: rule 0 and rule 1 to exhaustion, then rules 2-6 restarting from
/// rule 2 after every hit, then rule 7 to exhaustion. Throws NotAugmenting,
/// ExistingEdge, OutOfRange, RuleUnsound, NonTermination or
/// UMinusNonEmpty (U⁻ non-empty once rules 2-6 are exhausted).
Normalized normalize(const GadgetGraph& gadget, const EdgeSet& s);

/// Base vertices of the U1 endpoints of a proper augmenting set.
VertexSet extract_dominating_set(const GadgetGraph& gadget, const EdgeSet& proper_s);

}  // namespace diamaug
