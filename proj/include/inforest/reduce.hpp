// The reduction engine: an ordered rule table, a driver that applies the
// first matching rule until the graph is gone, and the lift machinery that
// rebuilds a large induced forest on the way back up.
//
// Every rule application reports an accounting tuple (alpha, beta, gamma,
// eta, lambda) that the driver verifies against measured deltas:
//   alpha  = vertices removed            (must be exact),
//   beta   = edges removed               (declared lower bound on the delta),
//   gamma  = change in low-contact cubes (declared lower bound),
//   eta    = change in theta components  (declared lower bound),
//   lambda = forest vertices gained      (must be exact).
// The tuple's linear form  lambda - alpha*a + beta*b + gamma*c + eta*d  must
// be nonnegative at the fixed coefficient point (checked exactly); together
// with phi = a*n - b*m - c*p - d*q this yields |F| >= phi(G) and, through an
// integer-rounding argument over the rule order, |F| >= ceil(5n/9) for every
// triangle-free planar input. The driver asserts the ceiling bound at every
// recursion level.
//
// Rules never repair a failed expectation silently: states the structure
// analysis proves impossible raise InternalInconsistency, measured deltas
// that contradict a declared tuple raise AccountingMismatch, and a forest
// that fails validation mid-lift raises LiftFailed.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inforest/graph.hpp"
#include "inforest/lpcert.hpp"
#include "inforest/pattern.hpp"

namespace inforest {

using Accounting = lp::AccountingTuple;

// ---------------------------------------------------------------------------
// Lift stages. A rule that removes more than it keeps must say how to grow
// the sub-forest back. Stages run in vector order, innermost context first;
// the executor validates the forest after every stage.

enum class LiftKind {
  AddSet,            // add the first candidate set that keeps the forest valid
  ExtendCube,        // cube image, contact <= 3: gains 5 vertices
  ExtendTheta,       // theta image, contact <= 3: gains 4 vertices
  ExtendCubeMaxDeg4, // cube image, host degrees <= 4, contact <= 5: gains 5
  Remap,             // replace a contraction's merged id by an original vertex
};

struct LiftStage {
  LiftKind kind = LiftKind::AddSet;
  PlanarGraph context;  // graph the enlarged forest must be induced-forest in
  std::vector<std::vector<VertexId>> candidates;  // AddSet: tried in order
  std::optional<Match> match;                     // Extend*: the occurrence
  VertexId merged = -1;                           // Remap: id to replace
  VertexId original = -1;                         // Remap: replacement id

  int gain() const;  // forest vertices this stage contributes
};

// ---------------------------------------------------------------------------
// Step outcomes.

struct RuleOutcome {
  std::string rule;             // table rule name
  std::string variant;          // case tag, "" when the rule has one case
  std::vector<VertexId> image;  // vertices removed from the host, sorted
  PlanarGraph reduced;
  Accounting acct;
  std::vector<LiftStage> lifts;
};

struct SplitOutcome {
  std::string variant;             // "component" or "bridge"
  std::vector<PlanarGraph> parts;  // ordered by smallest alive vertex id
  std::optional<Edge> bridge;      // the cut edge for the "bridge" variant
};

using StepOutcome = std::variant<RuleOutcome, SplitOutcome>;

// ---------------------------------------------------------------------------
// Rule table.

struct ReductionRule {
  std::string name;
  // Returns an outcome when the rule matches g, nullopt otherwise. Matchers
  // may assume every earlier rule in the table declined.
  std::function<std::optional<StepOutcome>(const PlanarGraph&)> apply;
};

// The ordered table. Position is semantic: later rules' structure analyses
// assume earlier rules declined (connectivity, degree bounds, absence of the
// patterns and of specific small configurations).
const std::vector<ReductionRule>& build_rule_table();

// First matching rule's outcome. Returns nullopt only for the empty graph;
// a nonempty graph no rule matches throws StructureViolation (that state is
// outside the engine's structure theorems).
std::optional<StepOutcome> apply_first_rule(const PlanarGraph& g);

// ---------------------------------------------------------------------------
// Driver.

struct TraceStep {
  std::string rule;
  std::string variant;
  std::vector<VertexId> image;
  Accounting acct;
  int n_before = 0, m_before = 0;
  int n_after = 0, m_after = 0;  // splits: sums over the parts
  int depth = 0;
  // In-memory only (not serialized): host hashes for drift detection.
  std::uint64_t hash_before = 0, hash_after = 0;
};

struct SolveResult {
  std::vector<VertexId> forest;  // sorted; validated induced forest
  std::vector<TraceStep> trace;  // pre-order: step precedes its recursion
};

// ceil(5n/9), the forest-order guarantee.
int forest_bound(int n);

// Reduce g to nothing, lift a forest back, and return it with the full
// trace. Validates the input (triangle-free, sound embedding), every
// intermediate graph, every accounting tuple, and the per-level bound
// |F| >= ceil(5n/9). Throws InvalidInput for hosts with triangles.
SolveResult solve(const PlanarGraph& g);

// Run one step's lift stages over a forest of step.reduced. Exposed for
// tests; solve calls it internally.
std::vector<VertexId> lift_forest(const RuleOutcome& step,
                                  const std::vector<VertexId>& reduced_forest);

// ---------------------------------------------------------------------------
// Trace serialization and replay. One step per line:
//   rule variant depth n_before m_before n_after m_after
//     alpha beta gamma eta lambda k v1 ... vk         (one logical record)
// where variant "-" stands for empty and k is the image size.

void write_trace(const std::vector<TraceStep>& trace, std::ostream& out);
std::vector<TraceStep> read_trace(std::istream& in);

struct ReplayResult {
  bool ok = false;
  std::string mismatch;  // first difference, human-readable; empty when ok
};

// Re-solves g and compares the serializable step fields against `expected`.
ReplayResult replay(const PlanarGraph& g, const std::vector<TraceStep>& expected);

}  // namespace inforest
