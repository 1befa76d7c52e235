#include "inforest/reduce.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inforest/errors.hpp"
#include "inforest/extend.hpp"
#include "inforest/lpcert.hpp"
#include "inforest/pattern.hpp"
#include "rules_internal.hpp"

namespace inforest {

// ---------------------------------------------------------------------------
// Lift stages.

int LiftStage::gain() const {
  switch (kind) {
    case LiftKind::AddSet:
      return static_cast<int>(candidates.front().size());
    case LiftKind::ExtendCube:
    case LiftKind::ExtendCubeMaxDeg4:
      return 5;
    case LiftKind::ExtendTheta:
      return 4;
    case LiftKind::Remap:
      return 0;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Rule table.

const std::vector<ReductionRule>& build_rule_table() {
  static const std::vector<ReductionRule> table = [] {
    std::vector<ReductionRule> t;
    rules::append_pattern_rules(t);
    rules::append_local_rules(t);
    rules::append_face_rules(t);
    return t;
  }();
  return table;
}

namespace {

std::string stuck_message(const PlanarGraph& g) {
  std::ostringstream os;
  os << "no reduction rule matches a nonempty graph: n=" << g.n()
     << " m=" << g.m();
  std::map<int, int> hist;
  for (VertexId v : g.vertices()) ++hist[g.degree(v)];
  os << " degrees{";
  bool first = true;
  for (const auto& [d, c] : hist) {
    if (!first) os << ",";
    os << d << ":" << c;
    first = false;
  }
  os << "}";
  try {
    os << " p=" << count_p(g);
  } catch (const InternalInconsistency&) {
    os << " p=overlapping";
  }
  os << " q=" << count_q(g) << " edges:";
  for (const Edge& e : g.edges()) os << " " << e.first << "-" << e.second;
  return os.str();
}

}  // namespace

std::optional<StepOutcome> apply_first_rule(const PlanarGraph& g) {
  if (g.n() == 0) return std::nullopt;
  for (const ReductionRule& rule : build_rule_table()) {
    if (auto out = rule.apply(g)) return out;
  }
  throw StructureViolation(stuck_message(g));
}

// ---------------------------------------------------------------------------
// Lift execution.

std::vector<VertexId> lift_forest(const RuleOutcome& step,
                                  const std::vector<VertexId>& reduced_forest) {
  long long declared = 0;
  for (const LiftStage& s : step.lifts) declared += s.gain();
  rules::check_ii(declared == step.acct.lambda,
                  "lift stages of " + step.rule +
                      " do not add up to the declared forest gain");
  std::vector<VertexId> f = reduced_forest;
  std::sort(f.begin(), f.end());
  for (const LiftStage& s : step.lifts) {
    switch (s.kind) {
      case LiftKind::AddSet: {
        bool placed = false;
        for (const auto& cand : s.candidates) {
          std::vector<VertexId> sorted_cand = cand;
          std::sort(sorted_cand.begin(), sorted_cand.end());
          std::vector<VertexId> f2 = sorted_union(f, sorted_cand);
          if (is_induced_forest(s.context, f2)) {
            f = std::move(f2);
            placed = true;
            break;
          }
        }
        if (!placed)
          throw LiftFailed("no candidate set of " + step.rule +
                           " keeps the lifted forest acyclic");
        break;
      }
      case LiftKind::ExtendCube:
        f = extend_cube_low_contact(s.context, *s.match, f);
        break;
      case LiftKind::ExtendCubeMaxDeg4:
        f = extend_cube_maxdeg4(s.context, *s.match, f);
        break;
      case LiftKind::ExtendTheta:
        f = extend_theta(s.context, *s.match, f);
        break;
      case LiftKind::Remap: {
        auto it = std::lower_bound(f.begin(), f.end(), s.merged);
        if (it != f.end() && *it == s.merged) {
          f.erase(it);
          f.insert(std::lower_bound(f.begin(), f.end(), s.original),
                   s.original);
        }
        break;
      }
    }
    if (!is_induced_forest(s.context, f))
      throw LiftFailed("a lift stage of " + step.rule +
                       " left an invalid forest");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Driver.

int forest_bound(int n) { return (5 * n + 8) / 9; }

namespace {

Accounting split_acct(const SplitOutcome& sp) {
  Accounting t;
  t.beta = sp.variant == "bridge" ? 1 : 0;
  return t;
}

[[noreturn]] void accounting_failure(const std::string& rule,
                                     const std::string& variant,
                                     const std::string& what) {
  throw AccountingMismatch(rule + (variant.empty() ? "" : "/" + variant) +
                           ": " + what);
}

std::vector<VertexId> solve_rec(const PlanarGraph& g, int depth,
                                std::vector<TraceStep>& trace) {
  if (g.n() == 0) return {};
  const int n0 = g.n();
  const int m0 = g.m();
  const int p0 = count_p(g);
  const int q0 = count_q(g);
  std::optional<StepOutcome> step = apply_first_rule(g);
  rules::check_ii(step.has_value(), "no step outcome for a nonempty graph");

  if (std::holds_alternative<SplitOutcome>(*step)) {
    const SplitOutcome& sp = std::get<SplitOutcome>(*step);
    rules::check_ii(sp.parts.size() >= 2, "split produced fewer than two parts");
    int n_sum = 0, m_sum = 0;
    for (const PlanarGraph& part : sp.parts) {
      validate_embedding(part);
      n_sum += part.n();
      m_sum += part.m();
      // Every pattern rule precedes the split, and a cut can lower an
      // occurrence's contact by at most one, so the parts are pattern-free.
      rules::check_ii(count_p(part) == 0 && count_q(part) == 0,
                      "split part retains a cube or theta occurrence");
    }
    const int cut = sp.variant == "bridge" ? 1 : 0;
    if (n_sum != n0) accounting_failure("split", sp.variant, "parts lose vertices");
    if (m_sum != m0 - cut) accounting_failure("split", sp.variant, "parts lose edges");

    TraceStep ts;
    ts.rule = "split";
    ts.variant = sp.variant;
    if (sp.bridge) ts.image = {sp.bridge->first, sp.bridge->second};
    ts.acct = split_acct(sp);
    ts.n_before = n0;
    ts.m_before = m0;
    ts.n_after = n_sum;
    ts.m_after = m_sum;
    ts.depth = depth;
    ts.hash_before = graph_hash(g);
    ts.hash_after = 0;
    trace.push_back(std::move(ts));

    std::vector<VertexId> forest;
    for (const PlanarGraph& part : sp.parts) {
      std::vector<VertexId> f = solve_rec(part, depth + 1, trace);
      forest.insert(forest.end(), f.begin(), f.end());
    }
    std::sort(forest.begin(), forest.end());
    if (!is_induced_forest(g, forest))
      throw LiftFailed("union of split-part forests is not a forest");
    if (static_cast<int>(forest.size()) < forest_bound(n0))
      accounting_failure("split", sp.variant, "forest misses the 5n/9 bound");
    return forest;
  }

  const RuleOutcome& ro = std::get<RuleOutcome>(*step);
  validate_embedding(ro.reduced);
  rules::check_ii(is_triangle_free(ro.reduced),
                  ro.rule + ": reduced graph has a triangle");
  const int n1 = ro.reduced.n();
  const int m1 = ro.reduced.m();
  const int p1 = count_p(ro.reduced);
  const int q1 = count_q(ro.reduced);
  const Accounting& t = ro.acct;
  if (t.alpha != n0 - n1)
    accounting_failure(ro.rule, ro.variant, "alpha differs from the vertex delta");
  if (t.beta > m0 - m1)
    accounting_failure(ro.rule, ro.variant, "beta exceeds the edge delta");
  if (t.gamma > p0 - p1)
    accounting_failure(ro.rule, ro.variant, "gamma exceeds the cube-count delta");
  if (t.eta > q0 - q1)
    accounting_failure(ro.rule, ro.variant, "eta exceeds the theta-count delta");
  // Termination: the vertex count strictly decreases on every rule step, and
  // the combined measure n + p + q never increases.  Contraction steps that
  // expose a fresh cube or theta hold the combined measure level (they trade
  // one vertex for one occurrence); every other rule drops it outright.
  if (n1 >= n0)
    accounting_failure(ro.rule, ro.variant, "vertex count fails to decrease");
  if (n1 + p1 + q1 > n0 + p0 + q0)
    accounting_failure(ro.rule, ro.variant, "size measure increases");
  if (t.expr().eval(lp::coefficient_point()).sign() < 0)
    accounting_failure(ro.rule, ro.variant,
                       "accounting bracket is negative at the coefficient point");
  for (VertexId v : ro.image)
    rules::check_ii(v >= 0 && v < g.slot_count() && g.alive(v),
                    ro.rule + ": image names a vertex missing from the host");

  TraceStep ts;
  ts.rule = ro.rule;
  ts.variant = ro.variant;
  ts.image = ro.image;
  ts.acct = t;
  ts.n_before = n0;
  ts.m_before = m0;
  ts.n_after = n1;
  ts.m_after = m1;
  ts.depth = depth;
  ts.hash_before = graph_hash(g);
  ts.hash_after = graph_hash(ro.reduced);
  trace.push_back(std::move(ts));

  std::vector<VertexId> sub = solve_rec(ro.reduced, depth + 1, trace);
  std::vector<VertexId> forest = lift_forest(ro, sub);
  if (!is_induced_forest(g, forest))
    throw LiftFailed(ro.rule + ": lifted set is not an induced forest");
  if (static_cast<long long>(forest.size()) -
          static_cast<long long>(sub.size()) != t.lambda)
    accounting_failure(ro.rule, ro.variant,
                       "lift gained a different number of vertices than lambda");
  if (static_cast<int>(forest.size()) < forest_bound(n0))
    accounting_failure(ro.rule, ro.variant, "forest misses the 5n/9 bound");
  return forest;
}

}  // namespace

SolveResult solve(const PlanarGraph& g) {
  validate_embedding(g);
  if (!is_triangle_free(g)) throw InvalidInput("host graph contains a triangle");
  SolveResult res;
  res.forest = solve_rec(g, 0, res.trace);
  return res;
}

// ---------------------------------------------------------------------------
// Trace serialization and replay.

void write_trace(const std::vector<TraceStep>& trace, std::ostream& out) {
  for (const TraceStep& s : trace) {
    out << s.rule << ' ' << (s.variant.empty() ? "-" : s.variant) << ' '
        << s.depth << ' ' << s.n_before << ' ' << s.m_before << ' '
        << s.n_after << ' ' << s.m_after << ' ' << s.acct.alpha << ' '
        << s.acct.beta << ' ' << s.acct.gamma << ' ' << s.acct.eta << ' '
        << s.acct.lambda << ' ' << s.image.size();
    for (VertexId v : s.image) out << ' ' << v;
    out << '\n';
  }
}

std::vector<TraceStep> read_trace(std::istream& in) {
  std::vector<TraceStep> trace;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    TraceStep s;
    std::string variant;
    std::size_t k = 0;
    if (!(ls >> s.rule >> variant >> s.depth >> s.n_before >> s.m_before >>
          s.n_after >> s.m_after >> s.acct.alpha >> s.acct.beta >>
          s.acct.gamma >> s.acct.eta >> s.acct.lambda >> k))
      throw InvalidInput("trace line " + std::to_string(lineno) +
                         " is malformed");
    if (variant != "-") s.variant = variant;
    s.image.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!(ls >> s.image[i]))
        throw InvalidInput("trace line " + std::to_string(lineno) +
                           " truncates its image");
    }
    VertexId extra;
    if (ls >> extra)
      throw InvalidInput("trace line " + std::to_string(lineno) +
                         " has trailing fields");
    trace.push_back(std::move(s));
  }
  return trace;
}

namespace {

std::string step_field_mismatch(std::size_t i, const TraceStep& got,
                                const TraceStep& want) {
  std::ostringstream os;
  os << "step " << i << ": ";
  if (got.rule != want.rule)
    os << "rule " << got.rule << " != " << want.rule;
  else if (got.variant != want.variant)
    os << "variant '" << got.variant << "' != '" << want.variant << "'";
  else if (got.depth != want.depth)
    os << "depth " << got.depth << " != " << want.depth;
  else if (got.n_before != want.n_before || got.m_before != want.m_before)
    os << "pre-step size (" << got.n_before << "," << got.m_before << ") != ("
       << want.n_before << "," << want.m_before << ")";
  else if (got.n_after != want.n_after || got.m_after != want.m_after)
    os << "post-step size (" << got.n_after << "," << got.m_after << ") != ("
       << want.n_after << "," << want.m_after << ")";
  else if (got.acct.alpha != want.acct.alpha || got.acct.beta != want.acct.beta ||
           got.acct.gamma != want.acct.gamma || got.acct.eta != want.acct.eta ||
           got.acct.lambda != want.acct.lambda)
    os << "accounting tuple differs";
  else
    os << "image differs";
  return os.str();
}

bool step_equal(const TraceStep& a, const TraceStep& b) {
  return a.rule == b.rule && a.variant == b.variant && a.depth == b.depth &&
         a.n_before == b.n_before && a.m_before == b.m_before &&
         a.n_after == b.n_after && a.m_after == b.m_after &&
         a.acct.alpha == b.acct.alpha && a.acct.beta == b.acct.beta &&
         a.acct.gamma == b.acct.gamma && a.acct.eta == b.acct.eta &&
         a.acct.lambda == b.acct.lambda && a.image == b.image;
}

}  // namespace

ReplayResult replay(const PlanarGraph& g,
                    const std::vector<TraceStep>& expected) {
  SolveResult got = solve(g);
  ReplayResult res;
  if (got.trace.size() != expected.size()) {
    std::ostringstream os;
    os << "step count " << got.trace.size() << " != " << expected.size();
    res.mismatch = os.str();
    return res;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!step_equal(got.trace[i], expected[i])) {
      res.mismatch = step_field_mismatch(i, got.trace[i], expected[i]);
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace inforest
