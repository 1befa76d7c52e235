// Internal scaffolding shared by the rule implementation files. Not installed;
// everything here is an implementation detail of the rule table.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inforest/errors.hpp"
#include "inforest/extend.hpp"
#include "inforest/graph.hpp"
#include "inforest/pattern.hpp"
#include "inforest/reduce.hpp"

namespace inforest::rules {

using Step = std::optional<StepOutcome>;

Accounting make_acct(long long alpha, long long beta, long long gamma,
                     long long eta, long long lambda);

// Throws InternalInconsistency when a state the structure analysis proves
// impossible is observed. `where` names the rule and the violated fact.
void check_ii(bool proven_fact, const std::string& where);

LiftStage add_stage(const PlanarGraph& ctx, std::vector<VertexId> set);
LiftStage add_stage_multi(const PlanarGraph& ctx,
                          std::vector<std::vector<VertexId>> candidates);
LiftStage cube_stage(const PlanarGraph& ctx, Match m);
LiftStage cube_maxdeg4_stage(const PlanarGraph& ctx, Match m);
LiftStage theta_stage(const PlanarGraph& ctx, Match m);
LiftStage remap_stage(const PlanarGraph& ctx, VertexId merged, VertexId original);

// Outcome that deletes `removed` from g. Lifts run after the recursion on the
// smaller graph; callers list them innermost context first.
RuleOutcome delete_outcome(const PlanarGraph& g, std::string rule,
                           std::string variant, std::vector<VertexId> removed,
                           Accounting acct, std::vector<LiftStage> lifts);

// Outcome whose reduced graph was built by rewiring (contract / add edge /
// re-attach) rather than plain deletion; `removed` is still the set of host
// vertices that disappeared.
RuleOutcome rewired_outcome(std::string rule, std::string variant,
                            std::vector<VertexId> removed, PlanarGraph reduced,
                            Accounting acct, std::vector<LiftStage> lifts);

std::vector<VertexId> vertices_of_degree(const PlanarGraph& g, int d);

// m2[role] = m.map[aut[role]]: the same image wearing a different role map.
std::vector<VertexId> relabel_map(const std::vector<VertexId>& map,
                                  const int* aut, int size);

std::vector<VertexId> sorted_copy(std::vector<VertexId> v);

// Face lengths around every edge (each edge lies on exactly two face walks,
// or twice on one walk for a bridge).
class FaceLengths {
 public:
  explicit FaceLengths(const PlanarGraph& g);
  // Some incident face has length >= 5.
  bool on_long_face(Edge e) const;
  // Every incident face has length exactly 4.
  bool only_quad_faces(Edge e) const;

 private:
  const std::vector<int>& lengths_of(Edge e) const;
  std::vector<std::pair<Edge, std::vector<int>>> lens_;  // sorted by edge
};

// Rule groups, appended in table order by build_rule_table.
void append_pattern_rules(std::vector<ReductionRule>& table);  // components,
                                                               // low-contact
                                                               // patterns, big
                                                               // vertices,
                                                               // take-all,
                                                               // split
void append_local_rules(std::vector<ReductionRule>& table);    // degree-2/3
                                                               // machinery and
                                                               // square cycles
void append_face_rules(std::vector<ReductionRule>& table);     // quad and penta
                                                               // face rules

}  // namespace inforest::rules
