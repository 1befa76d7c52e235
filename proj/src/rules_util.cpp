#include "rules_internal.hpp"

#include <algorithm>
#include <utility>

namespace inforest::rules {

Accounting make_acct(long long alpha, long long beta, long long gamma,
                     long long eta, long long lambda) {
  Accounting t;
  t.alpha = alpha;
  t.beta = beta;
  t.gamma = gamma;
  t.eta = eta;
  t.lambda = lambda;
  return t;
}

void check_ii(bool proven_fact, const std::string& where) {
  if (!proven_fact) throw InternalInconsistency(where);
}

LiftStage add_stage(const PlanarGraph& ctx, std::vector<VertexId> set) {
  LiftStage s;
  s.kind = LiftKind::AddSet;
  s.context = ctx;
  s.candidates.push_back(std::move(set));
  return s;
}

LiftStage add_stage_multi(const PlanarGraph& ctx,
                          std::vector<std::vector<VertexId>> candidates) {
  check_ii(!candidates.empty(), "add_stage_multi: no candidates");
  LiftStage s;
  s.kind = LiftKind::AddSet;
  s.context = ctx;
  s.candidates = std::move(candidates);
  return s;
}

LiftStage cube_stage(const PlanarGraph& ctx, Match m) {
  LiftStage s;
  s.kind = LiftKind::ExtendCube;
  s.context = ctx;
  s.match = std::move(m);
  return s;
}

LiftStage cube_maxdeg4_stage(const PlanarGraph& ctx, Match m) {
  LiftStage s;
  s.kind = LiftKind::ExtendCubeMaxDeg4;
  s.context = ctx;
  s.match = std::move(m);
  return s;
}

LiftStage theta_stage(const PlanarGraph& ctx, Match m) {
  LiftStage s;
  s.kind = LiftKind::ExtendTheta;
  s.context = ctx;
  s.match = std::move(m);
  return s;
}

LiftStage remap_stage(const PlanarGraph& ctx, VertexId merged,
                      VertexId original) {
  LiftStage s;
  s.kind = LiftKind::Remap;
  s.context = ctx;
  s.merged = merged;
  s.original = original;
  return s;
}

RuleOutcome delete_outcome(const PlanarGraph& g, std::string rule,
                           std::string variant, std::vector<VertexId> removed,
                           Accounting acct, std::vector<LiftStage> lifts) {
  RuleOutcome out;
  out.rule = std::move(rule);
  out.variant = std::move(variant);
  out.image = sorted_copy(removed);
  out.reduced = delete_vertices(g, out.image);
  out.acct = acct;
  out.lifts = std::move(lifts);
  return out;
}

RuleOutcome rewired_outcome(std::string rule, std::string variant,
                            std::vector<VertexId> removed, PlanarGraph reduced,
                            Accounting acct, std::vector<LiftStage> lifts) {
  RuleOutcome out;
  out.rule = std::move(rule);
  out.variant = std::move(variant);
  out.image = sorted_copy(std::move(removed));
  out.reduced = std::move(reduced);
  out.acct = acct;
  out.lifts = std::move(lifts);
  return out;
}

std::vector<VertexId> vertices_of_degree(const PlanarGraph& g, int d) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) == d) out.push_back(v);
  return out;
}

std::vector<VertexId> relabel_map(const std::vector<VertexId>& map,
                                  const int* aut, int size) {
  std::vector<VertexId> m2(static_cast<size_t>(size));
  for (int k = 0; k < size; ++k) m2[static_cast<size_t>(k)] = map[static_cast<size_t>(aut[k])];
  return m2;
}

std::vector<VertexId> sorted_copy(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FaceLengths::FaceLengths(const PlanarGraph& g) {
  for (const auto& walk : faces(g)) {
    const int len = static_cast<int>(walk.size());
    for (size_t i = 0; i < walk.size(); ++i) {
      Edge e = make_edge(walk[i], walk[(i + 1) % walk.size()]);
      auto it = std::lower_bound(
          lens_.begin(), lens_.end(), e,
          [](const auto& entry, const Edge& key) { return entry.first < key; });
      if (it == lens_.end() || it->first != e)
        it = lens_.insert(it, {e, {}});
      it->second.push_back(len);
    }
  }
}

const std::vector<int>& FaceLengths::lengths_of(Edge e) const {
  auto it = std::lower_bound(
      lens_.begin(), lens_.end(), e,
      [](const auto& entry, const Edge& key) { return entry.first < key; });
  check_ii(it != lens_.end() && it->first == e,
           "FaceLengths: edge missing from the face walks");
  return it->second;
}

bool FaceLengths::on_long_face(Edge e) const {
  for (int len : lengths_of(e))
    if (len >= 5) return true;
  return false;
}

bool FaceLengths::only_quad_faces(Edge e) const {
  for (int len : lengths_of(e))
    if (len != 4) return false;
  return true;
}

}  // namespace inforest::rules
