// Rules driven by whole-pattern occurrences (cube / theta images at each
// contact level), the high-degree vertex rule, and the two bookkeeping rules
// (take-all for tiny connected graphs, split for disconnected or bridged
// ones). Table positions 0..13; later files assume these declined.
#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rules_internal.hpp"

namespace inforest::rules {
namespace {

// --- cube / theta component rules -----------------------------------------

Step rule_cube_component(const PlanarGraph& g) {
  auto ms = find_cubes(g, 0);
  if (ms.empty()) return std::nullopt;
  const Match& h = ms.front();
  return delete_outcome(g, "cube-component", "", h.image,
                        make_acct(8, 12, 1, 0, 5), {cube_stage(g, h)});
}

Step rule_theta_component(const PlanarGraph& g) {
  auto ms = find_thetas(g, 0);
  if (ms.empty()) return std::nullopt;
  const Match& k = ms.front();
  return delete_outcome(g, "theta-component", "", k.image,
                        make_acct(6, 8, 0, 1, 4), {theta_stage(g, k)});
}

// --- cube with one outgoing edge -------------------------------------------

Step rule_cube_contact1(const PlanarGraph& g) {
  auto ms = find_cubes(g, 1);
  if (ms.empty()) return std::nullopt;
  for (const Match& m : ms)
    check_ii(m.contact == 1, "cube-contact1: component cube survived rule 0");
  const Match& h = ms.front();
  const int p0 = count_p(g);
  const int q0 = count_q(g);
  PlanarGraph reduced = delete_vertices(g, h.image);
  const int dp = p0 - count_p(reduced);
  const int dq = q0 - count_q(reduced);
  check_ii(dp == 0 || dp == 1,
           "cube-contact1: removing one cube changed the cube count by " +
               std::to_string(dp));
  std::string variant;
  Accounting acct;
  if (dp == 0) {
    // A replacement cube appeared through the single attachment vertex, so
    // no theta component can have appeared in the same spot.
    check_ii(dq == 0, "cube-contact1: new cube and new theta at once");
    variant = "plain";
    acct = make_acct(8, 13, 0, 0, 5);
  } else {
    check_ii(dq == 0 || dq == -1, "cube-contact1: theta count fell");
    variant = "swap";
    acct = make_acct(8, 13, 1, -1, 5);
  }
  RuleOutcome out;
  out.rule = "cube-contact1";
  out.variant = variant;
  out.image = h.image;
  out.reduced = std::move(reduced);
  out.acct = acct;
  out.lifts = {cube_stage(g, h)};
  return StepOutcome{std::move(out)};
}

// --- theta with one outgoing edge, absorbing the cube chain it may hide ----

Step rule_theta_chain(const PlanarGraph& g) {
  auto ks = find_thetas(g, 1);
  if (ks.empty()) return std::nullopt;
  for (const Match& m : ks)
    check_ii(m.contact == 1, "theta-chain: theta component survived rule 1");
  const Match& k = ks.front();
  const int q0 = count_q(g);

  PlanarGraph cur = delete_vertices(g, k.image);
  std::vector<std::pair<PlanarGraph, Match>> chain;  // (context, cube in it)
  std::vector<VertexId> image = k.image;
  while (true) {
    auto cubes = find_cubes(cur, 1);
    if (cubes.empty()) break;
    check_ii(cubes.size() == 1,
             "theta-chain: two low-contact cubes exposed at once");
    check_ii(cubes.front().contact == 1,
             "theta-chain: exposed cube has no attachment");
    image = sorted_union(image, cubes.front().image);
    PlanarGraph next = delete_vertices(cur, cubes.front().image);
    chain.emplace_back(std::move(cur), cubes.front());
    cur = std::move(next);
  }
  const long long t = static_cast<long long>(chain.size());
  check_ii(count_q(cur) <= q0 + 1,
           "theta-chain: more than one theta appeared at the chain end");

  std::vector<LiftStage> lifts;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    lifts.push_back(cube_stage(it->first, it->second));
  lifts.push_back(theta_stage(g, k));

  RuleOutcome out;
  out.rule = "theta-chain";
  out.variant = "t=" + std::to_string(t);
  out.image = std::move(image);
  out.reduced = std::move(cur);
  out.acct = make_acct(8 * t + 6, 13 * t + 9, 0, -1, 5 * t + 4);
  out.lifts = std::move(lifts);
  return StepOutcome{std::move(out)};
}

// --- cube with two outgoing edges -------------------------------------------

// Where the far ends of a contact-2 cube's outgoing edges land: the index of
// the other contact-2 cube containing each one. Used by the cycle variant.
std::array<int, 2> cube_cycle_neighbors(const PlanarGraph& g,
                                        const std::vector<Match>& ms, int i) {
  std::array<int, 2> out{-1, -1};
  int found = 0;
  for (VertexId v : ms[static_cast<size_t>(i)].image) {
    for (VertexId nb : g.neighbors_sorted(v)) {
      if (sorted_contains(ms[static_cast<size_t>(i)].image, nb)) continue;
      int j = -1;
      for (size_t other = 0; other < ms.size(); ++other) {
        if (static_cast<int>(other) == i) continue;
        if (sorted_contains(ms[other].image, nb)) {
          j = static_cast<int>(other);
          break;
        }
      }
      check_ii(j >= 0,
               "cube-contact2 cycle: outgoing edge escapes the cube family");
      check_ii(found < 2, "cube-contact2 cycle: more than two outgoing edges");
      out[static_cast<size_t>(found++)] = j;
    }
  }
  check_ii(found == 2, "cube-contact2 cycle: fewer than two outgoing edges");
  return out;
}

Step rule_cube_contact2(const PlanarGraph& g) {
  auto ms = find_cubes(g, 2);
  if (ms.empty()) return std::nullopt;
  for (const Match& m : ms)
    check_ii(m.contact == 2, "cube-contact2: lower-contact cube survived");
  const int q0 = count_q(g);

  // Phase A: some removal exposes a theta component. Both outgoing edges end
  // on that theta, which forces everything else to stay pattern-free.
  for (const Match& h : ms) {
    PlanarGraph reduced = delete_vertices(g, h.image);
    const int q1 = count_q(reduced);
    if (q1 > q0) {
      check_ii(q1 == q0 + 1, "cube-contact2: two thetas from one removal");
      check_ii(count_p(reduced) == 0,
               "cube-contact2: new cube next to the new theta");
      RuleOutcome out;
      out.rule = "cube-contact2";
      out.variant = "new-theta";
      out.image = h.image;
      out.reduced = std::move(reduced);
      out.acct = make_acct(8, 14, 0, -1, 5);
      out.lifts = {cube_stage(g, h)};
      return StepOutcome{std::move(out)};
    }
    check_ii(q1 == q0, "cube-contact2: theta component vanished");
  }

  // Phase B: no removal exposes a theta; dispatch on how many replacement
  // cubes the best removal exposes.
  int best = -1;
  int best_p = 0;
  PlanarGraph best_reduced;
  for (size_t i = 0; i < ms.size(); ++i) {
    PlanarGraph reduced = delete_vertices(g, ms[i].image);
    const int p1 = count_p(reduced);
    if (best < 0 || p1 < best_p) {
      best = static_cast<int>(i);
      best_p = p1;
      best_reduced = std::move(reduced);
    }
  }
  const Match& h = ms[static_cast<size_t>(best)];
  if (best_p == 0 || best_p == 1) {
    RuleOutcome out;
    out.rule = "cube-contact2";
    out.variant = best_p == 0 ? "clean" : "new-cube";
    out.image = h.image;
    out.reduced = std::move(best_reduced);
    out.acct = best_p == 0 ? make_acct(8, 14, 0, 0, 5)
                           : make_acct(8, 14, -1, 0, 5);
    out.lifts = {cube_stage(g, h)};
    return StepOutcome{std::move(out)};
  }

  // Every removal exposes two replacements: the contact-2 cubes chain into
  // cycles. Remove the whole cycle through the first cube; its union has no
  // outgoing edges at all.
  check_ii(best_p == 2, "cube-contact2: removal exposed " +
                            std::to_string(best_p) + " cubes");
  std::vector<std::array<int, 2>> adj(ms.size());
  for (size_t i = 0; i < ms.size(); ++i)
    adj[i] = cube_cycle_neighbors(g, ms, static_cast<int>(i));

  std::vector<int> order;
  int prev = -1, curi = 0;
  do {
    order.push_back(curi);
    check_ii(order.size() <= ms.size(), "cube-contact2: cycle walk diverged");
    const int a = adj[static_cast<size_t>(curi)][0];
    const int b = adj[static_cast<size_t>(curi)][1];
    int nxt;
    if (prev == -1)
      nxt = std::min(a, b);
    else if (a == prev && b == prev)
      nxt = a;  // doubled adjacency: a two-cube cycle
    else
      nxt = (a == prev) ? b : a;
    prev = curi;
    curi = nxt;
  } while (curi != 0);

  std::vector<VertexId> image;
  for (int idx : order)
    image = sorted_union(image, ms[static_cast<size_t>(idx)].image);
  check_ii(contact_of(g, image) == 0,
           "cube-contact2: cube cycle still has outgoing edges");

  // Peel contexts in walk order so every lift stage sees the graph its cube
  // was removed from; stages run innermost (last removed) first.
  std::vector<LiftStage> lifts;
  {
    std::vector<LiftStage> forward;
    PlanarGraph ctx = g;
    for (int idx : order) {
      Match m = ms[static_cast<size_t>(idx)];
      m.contact = contact_of(ctx, m.image);
      check_ii(m.contact <= 2, "cube-contact2: peeled contact grew");
      PlanarGraph next = delete_vertices(ctx, m.image);
      forward.push_back(cube_stage(ctx, std::move(m)));
      ctx = std::move(next);
    }
    lifts.assign(forward.rbegin(), forward.rend());
  }

  const long long hh = static_cast<long long>(order.size());
  PlanarGraph reduced = delete_vertices(g, image);
  check_ii(count_p(reduced) == 0 && count_q(reduced) == q0,
           "cube-contact2: removing a closed cube cycle changed the counts");
  RuleOutcome out;
  out.rule = "cube-contact2";
  out.variant = "cycle";
  out.image = std::move(image);
  out.reduced = std::move(reduced);
  out.acct = make_acct(8 * hh, 13 * hh, 0, 0, 5 * hh);
  out.lifts = std::move(lifts);
  return StepOutcome{std::move(out)};
}

// --- worst-case cube rules at contacts 3..5 ---------------------------------

Step cube_worst_case(const PlanarGraph& g, int contact, const char* rule,
                     long long beta, bool maxdeg4_lift) {
  auto ms = find_cubes(g, contact);
  if (ms.empty()) return std::nullopt;
  for (const Match& m : ms)
    check_ii(m.contact == contact,
             std::string(rule) + ": lower-contact cube survived");
  const Match& h = ms.front();
  const int q0 = count_q(g);
  PlanarGraph reduced = delete_vertices(g, h.image);
  check_ii(count_p(reduced) <= 1,
           std::string(rule) + ": two cubes appeared at once");
  check_ii(count_q(reduced) <= q0 + 1,
           std::string(rule) + ": two thetas appeared at once");
  RuleOutcome out;
  out.rule = rule;
  out.variant = "worst";
  out.image = h.image;
  out.reduced = std::move(reduced);
  out.acct = make_acct(8, beta, -1, -1, 5);
  out.lifts = {maxdeg4_lift ? cube_maxdeg4_stage(g, h) : cube_stage(g, h)};
  return StepOutcome{std::move(out)};
}

Step rule_cube_contact3(const PlanarGraph& g) {
  return cube_worst_case(g, 3, "cube-contact3", 15, false);
}
Step rule_cube_contact4(const PlanarGraph& g) {
  return cube_worst_case(g, 4, "cube-contact4", 16, true);
}
Step rule_cube_contact5(const PlanarGraph& g) {
  return cube_worst_case(g, 5, "cube-contact5", 17, true);
}

// --- theta rules at contacts 2..3 -------------------------------------------

Step theta_mid_contact(const PlanarGraph& g, int contact, const char* rule,
                       long long beta) {
  auto ks = find_thetas(g, contact);
  if (ks.empty()) return std::nullopt;
  for (const Match& m : ks)
    check_ii(m.contact == contact,
             std::string(rule) + ": lower-contact theta survived");
  const Match& k = ks.front();
  const int q0 = count_q(g);
  PlanarGraph reduced = delete_vertices(g, k.image);
  check_ii(count_p(reduced) == 0,
           std::string(rule) + ": cube appeared although the lower cube rules "
                               "were exhausted");
  check_ii(count_q(reduced) <= q0 + 1,
           std::string(rule) + ": two thetas appeared at once");
  RuleOutcome out;
  out.rule = rule;
  out.variant = "";
  out.image = k.image;
  out.reduced = std::move(reduced);
  out.acct = make_acct(6, beta, 0, -1, 4);
  out.lifts = {theta_stage(g, k)};
  return StepOutcome{std::move(out)};
}

Step rule_theta_contact2(const PlanarGraph& g) {
  return theta_mid_contact(g, 2, "theta-contact2", 10);
}
Step rule_theta_contact3(const PlanarGraph& g) {
  return theta_mid_contact(g, 3, "theta-contact3", 11);
}

// --- high-degree vertex ------------------------------------------------------

Step rule_big_vertex(const PlanarGraph& g) {
  VertexId big = -1;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= 5) {
      big = v;
      break;
    }
  if (big < 0) return std::nullopt;
  const int q0 = count_q(g);
  PlanarGraph reduced = delete_vertices(g, {big});
  check_ii(count_p(reduced) == 0 && count_q(reduced) == q0,
           "big-vertex: removing a 5+-vertex exposed a pattern");
  RuleOutcome out;
  out.rule = "big-vertex";
  out.variant = "deg>=5";
  out.image = {big};
  out.reduced = std::move(reduced);
  out.acct = make_acct(1, 5, 0, 0, 0);
  out.lifts = {};
  return StepOutcome{std::move(out)};
}

// --- theta with 4..5 outgoing edges, all from one quad face ------------------

Step rule_theta_face45(const PlanarGraph& g) {
  auto ks = find_thetas(g, 5);
  if (ks.empty()) return std::nullopt;
  for (const Match& m : ks)
    check_ii(m.contact >= 4, "theta-face45: lower-contact theta survived");
  for (const Match& k : ks) {
    auto boundary = boundary_vertices(g, k.image);
    for (const auto& aut : theta_automorphisms()) {
      auto m2 = relabel_map(k.map, aut.data(), kThetaSize);
      // Quad cycle 0-1-4-2 of the pattern; all outgoing edges must leave it.
      std::vector<VertexId> quad =
          sorted_copy({m2[0], m2[1], m2[4], m2[2]});
      bool inside = true;
      for (VertexId b : boundary)
        if (!sorted_contains(quad, b)) {
          inside = false;
          break;
        }
      if (!inside) continue;

      std::vector<VertexId> removed = {m2[0], m2[1], m2[2], m2[3], m2[5]};
      PlanarGraph reduced = delete_vertices(g, removed);
      const int p2 = count_p(reduced);
      const int q2 = count_q(reduced);
      check_ii(p2 <= 1 && q2 <= 1 && !(p2 == 1 && q2 == 1),
               "theta-face45: removal exposed more than one pattern");
      std::string variant;
      Accounting acct;
      if (p2 == 1) {
        variant = "new-cube";
        acct = make_acct(5, 10, -1, 0, 3);
      } else if (q2 == 1) {
        variant = "new-theta";
        acct = make_acct(5, 10, 0, -1, 3);
      } else {
        variant = "clean";
        acct = make_acct(5, 10, 0, 0, 3);
      }
      RuleOutcome out;
      out.rule = "theta-face45";
      out.variant = variant;
      out.image = sorted_copy(removed);
      out.reduced = std::move(reduced);
      out.acct = acct;
      // Path role 3 - role 5 - role 0; keeps at most one live attachment.
      out.lifts = {add_stage(g, {m2[0], m2[3], m2[5]})};
      return StepOutcome{std::move(out)};
    }
  }
  return std::nullopt;
}

// --- take-all and split -------------------------------------------------------

Step rule_take_all(const PlanarGraph& g) {
  if (g.n() > 2 || !is_connected(g)) return std::nullopt;
  std::vector<VertexId> all = g.vertices();
  Accounting acct = g.n() == 1 ? make_acct(1, 0, 0, 0, 1)
                               : make_acct(2, 1, 0, 0, 2);
  return delete_outcome(g, "take-all", g.n() == 1 ? "single" : "edge", all,
                        acct, {add_stage(g, all)});
}

Step rule_split(const PlanarGraph& g) {
  if (!is_connected(g)) {
    auto comps = connected_components(g);
    std::vector<std::vector<VertexId>> sorted_comps;
    for (auto& c : comps) sorted_comps.push_back(sorted_copy(c));
    std::sort(sorted_comps.begin(), sorted_comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SplitOutcome out;
    out.variant = "component";
    for (const auto& comp : sorted_comps) {
      std::vector<VertexId> others;
      for (VertexId v : g.vertices())
        if (!sorted_contains(comp, v)) others.push_back(v);
      out.parts.push_back(delete_vertices(g, others));
    }
    return StepOutcome{std::move(out)};
  }
  auto cut = bridges(g);
  if (cut.empty()) return std::nullopt;
  std::sort(cut.begin(), cut.end());
  const Edge b = cut.front();
  PlanarGraph split_graph = delete_edge(g, b.first, b.second);
  auto comps = connected_components(split_graph);
  check_ii(comps.size() == 2, "split: bridge removal left " +
                                  std::to_string(comps.size()) + " parts");
  std::vector<std::vector<VertexId>> sorted_comps;
  for (auto& c : comps) sorted_comps.push_back(sorted_copy(c));
  std::sort(sorted_comps.begin(), sorted_comps.end(),
            [](const auto& a, const auto& b2) { return a.front() < b2.front(); });
  SplitOutcome out;
  out.variant = "bridge";
  out.bridge = b;
  for (const auto& comp : sorted_comps) {
    std::vector<VertexId> others;
    for (VertexId v : g.vertices())
      if (!sorted_contains(comp, v)) others.push_back(v);
    out.parts.push_back(delete_vertices(g, others));
  }
  return StepOutcome{std::move(out)};
}

}  // namespace

void append_pattern_rules(std::vector<ReductionRule>& table) {
  table.push_back({"cube-component", rule_cube_component});
  table.push_back({"theta-component", rule_theta_component});
  table.push_back({"cube-contact1", rule_cube_contact1});
  table.push_back({"theta-chain", rule_theta_chain});
  table.push_back({"cube-contact2", rule_cube_contact2});
  table.push_back({"cube-contact3", rule_cube_contact3});
  table.push_back({"theta-contact2", rule_theta_contact2});
  table.push_back({"big-vertex", rule_big_vertex});
  table.push_back({"cube-contact4", rule_cube_contact4});
  table.push_back({"theta-contact3", rule_theta_contact3});
  table.push_back({"theta-face45", rule_theta_face45});
  table.push_back({"cube-contact5", rule_cube_contact5});
  table.push_back({"take-all", rule_take_all});
  table.push_back({"split", rule_split});
}

}  // namespace inforest::rules
