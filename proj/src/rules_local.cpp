// Rules driven by low-degree vertices and separating 4-cycles. Table
// positions 14..23. Standing hypotheses when these run: the graph is
// connected, 2-edge-connected (split rule exhausted), has max degree <= 4
// (big-vertex exhausted), and carries no cube/theta occurrence of contact
// <= 5 (pattern rules exhausted), so count_p == count_q == 0 here.
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rules_internal.hpp"

namespace inforest::rules {
namespace {

VertexId other_neighbor(const PlanarGraph& g, VertexId v,
                        std::vector<VertexId> excluded) {
  std::sort(excluded.begin(), excluded.end());
  VertexId found = -1;
  int count = 0;
  for (VertexId nb : g.neighbors_sorted(v))
    if (!sorted_contains(excluded, nb)) {
      found = nb;
      ++count;
    }
  check_ii(count == 1, "expected exactly one remaining neighbor at vertex " +
                           std::to_string(v));
  return found;
}

// --- suppressing 2-vertices ---------------------------------------------------

Step rule_deg2_contract(const PlanarGraph& g) {
  for (VertexId v : vertices_of_degree(g, 2)) {
    auto nb = g.neighbors_sorted(v);
    const VertexId w = nb[0], w2 = nb[1];
    bool clean = true;
    for (VertexId c : common_neighbors(g, w, w2))
      if (c != v) {
        clean = false;
        break;
      }
    if (!clean) continue;  // contraction would close a triangle

    auto [g2, z] = contract_edge(g, v, w);
    const int p1 = count_p(g2);
    const int q1 = count_q(g2);
    check_ii(p1 <= 1 && q1 <= 1 && !(p1 == 1 && q1 == 1),
             "deg2-contract: contraction exposed more than one pattern");
    RuleOutcome out;
    out.rule = "deg2-contract";
    if (p1 == 1) {
      out.variant = "new-cube";
      out.acct = make_acct(1, 1, -1, 0, 1);
    } else if (q1 == 1) {
      out.variant = "new-theta";
      out.acct = make_acct(1, 1, 0, -1, 1);
    } else {
      out.variant = "clean";
      out.acct = make_acct(1, 1, 0, 0, 1);
    }
    out.image = sorted_copy({v, w});
    out.reduced = std::move(g2);
    out.lifts = {remap_stage(g, z, w), add_stage(g, {v})};
    return StepOutcome{std::move(out)};
  }
  return std::nullopt;
}

Step rule_deg2_deg4(const PlanarGraph& g) {
  for (VertexId v : vertices_of_degree(g, 2))
    for (VertexId u : g.neighbors_sorted(v))
      if (g.degree(u) == 4)
        return delete_outcome(g, "deg2-deg4", "", {v, u},
                              make_acct(2, 5, 0, 0, 1), {add_stage(g, {v})});
  return std::nullopt;
}

Step rule_deg2_deg2(const PlanarGraph& g) {
  for (VertexId v : vertices_of_degree(g, 2)) {
    for (VertexId u : g.neighbors_sorted(v)) {
      if (g.degree(u) != 2) continue;
      const VertexId w = other_neighbor(g, v, {u});
      const VertexId w2 = other_neighbor(g, u, {v});
      check_ii(w != w2, "deg2-deg2: triangle through two 2-vertices");
      // The contraction rule declined v, so its neighbors share a vertex
      // besides v; for a 2-vertex u that witness can only be w2.
      check_ii(g.has_edge(w, w2),
               "deg2-deg2: adjacent 2-vertices outside a square");
      if (g.degree(w) == 2 && g.degree(w2) == 2) {
        std::vector<VertexId> square = sorted_copy({v, u, w, w2});
        std::vector<VertexId> keep(square.begin(), square.end() - 1);
        return delete_outcome(g, "deg2-deg2", "whole-square", square,
                              make_acct(4, 4, 0, 0, 3), {add_stage(g, keep)});
      }
      const VertexId wstar = g.degree(w) == 3 ? w : w2;
      check_ii(g.degree(wstar) == 3,
               "deg2-deg2: 2-vertex neighbor of degree 4 escaped");
      return delete_outcome(g, "deg2-deg2", "main", {v, u, wstar},
                            make_acct(3, 5, 0, 0, 2), {add_stage(g, {v, u})});
    }
  }
  return std::nullopt;
}

Step rule_deg3_two_deg2(const PlanarGraph& g) {
  for (VertexId w : vertices_of_degree(g, 3)) {
    std::vector<VertexId> small;
    for (VertexId nb : g.neighbors_sorted(w))
      if (g.degree(nb) == 2) small.push_back(nb);
    if (small.size() < 2) continue;
    const VertexId u = small[0], v = small[1];
    return delete_outcome(g, "deg3-two-deg2", "", {u, v, w},
                          make_acct(3, 5, 0, 0, 2), {add_stage(g, {u, v})});
  }
  return std::nullopt;
}

Step rule_deg2_diamond(const PlanarGraph& g) {
  auto twos = vertices_of_degree(g, 2);
  if (twos.empty()) return std::nullopt;
  const VertexId w1 = twos.front();
  auto nb = g.neighbors_sorted(w1);
  const VertexId w2 = nb[0], w4 = nb[1];
  check_ii(g.degree(w2) == 3 && g.degree(w4) == 3,
           "deg2-diamond: 2-vertex with a non-3-neighbor escaped");
  std::vector<VertexId> comm;
  for (VertexId c : common_neighbors(g, w2, w4))
    if (c != w1) comm.push_back(c);
  check_ii(!comm.empty(),
           "deg2-diamond: contraction rule declined without a witness");
  const VertexId w3 = comm.front();
  const VertexId u = other_neighbor(g, w2, {w1, w3});
  check_ii(u != w4, "deg2-diamond: triangle at the 2-vertex");

  const bool tight =
      !(g.has_edge(u, w4) && g.degree(w3) == 3 && g.degree(u) == 3);
  if (tight)
    return delete_outcome(g, "deg2-diamond", "tight", {w1, w2, w3, w4, u},
                          make_acct(5, 9, 0, 0, 3),
                          {add_stage(g, {w4, w1, w2})});
  const VertexId v = other_neighbor(g, w3, {w2, w4});
  check_ii(v != u, "deg2-diamond: triangle at the diamond top");
  // u~v would close the diamond into a low-contact theta, which the pattern
  // rules already removed.
  check_ii(!g.has_edge(u, v), "deg2-diamond: theta escaped the pattern rules");
  return delete_outcome(g, "deg2-diamond", "extended", {w1, w2, w3, w4, u, v},
                        make_acct(6, 9, 0, 0, 4),
                        {add_stage(g, {u, w1, w2, w3})});
}

// --- 3-vertex next to a 4-vertex: delete both, rewire around them ------------

Step rule_deg3_deg4_rewire(const PlanarGraph& g) {
  // Later rules lean on this one being exhausted for EVERY pair of a
  // 3-vertex and one of its 4-vertex neighbors, so every pair is tried.
  std::optional<std::pair<VertexId, VertexId>> pick;
  for (VertexId v : vertices_of_degree(g, 3)) {
    for (VertexId u : g.neighbors_sorted(v)) {
      if (g.degree(u) != 4) continue;
      std::vector<VertexId> rest;
      for (VertexId nb : g.neighbors_sorted(v))
        if (nb != u) rest.push_back(nb);
      bool clean = true;
      for (VertexId c : common_neighbors(g, rest[0], rest[1]))
        if (c != v) {
          clean = false;
          break;
        }
      if (clean) {  // otherwise the added edge would close a triangle
        pick = {v, u};
        break;
      }
    }
    if (pick) break;
  }
  if (!pick) return std::nullopt;
  {
    const VertexId v = pick->first, u = pick->second;
    std::vector<VertexId> rest;
    for (VertexId nb : g.neighbors_sorted(v))
      if (nb != u) rest.push_back(nb);
    const VertexId x = rest[0], y = rest[1];

    PlanarGraph rewired = add_edge_in_face(delete_vertices(g, {u, v}), x, y);
    check_ii(count_q(rewired) == 0, "deg3-deg4-rewire: rewire exposed a theta");
    auto cubes = find_cubes(rewired, 1);
    if (cubes.empty())
      return rewired_outcome("deg3-deg4-rewire", "virtual-edge",
                             sorted_copy({u, v}), std::move(rewired),
                             make_acct(2, 5, 0, 0, 1), {add_stage(g, {v})});

    check_ii(cubes.size() == 1,
             "deg3-deg4-rewire: rewire exposed two cubes at once");
    const Match& k = cubes.front();
    check_ii(sorted_contains(k.image, x) && sorted_contains(k.image, y),
             "deg3-deg4-rewire: exposed cube avoids the added edge");
    std::vector<VertexId> removed = sorted_union(k.image, {v});
    // The kept forest slice depends on how the cube sits in the host; try
    // every orientation that puts the added edge on the 0-1 cube edge.
    std::vector<std::vector<VertexId>> cands;
    for (const auto& aut : cube_automorphisms()) {
      auto m2 = relabel_map(k.map, aut.data(), kCubeSize);
      if (!((m2[0] == x && m2[1] == y) || (m2[0] == y && m2[1] == x)))
        continue;
      for (int zi = 0; zi < 2; ++zi) {
        const VertexId z = m2[static_cast<size_t>(zi)];
        for (auto set : {std::vector<VertexId>{v, z, m2[2], m2[4], m2[6], m2[7]},
                         std::vector<VertexId>{v, z, m2[3], m2[5], m2[6], m2[7]}}) {
          set = sorted_copy(std::move(set));
          if (std::find(cands.begin(), cands.end(), set) == cands.end())
            cands.push_back(std::move(set));
        }
      }
    }
    check_ii(!cands.empty(),
             "deg3-deg4-rewire: added edge is not an edge of the exposed cube");
    return rewired_outcome("deg3-deg4-rewire", "cube-block", removed,
                           delete_vertices(g, removed),
                           make_acct(9, 14, 0, 0, 6),
                           {add_stage_multi(g, std::move(cands))});
  }
  return std::nullopt;
}

// --- separating squares --------------------------------------------------------

// The far end of the unique non-cycle edge at a degree-3 cycle vertex.
VertexId private_neighbor(const PlanarGraph& g, const std::vector<VertexId>& cyc,
                          VertexId w) {
  return other_neighbor(g, w, cyc);
}

std::vector<Edge> private_edges(const PlanarGraph& g,
                                const std::vector<VertexId>& cyc, VertexId w) {
  std::vector<Edge> out;
  for (VertexId nb : g.neighbors_sorted(w))
    if (std::find(cyc.begin(), cyc.end(), nb) == cyc.end())
      out.push_back(make_edge(w, nb));
  return out;
}

Step rule_square_two_sides(const PlanarGraph& g) {
  for (const auto& cyc : four_cycles(g)) {
    int t3 = 0;
    for (VertexId w : cyc)
      if (g.degree(w) == 3) ++t3;
    if (t3 != 1 && t3 != 2) continue;

    auto fire = [&](VertexId a, VertexId b) -> Step {
      return delete_outcome(g, "square-two-sides", "", cyc,
                            make_acct(4, 10, 0, 0, 2), {add_stage(g, {a, b})});
    };

    // Two opposite 3-vertices: their single outside attachments cannot close
    // a cycle over the deleted square.
    if (t3 == 2)
      for (int i = 0; i < 2; ++i)
        if (g.degree(cyc[static_cast<size_t>(i)]) == 3 &&
            g.degree(cyc[static_cast<size_t>(i + 2)]) == 3)
          return fire(cyc[static_cast<size_t>(i)],
                      cyc[static_cast<size_t>(i + 2)]);

    const CycleClass cc = classify_cycle(g, cyc);
    // Two adjacent 3-vertices attached into different regions.
    if (t3 == 2)
      for (int i = 0; i < 4; ++i) {
        const VertexId a = cyc[static_cast<size_t>(i)];
        const VertexId b = cyc[static_cast<size_t>((i + 1) % 4)];
        if (g.degree(a) != 3 || g.degree(b) != 3) continue;
        if (cc.side_of_edge(private_edges(g, cyc, a)[0]) !=
            cc.side_of_edge(private_edges(g, cyc, b)[0]))
          return fire(a, b);
      }
    // A 3-vertex whose opposite 4-vertex attaches into both regions.
    for (int i = 0; i < 4; ++i) {
      const VertexId a = cyc[static_cast<size_t>(i)];
      const VertexId b = cyc[static_cast<size_t>((i + 2) % 4)];
      if (g.degree(a) != 3 || g.degree(b) != 4) continue;
      auto pe = private_edges(g, cyc, b);
      if (cc.side_of_edge(pe[0]) != cc.side_of_edge(pe[1])) return fire(a, b);
    }
  }
  return std::nullopt;
}

Step rule_square_four_deg3(const PlanarGraph& g) {
  for (const auto& cyc : four_cycles(g)) {
    bool all3 = true;
    for (VertexId w : cyc)
      if (g.degree(w) != 3) all3 = false;
    if (!all3) continue;
    const CycleClass cc = classify_cycle(g, cyc);
    if (!cc.separating) continue;

    int sides[4];
    for (int i = 0; i < 4; ++i)
      sides[i] = cc.side_of_edge(
          private_edges(g, cyc, cyc[static_cast<size_t>(i)])[0]);
    const int on_first = static_cast<int>(std::count(sides, sides + 4, sides[0]));
    check_ii(on_first == 2,
             "square-four-deg3: attachments not split two against two");
    int i_same = -1, i_diff = -1;
    for (int i = 1; i < 4; ++i) {
      if (sides[i] == sides[0] && i_same < 0) i_same = i;
      if (sides[i] != sides[0] && i_diff < 0) i_diff = i;
    }
    const VertexId u = private_neighbor(g, cyc, cyc[0]);
    std::vector<VertexId> image = sorted_union(sorted_copy(cyc), {u});
    return delete_outcome(g, "square-four-deg3", "", image,
                          make_acct(5, 10, 0, 0, 3),
                          {add_stage(g, {cyc[0], cyc[static_cast<size_t>(i_same)],
                                         cyc[static_cast<size_t>(i_diff)]})});
  }
  return std::nullopt;
}

Step rule_square_three_deg3(const PlanarGraph& g) {
  for (const auto& cyc : four_cycles(g)) {
    int t3 = 0, i4 = -1;
    for (int i = 0; i < 4; ++i) {
      if (g.degree(cyc[static_cast<size_t>(i)]) == 3)
        ++t3;
      else
        i4 = i;
    }
    if (t3 != 3) continue;
    if (!classify_cycle(g, cyc).separating) continue;

    const VertexId w2 = cyc[static_cast<size_t>((i4 + 2) % 4)];
    VertexId w1 = cyc[static_cast<size_t>((i4 + 1) % 4)];
    VertexId w3 = cyc[static_cast<size_t>((i4 + 3) % 4)];
    if (w3 < w1) std::swap(w1, w3);
    const VertexId x = private_neighbor(g, cyc, w1);
    const VertexId y = private_neighbor(g, cyc, w2);
    const VertexId z = private_neighbor(g, cyc, w3);

    if (x == z)
      return delete_outcome(g, "square-three-deg3", "pinch",
                            sorted_union(sorted_copy(cyc), {x}),
                            make_acct(5, 10, 0, 0, 3),
                            {add_stage(g, {w1, w2, w3})});
    check_ii(g.has_edge(x, y) && g.has_edge(y, z),
             "square-three-deg3: rewire rule left the attachments unlinked");
    if (g.degree(x) == 3 && g.degree(y) == 3 && g.degree(z) == 3)
      return delete_outcome(g, "square-three-deg3", "six-block",
                            sorted_copy({w1, w2, w3, x, y, z}),
                            make_acct(6, 11, 0, 0, 4),
                            {add_stage(g, {w2, w3, x, y})});
    return delete_outcome(g, "square-three-deg3", "seven-block",
                          sorted_union(sorted_copy(cyc), sorted_copy({x, y, z})),
                          make_acct(7, 14, 0, 0, 4),
                          {add_stage(g, {y, w1, w2, w3})});
  }
  return std::nullopt;
}

Step rule_square_two_deg3(const PlanarGraph& g) {
  for (const auto& cyc : four_cycles(g)) {
    int t3 = 0;
    for (VertexId w : cyc)
      if (g.degree(w) == 3) ++t3;
    if (t3 != 2) continue;
    const CycleClass cc = classify_cycle(g, cyc);
    if (!cc.separating) continue;

    int p = -1;  // position with cyc[p], cyc[p+1] both degree 3
    for (int i = 0; i < 4; ++i)
      if (g.degree(cyc[static_cast<size_t>(i)]) == 3 &&
          g.degree(cyc[static_cast<size_t>((i + 1) % 4)]) == 3)
        p = i;
    check_ii(p >= 0,
             "square-two-deg3: opposite 3-vertices escaped the two-sides rule");
    VertexId w1 = cyc[static_cast<size_t>(p)];
    VertexId w2 = cyc[static_cast<size_t>((p + 1) % 4)];
    VertexId w3 = cyc[static_cast<size_t>((p + 2) % 4)];  // 4-vertex next to w2
    VertexId w4 = cyc[static_cast<size_t>((p + 3) % 4)];  // 4-vertex next to w1

    const int s1 = cc.side_of_edge(private_edges(g, cyc, w1)[0]);
    const int s2 = cc.side_of_edge(private_edges(g, cyc, w2)[0]);
    check_ii(s1 == s2,
             "square-two-deg3: split 3-vertex attachments escaped the "
             "two-sides rule");
    auto pair_side = [&](VertexId w) {
      auto pe = private_edges(g, cyc, w);
      check_ii(cc.side_of_edge(pe[0]) == cc.side_of_edge(pe[1]),
               "square-two-deg3: split 4-vertex attachments escaped the "
               "two-sides rule");
      return cc.side_of_edge(pe[0]);
    };
    const int p3 = pair_side(w3);
    const int p4 = pair_side(w4);
    check_ii(!(p3 == s1 && p4 == s1),
             "square-two-deg3: separating square with an unreachable region");
    // Put the 4-vertex whose pair is attached away from the 3-vertices at w3;
    // when both are, pick the orientation with the smaller 3-vertex first.
    if (p3 == s1 || (p4 != s1 && w2 < w1)) {
      std::swap(w1, w2);
      std::swap(w3, w4);
    }

    const VertexId u = private_neighbor(g, cyc, w1);
    const VertexId v = private_neighbor(g, cyc, w2);
    check_ii(!g.has_edge(u, w3),
             "square-two-deg3: outer attachment reaching the inner pair");
    check_ii(g.has_edge(u, v),
             "square-two-deg3: rewire rule left the attachments unlinked");
    if (g.degree(v) == 4)
      return delete_outcome(g, "square-two-deg3", "four-block",
                            sorted_copy({w1, w2, v, w4}),
                            make_acct(4, 10, 0, 0, 2),
                            {add_stage(g, {w1, w2})});
    check_ii(g.degree(v) == 3, "square-two-deg3: attachment degree out of range");
    return delete_outcome(g, "square-two-deg3", "five-block",
                          sorted_copy({u, v, w1, w2, w4}),
                          make_acct(5, 10, 0, 0, 3),
                          {add_stage(g, {v, w2, w1})});
  }
  return std::nullopt;
}

}  // namespace

void append_local_rules(std::vector<ReductionRule>& table) {
  table.push_back({"deg2-contract", rule_deg2_contract});
  table.push_back({"deg2-deg4", rule_deg2_deg4});
  table.push_back({"deg2-deg2", rule_deg2_deg2});
  table.push_back({"deg3-two-deg2", rule_deg3_two_deg2});
  table.push_back({"deg2-diamond", rule_deg2_diamond});
  table.push_back({"deg3-deg4-rewire", rule_deg3_deg4_rewire});
  table.push_back({"square-two-sides", rule_square_two_sides});
  table.push_back({"square-four-deg3", rule_square_four_deg3});
  table.push_back({"square-three-deg3", rule_square_three_deg3});
  table.push_back({"square-two-deg3", rule_square_two_deg3});
}

}  // namespace inforest::rules
