// Reduction rules keyed on the degree profile of quadrilateral and pentagonal
// faces. These sit at the end of the table, so the host graph here is
// connected, 2-edge-connected, triangle-free, has every degree in {3,4},
// carries no low-contact cube or theta image, and has no separating 4-cycle
// with two or more 3-vertices.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inforest/reduce.hpp"
#include "rules_internal.hpp"

namespace inforest::rules {
namespace {

using std::vector;

// The unique neighbor of a degree-3 cycle vertex that lies off the cycle.
VertexId private_neighbor(const PlanarGraph& g, VertexId w,
                          const vector<VertexId>& cyc) {
  VertexId out = -1;
  int cnt = 0;
  for (VertexId t : g.neighbors_sorted(w)) {
    if (std::find(cyc.begin(), cyc.end(), t) == cyc.end()) {
      out = t;
      ++cnt;
    }
  }
  check_ii(cnt == 1,
           "face rules: cycle vertex lacks a unique off-cycle neighbor");
  return out;
}

int count_deg3(const PlanarGraph& g, const vector<VertexId>& f) {
  int c = 0;
  for (VertexId v : f) c += g.degree(v) == 3 ? 1 : 0;
  return c;
}

vector<VertexId> rotated(const vector<VertexId>& f, int s) {
  vector<VertexId> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = f[(i + static_cast<std::size_t>(s)) % f.size()];
  return out;
}

// --- all-3-vertex quad faces ------------------------------------------------

// Opposite off-face neighbors of an all-3-vertex quad face are adjacent.
Step rule_quadface_cross_pair(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 4) continue;
    auto f = face;
    std::array<VertexId, 4> x{};
    for (int i = 0; i < 4; ++i)
      x[static_cast<std::size_t>(i)] = private_neighbor(g, f[static_cast<std::size_t>(i)], f);
    check_ii(x[0] != x[2] && x[1] != x[3],
             "quadface-cross-pair: opposite off-face neighbors coincide");
    const bool adj02 = g.has_edge(x[0], x[2]);
    const bool adj13 = g.has_edge(x[1], x[3]);
    if (!adj02 && !adj13) continue;
    check_ii(!(adj02 && adj13),
             "quadface-cross-pair: both off-face diagonals present");
    if (!adj02) {
      f = rotated(f, 1);
      x = {x[1], x[2], x[3], x[0]};
    }
    // x0-x2 is the adjacent pair. Its side partners x1, x3 may only meet on
    // that pair, and never on both ends (that would close a triangle).
    auto commons = common_neighbors(g, x[1], x[3]);
    for (VertexId t : commons)
      check_ii(t == x[0] || t == x[2],
               "quadface-cross-pair: stray common neighbor of side partners");
    const bool c0 = sorted_contains(commons, x[0]);
    const bool c2 = sorted_contains(commons, x[2]);
    check_ii(!(c0 && c2),
             "quadface-cross-pair: both diagonal ends common to the side pair");
    if (c2) {
      f = rotated(f, 2);
      x = {x[2], x[3], x[0], x[1]};
    }
    if (g.degree(x[0]) == 3) {
      vector<VertexId> image = {f[0], f[1], f[2], f[3], x[2]};
      return delete_outcome(g, "quadface-cross-pair", "pinch", image,
                            make_acct(5, 10, 0, 0, 3),
                            {add_stage(g, {f[1], f[2], f[3]})});
    }
    vector<VertexId> removed = {x[0], f[0], f[1], f[2], f[3]};
    PlanarGraph reduced =
        add_edge_in_face(delete_vertices(g, removed), x[1], x[3]);
    check_ii(is_triangle_free(reduced),
             "quadface-cross-pair: rewire closed a triangle");
    const int p1 = count_p(reduced);
    const int q1 = count_q(reduced);
    check_ii(p1 + q1 <= 1,
             "quadface-cross-pair: rewire exposed more than one pattern");
    const std::string variant =
        p1 == 1 ? "rewire-new-cube" : q1 == 1 ? "rewire-new-theta" : "rewire-clean";
    return rewired_outcome("quadface-cross-pair", variant, removed,
                           std::move(reduced),
                           make_acct(5, 10, p1 == 1 ? -1 : 0, q1 == 1 ? -1 : 0, 3),
                           {add_stage(g, {f[0], f[1], f[3]})});
  }
  return std::nullopt;
}

// An all-3-vertex quad face with two consecutive sides on long faces: the
// face is collapsed onto one corner, which is rewired to the two off-face
// neighbors across it.
Step rule_quadface_corridor(const PlanarGraph& g) {
  const FaceLengths fl(g);
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 4) continue;
    int j = -1;
    for (int i = 0; i < 4 && j < 0; ++i) {
      const Edge e1 = make_edge(face[static_cast<std::size_t>(i)],
                                face[static_cast<std::size_t>((i + 1) % 4)]);
      const Edge e2 = make_edge(face[static_cast<std::size_t>((i + 1) % 4)],
                                face[static_cast<std::size_t>((i + 2) % 4)]);
      if (fl.on_long_face(e1) && fl.on_long_face(e2)) j = i;
    }
    if (j < 0) continue;
    const auto f = rotated(face, j);
    const VertexId x0 = private_neighbor(g, f[0], f);
    const VertexId x2 = private_neighbor(g, f[2], f);
    const vector<VertexId> removed = {f[0], f[2], f[3]};
    PlanarGraph reduced = add_edge_in_face(
        add_edge_in_face(delete_vertices(g, removed), x0, f[1]), f[1], x2);
    check_ii(is_triangle_free(reduced),
             "quadface-corridor: rewire closed a triangle");
    check_ii(count_q(reduced) == 0, "quadface-corridor: rewire exposed a theta");
    if (count_p(reduced) == 0) {
      return rewired_outcome("quadface-corridor", "rewire", removed,
                             std::move(reduced), make_acct(3, 5, 0, 0, 2),
                             {add_stage(g, {f[0], f[2]})});
    }
    auto cubes = find_cubes(reduced, 1);
    check_ii(cubes.size() == 1,
             "quadface-corridor: expected exactly one low-contact cube");
    const Match k = cubes.front();
    check_ii(sorted_contains(k.image, f[1]),
             "quadface-corridor: exposed cube avoids the kept corner");
    check_ii(k.contact == 1,
             "quadface-corridor: exposed cube is a full component");
    PlanarGraph rest = delete_vertices(reduced, k.image);
    vector<LiftStage> lifts;
    lifts.push_back(cube_stage(reduced, k));
    lifts.push_back(add_stage(g, {f[0], f[2]}));
    return rewired_outcome("quadface-corridor", "cube-block",
                           sorted_union(sorted_copy(removed), k.image),
                           std::move(rest), make_acct(11, 18, 0, 0, 7),
                           std::move(lifts));
  }
  return std::nullopt;
}

// An all-3-vertex quad face with two opposite off-face neighbors of degree 4:
// the face plus those two anchors come out as one block.
Step rule_quadface_twin_anchor(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 4) continue;
    std::array<VertexId, 4> x{};
    for (int i = 0; i < 4; ++i)
      x[static_cast<std::size_t>(i)] =
          private_neighbor(g, face[static_cast<std::size_t>(i)], face);
    for (int j = 0; j < 2; ++j) {
      const VertexId a = x[static_cast<std::size_t>(j)];
      const VertexId b = x[static_cast<std::size_t>(j + 2)];
      if (g.degree(a) != 4 || g.degree(b) != 4) continue;
      check_ii(a != b, "quadface-twin-anchor: opposite off-face neighbors coincide");
      check_ii(!g.has_edge(a, b),
               "quadface-twin-anchor: adjacent pair escaped the cross-pair rule");
      vector<VertexId> image = {face[0], face[1], face[2], face[3], a, b};
      return delete_outcome(g, "quadface-twin-anchor", "", image,
                            make_acct(6, 14, 0, 0, 3),
                            {add_stage(g, {face[static_cast<std::size_t>(j)],
                                           face[static_cast<std::size_t>((j + 1) % 4)],
                                           face[static_cast<std::size_t>((j + 2) % 4)]})});
    }
  }
  return std::nullopt;
}

// Any remaining all-3-vertex quad face. The two quad-only opposite sides
// force outer edges, and the face plus its off-face neighborhood comes out
// as a seven- or eight-vertex block.
Step rule_quadface_all_deg3(const PlanarGraph& g) {
  const FaceLengths fl(g);
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 4) continue;
    auto f = face;
    std::array<VertexId, 4> x{};
    for (int i = 0; i < 4; ++i)
      x[static_cast<std::size_t>(i)] = private_neighbor(g, f[static_cast<std::size_t>(i)], f);
    for (int i = 0; i < 4; ++i)
      for (int k = i + 1; k < 4; ++k)
        check_ii(x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(k)],
                 "quadface-all-deg3: off-face neighbors not distinct");
    bool any_long = false;
    for (int i = 0; i < 4; ++i)
      any_long = any_long ||
                 fl.on_long_face(make_edge(f[static_cast<std::size_t>(i)],
                                           f[static_cast<std::size_t>((i + 1) % 4)]));
    check_ii(any_long,
             "quadface-all-deg3: a face boxed in by quad faces forms a cube");
    int j = -1;
    for (int i = 0; i < 2 && j < 0; ++i) {
      if (fl.only_quad_faces(make_edge(f[static_cast<std::size_t>(i)],
                                       f[static_cast<std::size_t>((i + 1) % 4)])) &&
          fl.only_quad_faces(make_edge(f[static_cast<std::size_t>((i + 2) % 4)],
                                       f[static_cast<std::size_t>((i + 3) % 4)])))
        j = i;
    }
    check_ii(j >= 0,
             "quadface-all-deg3: no opposite quad-only sides after the corridor rule");
    if (j == 1) {
      f = rotated(f, 1);
      x = {x[1], x[2], x[3], x[0]};
    }
    check_ii(g.has_edge(x[0], x[1]) && g.has_edge(x[2], x[3]),
             "quadface-all-deg3: quad-only sides fail to force outer edges");
    // Pick among the four relabelings that keep the quad-only pair in
    // position: maximize the degree at x0, then take the smallest ids.
    struct Lab {
      std::array<VertexId, 4> w, x;
    };
    const std::array<Lab, 4> labs = {
        Lab{{f[0], f[1], f[2], f[3]}, x},
        Lab{{f[2], f[3], f[0], f[1]}, {x[2], x[3], x[0], x[1]}},
        Lab{{f[1], f[0], f[3], f[2]}, {x[1], x[0], x[3], x[2]}},
        Lab{{f[3], f[2], f[1], f[0]}, {x[3], x[2], x[1], x[0]}}};
    int best = 0;
    for (int i = 1; i < 4; ++i) {
      const Lab& a = labs[static_cast<std::size_t>(i)];
      const Lab& b = labs[static_cast<std::size_t>(best)];
      const int da = g.degree(a.x[0]), db = g.degree(b.x[0]);
      if (da != db ? da > db
                   : a.x[0] != b.x[0] ? a.x[0] < b.x[0] : a.w[0] < b.w[0])
        best = i;
    }
    const auto w = labs[static_cast<std::size_t>(best)].w;
    x = labs[static_cast<std::size_t>(best)].x;
    check_ii(g.degree(x[2]) == 3,
             "quadface-all-deg3: opposite outer pair escaped the twin-anchor rule");
    if (g.has_edge(x[1], x[2])) {
      vector<VertexId> image = {w[0], w[1], w[2], w[3], x[0], x[1], x[2], x[3]};
      return delete_outcome(g, "quadface-all-deg3", "eight-block", image,
                            make_acct(8, 13, 0, 0, 5),
                            {add_stage(g, {x[1], w[1], w[0], w[3], x[2]})});
    }
    if (g.has_edge(x[0], x[3])) {
      vector<VertexId> image = {w[0], w[1], w[2], w[3], x[0], x[1], x[2], x[3]};
      return delete_outcome(g, "quadface-all-deg3", "eight-block", image,
                            make_acct(8, 13, 0, 0, 5),
                            {add_stage(g, {x[0], w[0], w[1], w[3], x[2]})});
    }
    if (g.degree(x[1]) == 3) {
      vector<VertexId> image = {w[0], w[1], w[2], w[3], x[0], x[1], x[2], x[3]};
      return delete_outcome(g, "quadface-all-deg3", "eight-block", image,
                            make_acct(8, 13, 0, 0, 5),
                            {add_stage(g, {w[0], w[2], w[3], x[2], x[1]})});
    }
    // x1 is a 4-vertex, so x3 cannot be: keep x1 and take the other seven.
    check_ii(g.degree(x[3]) == 3,
             "quadface-all-deg3: outer pair x1, x3 escaped the twin-anchor rule");
    vector<VertexId> image = {w[0], w[1], w[2], w[3], x[0], x[2], x[3]};
    return delete_outcome(g, "quadface-all-deg3", "seven-block", image,
                          make_acct(7, 14, 0, 0, 4),
                          {add_stage(g, {x[3], w[0], w[2], w[3]})});
  }
  return std::nullopt;
}

// --- quad faces with three / two 3-vertices ----------------------------------

Step rule_quadface_three_deg3(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 3) continue;
    int i4 = -1;
    for (int i = 0; i < 4; ++i)
      if (g.degree(face[static_cast<std::size_t>(i)]) == 4) i4 = i;
    const VertexId w3 = face[static_cast<std::size_t>(i4)];
    const VertexId w1 = face[static_cast<std::size_t>((i4 + 2) % 4)];
    const VertexId oa = face[static_cast<std::size_t>((i4 + 1) % 4)];
    const VertexId ob = face[static_cast<std::size_t>((i4 + 3) % 4)];
    const VertexId w0 = std::min(oa, ob);
    const VertexId w2 = std::max(oa, ob);
    const vector<VertexId> cyc = {w0, w1, w2, w3};
    const vector<VertexId> expect02 = {std::min(w1, w3), std::max(w1, w3)};
    const vector<VertexId> expect13 = {w0, w2};
    check_ii(common_neighbors(g, w0, w2) == expect02,
             "quadface-three-deg3: stray common neighbor across the face");
    check_ii(common_neighbors(g, w1, w3) == expect13,
             "quadface-three-deg3: stray common neighbor across the face");
    const VertexId x0 = private_neighbor(g, w0, cyc);
    const VertexId x1 = private_neighbor(g, w1, cyc);
    const VertexId x2 = private_neighbor(g, w2, cyc);
    check_ii(x0 != x1 && x1 != x2 && x0 != x2,
             "quadface-three-deg3: off-face neighbors not distinct");
    check_ii(g.has_edge(x0, x1) && g.has_edge(x1, x2),
             "quadface-three-deg3: forced outer path missing");
    check_ii(!(g.degree(x0) == 3 && g.degree(x1) == 3),
             "quadface-three-deg3: all-3-vertex 4-cycle escaped earlier rules");
    check_ii(!(g.degree(x1) == 3 && g.degree(x2) == 3),
             "quadface-three-deg3: all-3-vertex 4-cycle escaped earlier rules");
    vector<VertexId> image = {w0, w1, w2, w3, x0, x1, x2};
    return delete_outcome(g, "quadface-three-deg3", "", image,
                          make_acct(7, 14, 0, 0, 4),
                          {add_stage(g, {x1, w0, w1, w2})});
  }
  return std::nullopt;
}

Step rule_quadface_two_deg3(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 2) continue;
    int i = -1;
    for (int k = 0; k < 4; ++k)
      if (g.degree(face[static_cast<std::size_t>(k)]) == 3 &&
          g.degree(face[static_cast<std::size_t>((k + 1) % 4)]) == 3)
        i = k;
    check_ii(i >= 0,
             "quadface-two-deg3: opposite 3-vertices escaped the side rules");
    VertexId w0 = face[static_cast<std::size_t>(i)];
    VertexId w1 = face[static_cast<std::size_t>((i + 1) % 4)];
    VertexId w2 = face[static_cast<std::size_t>((i + 2) % 4)];
    VertexId w3 = face[static_cast<std::size_t>((i + 3) % 4)];
    if (w1 < w0) {
      std::swap(w0, w1);
      std::swap(w2, w3);
    }
    const vector<VertexId> cyc = {w0, w1, w2, w3};
    VertexId x0 = private_neighbor(g, w0, cyc);
    VertexId x1 = private_neighbor(g, w1, cyc);
    check_ii(!g.has_edge(x0, w2) && !g.has_edge(x1, w3),
             "quadface-two-deg3: chord to the far corner escaped the side rules");
    check_ii(g.has_edge(x0, x1), "quadface-two-deg3: forced outer edge missing");
    check_ii(g.degree(x0) == 4 && g.degree(x1) == 4,
             "quadface-two-deg3: outer 3-vertex escaped earlier rules");
    const bool blocked0 = !common_neighbors(g, x0, w2).empty();
    const bool blocked1 = !common_neighbors(g, x1, w3).empty();
    check_ii(!(blocked0 && blocked1),
             "quadface-two-deg3: both rewire targets blocked");
    if (blocked0) {
      std::swap(w0, w1);
      std::swap(w2, w3);
      std::swap(x0, x1);
    }
    const vector<VertexId> removed = {x1, w0, w1, w3};
    PlanarGraph reduced =
        add_edge_in_face(delete_vertices(g, removed), x0, w2);
    check_ii(is_triangle_free(reduced),
             "quadface-two-deg3: rewire closed a triangle");
    const int p1 = count_p(reduced);
    const int q1 = count_q(reduced);
    check_ii(p1 + q1 <= 1,
             "quadface-two-deg3: rewire exposed more than one pattern");
    if (p1 == 0 && q1 == 0) {
      return rewired_outcome("quadface-two-deg3", "rewire", removed,
                             std::move(reduced), make_acct(4, 10, 0, 0, 2),
                             {add_stage(g, {w0, w1})});
    }
    if (q1 == 1) {
      auto thetas = find_thetas(reduced, 0);
      check_ii(thetas.size() == 1,
               "quadface-two-deg3: expected exactly one theta component");
      const Match k = thetas.front();
      check_ii(sorted_contains(k.image, x0) && sorted_contains(k.image, w2),
               "quadface-two-deg3: exposed theta avoids the added edge");
      PlanarGraph rest = delete_vertices(reduced, k.image);
      vector<LiftStage> lifts;
      lifts.push_back(theta_stage(reduced, k));
      lifts.push_back(add_stage(g, {w0, w1}));
      return rewired_outcome("quadface-two-deg3", "theta-block",
                             sorted_union(sorted_copy(removed), k.image),
                             std::move(rest), make_acct(10, 18, 0, 0, 6),
                             std::move(lifts));
    }
    auto cubes = find_cubes(reduced, 1);
    check_ii(cubes.size() == 1,
             "quadface-two-deg3: expected exactly one low-contact cube");
    const Match k = cubes.front();
    check_ii(k.contact == 1,
             "quadface-two-deg3: exposed cube is a full component");
    check_ii(sorted_contains(k.image, x0) && sorted_contains(k.image, w2),
             "quadface-two-deg3: exposed cube avoids the added edge");
    PlanarGraph rest = delete_vertices(reduced, k.image);
    vector<LiftStage> lifts;
    lifts.push_back(cube_stage(reduced, k));
    lifts.push_back(add_stage(g, {w0, w1}));
    return rewired_outcome("quadface-two-deg3", "cube-block",
                           sorted_union(sorted_copy(removed), k.image),
                           std::move(rest), make_acct(12, 23, 0, 0, 7),
                           std::move(lifts));
  }
  return std::nullopt;
}

// --- quad faces with exactly one 3-vertex ("hub" faces) ----------------------

// Forced local structure around the unique 3-vertex corner w0 of a quad face:
// its off-face neighbor x0 is a 4-vertex, and each of the two face corners
// next to w0 shares a second neighbor with x0 (the "shoulders" x1, x3).
struct HubCore {
  VertexId w0, w1, w2, w3;
  VertexId x0, x1, x3;
};

HubCore hub_core(const PlanarGraph& g, const vector<VertexId>& f) {
  int i0 = -1;
  for (int i = 0; i < 4; ++i) {
    if (g.degree(f[static_cast<std::size_t>(i)]) == 3) {
      check_ii(i0 < 0, "hub: face has more than one 3-vertex");
      i0 = i;
    }
  }
  check_ii(i0 >= 0, "hub: face has no 3-vertex");
  HubCore h;
  h.w0 = f[static_cast<std::size_t>(i0)];
  h.w1 = f[static_cast<std::size_t>((i0 + 1) % 4)];
  h.w2 = f[static_cast<std::size_t>((i0 + 2) % 4)];
  h.w3 = f[static_cast<std::size_t>((i0 + 3) % 4)];
  h.x0 = private_neighbor(g, h.w0, f);
  check_ii(!g.has_edge(h.x0, h.w2),
           "hub: pivot neighbor adjacent to the opposite corner");
  auto c1 = common_neighbors(g, h.x0, h.w1);
  std::erase(c1, h.w0);
  check_ii(!c1.empty(), "hub: missing shoulder toward the first corner");
  h.x1 = c1.front();
  auto c3 = common_neighbors(g, h.x0, h.w3);
  std::erase(c3, h.w0);
  check_ii(!c3.empty(), "hub: missing shoulder toward the second corner");
  h.x3 = c3.front();
  check_ii(g.degree(h.x0) == 4, "hub: pivot neighbor is a 3-vertex");
  check_ii(g.degree(h.x1) == 4 && g.degree(h.x3) == 4,
           "hub: shoulder is a 3-vertex");
  return h;
}

// Fourth neighbors ("tips") of the three arms around w0. Well defined once
// the common-neighbor rule has exhausted this face.
struct HubTips {
  VertexId y0, y1, y3;
};

VertexId fourth_neighbor(const PlanarGraph& g, VertexId v, VertexId a,
                         VertexId b, VertexId c) {
  VertexId out = -1;
  int cnt = 0;
  for (VertexId t : g.neighbors_sorted(v)) {
    if (t != a && t != b && t != c) {
      out = t;
      ++cnt;
    }
  }
  check_ii(cnt == 1, "hub: arm tip is not unique");
  return out;
}

HubTips hub_tips(const PlanarGraph& g, const HubCore& h) {
  check_ii(h.x1 != h.x3, "hub: shoulders coincide after the common-neighbor rule");
  HubTips t;
  t.y1 = fourth_neighbor(g, h.w1, h.w0, h.w2, h.x1);
  t.y3 = fourth_neighbor(g, h.w3, h.w0, h.w2, h.x3);
  t.y0 = fourth_neighbor(g, h.x0, h.w0, h.x1, h.x3);
  return t;
}

// The three arms around w0 are structurally interchangeable. A frame fixes
// one of the six arm orders and renames the whole configuration accordingly.
struct HubFrame {
  VertexId w1, w3, x0;  // arm vertices
  VertexId w2, x1, x3;  // pairwise second common neighbors
  VertexId y1, y3, y0;  // arm tips
};

vector<HubFrame> hub_frames(const PlanarGraph& g, VertexId w0) {
  const auto ns = g.neighbors_sorted(w0);
  check_ii(ns.size() == 3, "hub: pivot is not a 3-vertex");
  const auto second = [&](VertexId a, VertexId b) {
    auto cs = common_neighbors(g, a, b);
    std::erase(cs, w0);
    check_ii(!cs.empty(), "hub: arms lack a second common neighbor");
    return cs.front();
  };
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  vector<HubFrame> out;
  for (const auto& p : kPerms) {
    HubFrame fr;
    fr.w1 = ns[static_cast<std::size_t>(p[0])];
    fr.w3 = ns[static_cast<std::size_t>(p[1])];
    fr.x0 = ns[static_cast<std::size_t>(p[2])];
    fr.w2 = second(fr.w1, fr.w3);
    fr.x1 = second(fr.w1, fr.x0);
    fr.x3 = second(fr.w3, fr.x0);
    fr.y1 = fourth_neighbor(g, fr.w1, w0, fr.w2, fr.x1);
    fr.y3 = fourth_neighbor(g, fr.w3, w0, fr.w2, fr.x3);
    fr.y0 = fourth_neighbor(g, fr.x0, w0, fr.x1, fr.x3);
    out.push_back(fr);
  }
  return out;
}

// The two face corners next to the hub share a neighbor beyond the face.
Step rule_hub_common_neighbor(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    auto cands = common_neighbors(g, h.w1, h.w3);
    std::erase(cands, h.w0);
    std::erase(cands, h.w2);
    if (cands.empty()) continue;
    for (VertexId t : cands)
      check_ii(!g.has_edge(t, h.x0),
               "hub-common-neighbor: candidate adjacent to the pivot neighbor");
    const VertexId xc = cands.front();
    check_ii(g.degree(xc) == 4,
             "hub-common-neighbor: extra common neighbor is a 3-vertex");
    vector<VertexId> image = {h.w0, h.w1, h.w2, h.w3, xc, h.x0, h.x1, h.x3};
    RuleOutcome out = delete_outcome(g, "hub-common-neighbor", "", image,
                                     make_acct(8, 20, 0, 0, 4),
                                     {add_stage(g, {h.x0, h.w0, h.w1, h.w3})});
    check_ii(count_p(out.reduced) == 0 && count_q(out.reduced) == 0,
             "hub-common-neighbor: residual pattern after block removal");
    return out;
  }
  return std::nullopt;
}

// The pivot's tip coincides with one of the corner tips.
Step rule_hub_shared_tip(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    const HubTips t = hub_tips(g, h);
    check_ii(t.y1 != t.y3,
             "hub-shared-tip: corner tips coincide after the common-neighbor rule");
    std::string variant;
    VertexId far = -1;
    if (t.y0 == t.y1) {
      variant = "tip-a";
      far = h.w3;
    } else if (t.y0 == t.y3) {
      variant = "tip-b";
      far = h.w1;
    } else {
      continue;
    }
    check_ii(g.degree(t.y0) == 4, "hub-shared-tip: shared tip is a 3-vertex");
    check_ii(!g.has_edge(t.y0, far),
             "hub-shared-tip: shared tip adjacent to the far corner");
    vector<VertexId> image = {h.w0, h.w1, h.w2, h.w3, h.x0, h.x1, h.x3, t.y0};
    RuleOutcome out = delete_outcome(g, "hub-shared-tip", variant, image,
                                     make_acct(8, 20, 0, 0, 4),
                                     {add_stage(g, {h.x0, h.w0, h.w1, h.w3})});
    check_ii(count_p(out.reduced) == 0 && count_q(out.reduced) == 0,
             "hub-shared-tip: residual pattern after block removal");
    return out;
  }
  return std::nullopt;
}

// No two tips adjacent: delete the six inner vertices and re-attach the hub
// to the three tips.
Step rule_hub_spread(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    const HubTips t = hub_tips(g, h);
    check_ii(t.y0 != t.y1 && t.y0 != t.y3 && t.y1 != t.y3,
             "hub-spread: tips coincide after earlier hub rules");
    if (g.has_edge(t.y0, t.y1) || g.has_edge(t.y1, t.y3) ||
        g.has_edge(t.y0, t.y3))
      continue;
    const vector<VertexId> removed = {h.w1, h.w2, h.w3, h.x0, h.x1, h.x3};
    PlanarGraph reduced = attach_existing_in_face(delete_vertices(g, removed),
                                                  h.w0, {t.y0, t.y1, t.y3});
    check_ii(count_q(reduced) == 0, "hub-spread: re-attachment exposed a theta");
    const int p1 = count_p(reduced);
    check_ii(p1 <= 1, "hub-spread: re-attachment exposed more than one cube");
    return rewired_outcome("hub-spread", p1 == 1 ? "new-cube" : "clean",
                           removed, std::move(reduced),
                           make_acct(6, 15, p1 == 1 ? -1 : 0, 0, 3),
                           {add_stage(g, {h.x0, h.w1, h.w3})});
  }
  return std::nullopt;
}

// Two tips adjacent, one of them a 3-vertex.
Step rule_hub_tip_edge(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    for (const HubFrame& fr : hub_frames(g, h.w0)) {
      if (!g.has_edge(fr.y1, fr.y3) || g.degree(fr.y1) != 3) continue;
      check_ii(g.degree(fr.y3) == 4, "hub-tip-edge: both tips are 3-vertices");
      check_ii(!(g.has_edge(fr.y1, fr.x3) && g.has_edge(fr.x1, fr.y3)),
               "hub-tip-edge: both cross chords present");
      vector<VertexId> image = {h.w0, fr.w1, fr.w3, fr.x0,
                                fr.x1, fr.x3, fr.y1, fr.y3};
      RuleOutcome out = delete_outcome(
          g, "hub-tip-edge", "", image, make_acct(8, 19, 0, 0, 4),
          {add_stage_multi(g, {{fr.y1, fr.x0, h.w0, fr.w3},
                               {fr.y1, fr.x0, h.w0, fr.w1}})});
      check_ii(count_p(out.reduced) == 0 && count_q(out.reduced) == 0,
               "hub-tip-edge: residual pattern after block removal");
      return out;
    }
  }
  return std::nullopt;
}

// Two tips adjacent and one of them also anchored to the opposite shoulder.
Step rule_hub_tip_anchor(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    for (const HubFrame& fr : hub_frames(g, h.w0)) {
      if (!g.has_edge(fr.y1, fr.y3) || !g.has_edge(fr.y3, fr.x1)) continue;
      check_ii(g.degree(fr.y1) == 4 && g.degree(fr.y3) == 4,
               "hub-tip-anchor: 3-vertex tip escaped the tip-edge rule");
      vector<VertexId> image = {h.w0, fr.w1, fr.w2, fr.w3,
                                fr.x0, fr.x1, fr.x3, fr.y3};
      RuleOutcome out = delete_outcome(g, "hub-tip-anchor", "", image,
                                       make_acct(8, 20, 0, 0, 4),
                                       {add_stage(g, {fr.x0, h.w0, fr.w1, fr.w3})});
      check_ii(count_p(out.reduced) == 0 && count_q(out.reduced) == 0,
               "hub-tip-anchor: residual pattern after block removal");
      return out;
    }
  }
  return std::nullopt;
}

// Last hub shape: two tips adjacent, nothing else. Seven vertices leave and
// the pivot neighbor is rewired to the far tip.
Step rule_hub_last(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 4)) {
    if (count_deg3(g, face) != 1) continue;
    const HubCore h = hub_core(g, face);
    const auto frames = hub_frames(g, h.w0);
    const HubFrame* sel = nullptr;
    for (const auto& fr : frames) {
      if (g.has_edge(fr.y1, fr.y3)) {
        sel = &fr;
        break;
      }
    }
    check_ii(sel != nullptr,
             "hub-last: no tip edge in any frame after the spread rule");
    HubFrame fr = *sel;
    check_ii(g.degree(fr.y1) == 4 && g.degree(fr.y3) == 4,
             "hub-last: 3-vertex tip escaped the tip-edge rule");
    check_ii(!g.has_edge(fr.x1, fr.y3) && !g.has_edge(fr.x3, fr.y1),
             "hub-last: anchored tip escaped the tip-anchor rule");
    if (g.has_edge(fr.y0, fr.y1)) {
      check_ii(!g.has_edge(fr.y0, fr.y3),
               "hub-last: third tip adjacent to both others");
      std::swap(fr.w1, fr.w3);
      std::swap(fr.x1, fr.x3);
      std::swap(fr.y1, fr.y3);
    }
    const vector<VertexId> removed = {h.w0, fr.w1, fr.w2, fr.w3,
                                      fr.x1, fr.x3, fr.y3};
    PlanarGraph reduced =
        add_edge_in_face(delete_vertices(g, removed), fr.x0, fr.y1);
    check_ii(is_triangle_free(reduced), "hub-last: rewire closed a triangle");
    check_ii(count_p(reduced) == 0, "hub-last: rewire exposed a cube");
    check_ii(count_q(reduced) == 0, "hub-last: rewire exposed a theta");
    return rewired_outcome("hub-last", "", removed, std::move(reduced),
                           make_acct(7, 19, 0, 0, 3),
                           {add_stage(g, {h.w0, fr.w1, fr.w3})});
  }
  return std::nullopt;
}

// --- pentagonal faces --------------------------------------------------------

// A 5-face with at least four 3-vertices has five, and collapses onto its
// two kept corners.
Step rule_pentaface(const PlanarGraph& g) {
  for (const auto& face : faces_of_length(g, 5)) {
    if (count_deg3(g, face) < 4) continue;
    check_ii(count_deg3(g, face) == 5,
             "pentaface: five-face with exactly four 3-vertices");
    const auto& f = face;
    std::array<VertexId, 5> x{};
    for (int i = 0; i < 5; ++i)
      x[static_cast<std::size_t>(i)] = private_neighbor(g, f[static_cast<std::size_t>(i)], f);
    for (int i = 0; i < 5; ++i)
      check_ii(g.degree(x[static_cast<std::size_t>(i)]) == 3,
               "pentaface: off-face neighbor is a 4-vertex");
    for (int i = 0; i < 5; ++i)
      for (int k = i + 1; k < 5; ++k)
        check_ii(x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(k)],
                 "pentaface: off-face neighbors not distinct");
    for (int i = 0; i < 5; ++i)
      check_ii(!g.has_edge(x[static_cast<std::size_t>(i)],
                           x[static_cast<std::size_t>((i + 1) % 5)]),
               "pentaface: consecutive off-face neighbors adjacent");
    const vector<VertexId> removed = {f[0], f[3], f[4]};
    PlanarGraph reduced = add_edge_in_face(
        add_edge_in_face(delete_vertices(g, removed), x[0], f[1]), x[3], f[2]);
    check_ii(is_triangle_free(reduced), "pentaface: rewire closed a triangle");
    check_ii(count_q(reduced) == 0, "pentaface: rewire exposed a theta");
    check_ii(count_p(reduced) == 0, "pentaface: rewire exposed a cube");
    return rewired_outcome("pentaface", "", removed, std::move(reduced),
                           make_acct(3, 5, 0, 0, 2),
                           {add_stage(g, {f[0], f[3]})});
  }
  return std::nullopt;
}

}  // namespace

void append_face_rules(std::vector<ReductionRule>& table) {
  table.push_back({"quadface-cross-pair", rule_quadface_cross_pair});
  table.push_back({"quadface-corridor", rule_quadface_corridor});
  table.push_back({"quadface-twin-anchor", rule_quadface_twin_anchor});
  table.push_back({"quadface-all-deg3", rule_quadface_all_deg3});
  table.push_back({"quadface-three-deg3", rule_quadface_three_deg3});
  table.push_back({"quadface-two-deg3", rule_quadface_two_deg3});
  table.push_back({"hub-common-neighbor", rule_hub_common_neighbor});
  table.push_back({"hub-shared-tip", rule_hub_shared_tip});
  table.push_back({"hub-spread", rule_hub_spread});
  table.push_back({"hub-tip-edge", rule_hub_tip_edge});
  table.push_back({"hub-tip-anchor", rule_hub_tip_anchor});
  table.push_back({"hub-last", rule_hub_last});
  table.push_back({"pentaface", rule_pentaface});
}

}  // namespace inforest::rules
