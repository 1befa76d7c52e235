// Forest checks and the pattern-extension lemmas.
//
// The extension routines follow fixed constructive recipes: relabel the
// occurrence through a pattern automorphism chosen by an explicit criterion,
// then add a case-determined subset of image vertices. Every candidate is
// validated against the host before being returned, so a recipe bug surfaces
// as LiftFailed with the offending occurrence, never as a silently wrong
// forest.
#include "inforest/extend.hpp"

#include <algorithm>
#include <numeric>

#include "inforest/errors.hpp"

namespace inforest {

namespace {

std::vector<VertexId> checked_sorted(const PlanarGraph& g,
                                     const std::vector<VertexId>& verts) {
  std::vector<VertexId> vs = verts;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InvalidInput("vertex set contains duplicates");
  for (VertexId v : vs)
    if (v < 0 || v >= g.slot_count() || !g.alive(v))
      throw InvalidInput("vertex set mentions a vertex not in the graph");
  return vs;
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when x and y were already connected.
  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

bool is_induced_forest(const PlanarGraph& g,
                       const std::vector<VertexId>& verts) {
  std::vector<VertexId> vs = checked_sorted(g, verts);
  DSU dsu(g.slot_count());
  for (VertexId v : vs)
    for (VertexId w : g.rotation(v)) {
      if (w <= v) continue;  // each induced edge once
      if (!sorted_contains(vs, w)) continue;
      if (!dsu.merge(v, w)) return false;
    }
  return true;
}

bool is_induced_forest_alt(const PlanarGraph& g,
                           const std::vector<VertexId>& verts) {
  std::vector<VertexId> vs = checked_sorted(g, verts);
  // DFS over the induced subgraph; any non-parent edge to a visited vertex
  // closes a cycle.
  std::vector<char> in_set(g.slot_count(), 0), visited(g.slot_count(), 0);
  for (VertexId v : vs) in_set[v] = 1;
  for (VertexId root : vs) {
    if (visited[root]) continue;
    std::vector<std::pair<VertexId, VertexId>> stack = {{root, -1}};
    visited[root] = 1;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      for (VertexId w : g.rotation(v)) {
        if (!in_set[w] || w == parent) continue;
        if (visited[w]) return false;
        visited[w] = 1;
        stack.push_back({w, v});
      }
    }
  }
  return true;
}

namespace {

int external_edges(const PlanarGraph& g, VertexId v, int pattern_degree) {
  return g.degree(v) - pattern_degree;
}

// Validates `forest + picked-image-vertices` and returns the union on
// success.
bool try_candidate(const PlanarGraph& g, const std::vector<VertexId>& forest,
                   const std::vector<VertexId>& picked,
                   std::vector<VertexId>& out) {
  std::vector<VertexId> candidate = forest;
  candidate.insert(candidate.end(), picked.begin(), picked.end());
  if (!is_induced_forest(g, candidate)) return false;
  std::sort(candidate.begin(), candidate.end());
  out = std::move(candidate);
  return true;
}

void check_forest_avoids_image(const PlanarGraph& g, const Match& m,
                               const std::vector<VertexId>& forest) {
  std::vector<VertexId> vs = checked_sorted(g, forest);
  for (VertexId v : m.image)
    if (sorted_contains(vs, v))
      throw InvalidInput("forest overlaps the occurrence being lifted");
}

std::vector<VertexId> pick_roles(const std::vector<VertexId>& map,
                                 std::initializer_list<int> roles) {
  std::vector<VertexId> out;
  for (int r : roles) out.push_back(map[r]);
  return out;
}

}  // namespace

std::vector<VertexId> extend_cube_low_contact(
    const PlanarGraph& g, const Match& cube,
    const std::vector<VertexId>& forest) {
  if (cube.kind != PatternKind::Cube)
    throw InvalidInput("cube extension given a non-cube occurrence");
  if (cube.contact > 3)
    throw InvalidInput("cube extension requires contact <= 3, got " +
                       std::to_string(cube.contact));
  check_forest_avoids_image(g, cube, forest);

  // The trio of image vertices with the most edges to the rest of the host
  // (ties to the smaller id) covers every vertex that touches the outside.
  std::vector<VertexId> trio = cube.image;
  std::stable_sort(trio.begin(), trio.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  trio.resize(3);

  auto edge = [&](VertexId a, VertexId b) { return g.has_edge(a, b); };
  int internal = edge(trio[0], trio[1]) + edge(trio[0], trio[2]) +
                 edge(trio[1], trio[2]);

  // For two internal edges, order the trio as end-mid-end. The kept end must
  // be safe (host degree <= 4, so at most one outside edge); with at most
  // three outside edges in total the two ends cannot both be unsafe.
  VertexId t_end1 = -1, t_mid = -1, t_end2 = -1;
  VertexId p_a = -1, p_b = -1, p_c = -1;  // one internal edge: a-b plus c
  if (internal == 2) {
    for (int i = 0; i < 3; ++i) {
      VertexId m = trio[i], x = trio[(i + 1) % 3], y = trio[(i + 2) % 3];
      if (edge(m, x) && edge(m, y)) {
        t_mid = m;
        t_end1 = std::min(x, y);
        t_end2 = std::max(x, y);
      }
    }
    bool ok1 = g.degree(t_end1) <= 4, ok2 = g.degree(t_end2) <= 4;
    if (!ok1 && ok2) std::swap(t_end1, t_end2);
    // otherwise keep the id order (both ends qualify and both orders are
    // tried below, or neither does and every candidate fails validation and
    // raises LiftFailed).
  } else if (internal == 1) {
    for (int i = 0; i < 3; ++i) {
      VertexId c = trio[i], x = trio[(i + 1) % 3], y = trio[(i + 2) % 3];
      if (!edge(c, x) && !edge(c, y)) {
        p_c = c;
        p_a = std::min(x, y);
        p_b = std::max(x, y);
      }
    }
    if (p_c < 0)
      throw InternalInconsistency("trio with one edge has no isolated vertex");
  }

  std::vector<VertexId> result;
  std::vector<VertexId> m2(kCubeSize);
  for (const auto& sigma : cube_automorphisms()) {
    for (int r = 0; r < kCubeSize; ++r) m2[r] = cube.map[sigma[r]];
    switch (internal) {
      case 0: {
        // Trio at roles {0,2,5}: complement {1,3,4,6,7} induces a star plus
        // an isolated vertex.
        std::array<VertexId, 3> got = {m2[0], m2[2], m2[5]};
        std::sort(got.begin(), got.end());
        std::array<VertexId, 3> want = {trio[0], trio[1], trio[2]};
        std::sort(want.begin(), want.end());
        if (got != want) continue;
        if (try_candidate(g, forest, pick_roles(m2, {1, 3, 4, 6, 7}), result))
          return result;
        break;
      }
      case 1: {
        // Edge pair at roles {0,1}, isolated vertex at role 6; complement
        // {2,3,4,5,7} induces a path.
        if (m2[6] != p_c) continue;
        if (!((m2[0] == p_a && m2[1] == p_b) ||
              (m2[0] == p_b && m2[1] == p_a)))
          continue;
        if (try_candidate(g, forest, pick_roles(m2, {2, 3, 4, 5, 7}), result))
          return result;
        break;
      }
      case 2: {
        // Path at roles 0-1-2 with a safe end at role 0; the added set
        // {0,3,4,5,6} keeps that end and drops the rest of the trio. Both
        // end orders are accepted so a second safe end is still tried if
        // validation rejects the preferred one.
        if (m2[1] != t_mid) continue;
        bool straight = m2[0] == t_end1 && m2[2] == t_end2;
        bool flipped = m2[0] == t_end2 && m2[2] == t_end1;
        if (!straight && !flipped) continue;
        if (g.degree(m2[0]) > 4) continue;
        if (try_candidate(g, forest, pick_roles(m2, {0, 3, 4, 5, 6}), result))
          return result;
        break;
      }
      default:
        throw InternalInconsistency("trio spans a triangle in the host");
    }
  }
  throw LiftFailed("no valid 5-vertex extension of a low-contact cube image");
}

std::vector<VertexId> extend_theta(const PlanarGraph& g, const Match& theta,
                                   const std::vector<VertexId>& forest) {
  if (theta.kind != PatternKind::Theta)
    throw InvalidInput("theta extension given a non-theta occurrence");
  if (theta.contact > 3)
    throw InvalidInput("theta extension requires contact <= 3, got " +
                       std::to_string(theta.contact));
  check_forest_avoids_image(g, theta, forest);

  const std::array<int, kThetaSize> pdeg = {3, 3, 3, 3, 2, 2};

  // Prefer relabelings that put as many outside edges as possible on the
  // face 0-1-4-2; the case ladder below is tuned to that placement.
  struct Cand {
    std::vector<VertexId> m2;
    int face_outside;
  };
  std::vector<Cand> cands;
  for (const auto& sigma : theta_automorphisms()) {
    Cand c;
    c.m2.resize(kThetaSize);
    for (int r = 0; r < kThetaSize; ++r) c.m2[r] = theta.map[sigma[r]];
    c.face_outside = 0;
    for (int r : {0, 1, 4, 2})
      c.face_outside += external_edges(g, c.m2[r], pdeg[r]);
    cands.push_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) {
                     return a.face_outside > b.face_outside;
                   });

  std::vector<VertexId> result;
  for (const Cand& c : cands) {
    const std::vector<VertexId>& m2 = c.m2;
    std::array<int, kThetaSize> ext{};
    for (int r = 0; r < kThetaSize; ++r)
      ext[r] = external_edges(g, m2[r], pdeg[r]);
    auto between = [&](int r) { return ext[r] > 0; };

    std::vector<int> picked_roles;
    int heavy = -1;  // role with two or more outside edges
    for (int r = 0; r < kThetaSize; ++r)
      if (ext[r] >= 2) heavy = heavy < 0 ? r : heavy;
    const std::array<int, 4> X = {0, 5, 3, 4};      // star at 5 plus lone 4
    const std::array<int, 4> Y = {1, 3, 5, 2};      // star at 3
    if (heavy >= 0) {
      bool heavy_in_X =
          std::find(X.begin(), X.end(), heavy) != X.end();
      picked_roles.assign(heavy_in_X ? Y.begin() : X.begin(),
                          heavy_in_X ? Y.end() : X.end());
    } else {
      int between_in_X = 0;
      for (int r : X) between_in_X += between(r);
      if (between_in_X <= 1) {
        picked_roles.assign(X.begin(), X.end());
      } else {
        if (between(1) && between(2)) continue;  // contact would exceed 3
        int x = between(1) ? 2 : 1;
        if (!between(3) && !between(5)) {
          picked_roles.assign(Y.begin(), Y.end());
        } else if (between(3) && between(5)) {
          continue;  // another relabeling moves these onto the face
        } else {
          int y = between(3) ? 5 : 3;
          if (between(0) && between(4)) {
            picked_roles.assign(Y.begin(), Y.end());
          } else if (between(0)) {
            picked_roles = {4, 3, 5, x};
          } else if (between(4)) {
            picked_roles = {0, x, y, 4};
          } else {
            continue;  // two in X but none of 0,3,4,5: impossible
          }
        }
      }
    }

    std::vector<VertexId> picked;
    for (int r : picked_roles) picked.push_back(m2[r]);
    if (try_candidate(g, forest, picked, result)) return result;
  }
  throw LiftFailed("no valid 4-vertex extension of a theta image");
}

std::vector<VertexId> extend_cube_maxdeg4(const PlanarGraph& g,
                                          const Match& cube,
                                          const std::vector<VertexId>& forest) {
  if (cube.kind != PatternKind::Cube)
    throw InvalidInput("cube extension given a non-cube occurrence");
  if (cube.contact > 5)
    throw InvalidInput(
        "degree-bounded cube extension requires contact <= 5, got " +
        std::to_string(cube.contact));
  for (VertexId v : cube.image)
    if (g.degree(v) > 4)
      throw InvalidInput(
          "degree-bounded cube extension requires host degrees <= 4");
  check_forest_avoids_image(g, cube, forest);

  // Sort relabelings by the number of degree-3 vertices on the face 0-1-2-3;
  // every cube face is that face under some relabeling, so the best
  // placement over all faces comes first.
  struct Cand {
    std::vector<VertexId> m2;
    int threes_on_top;
  };
  std::vector<Cand> cands;
  for (const auto& sigma : cube_automorphisms()) {
    Cand c;
    c.m2.resize(kCubeSize);
    for (int r = 0; r < kCubeSize; ++r) c.m2[r] = cube.map[sigma[r]];
    c.threes_on_top = 0;
    for (int r : {0, 1, 2, 3})
      if (g.degree(c.m2[r]) == 3) ++c.threes_on_top;
    cands.push_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) {
                     return a.threes_on_top > b.threes_on_top;
                   });
  const int max_threes = cands.front().threes_on_top;
  if (max_threes <= 1)
    throw InternalInconsistency(
        "cube image within degree bounds must show two degree-3 vertices on "
        "some face");

  std::vector<VertexId> result;
  for (const Cand& c : cands) {
    if (c.threes_on_top != max_threes) break;  // only maximal placements
    const std::vector<VertexId>& m2 = c.m2;
    auto is3 = [&](int r) { return g.degree(m2[r]) == 3; };

    if (max_threes >= 3) {
      if (!(is3(0) && is3(1) && is3(2))) continue;
      if (try_candidate(g, forest, pick_roles(m2, {0, 1, 2, 5, 7}), result))
        return result;
    } else if (is3(0) && is3(1)) {
      // Two adjacent low-degree vertices on the face. The side faces force
      // roles 4 and 5 to degree 4, so the remaining low-degree vertex sits
      // at role 6 or 7.
      for (int star : {6, 7}) {
        if (!is3(star) && (is3(6) || is3(7))) continue;
        if (try_candidate(g, forest, pick_roles(m2, {5, 0, 1, 3, star}),
                          result))
          return result;
      }
    } else if (is3(0) && is3(2)) {
      // Two opposite low-degree vertices: add the independent set
      // {0,2,5,7} plus one face neighbor chosen away from the remaining
      // outside edges.
      std::vector<int> stars;
      if (g.degree(m2[7]) == 4)
        stars = {1, 3};
      else if (g.degree(m2[5]) == 4)
        stars = {3, 1};
      else
        stars = {1, 3};
      for (int star : stars)
        if (try_candidate(g, forest, pick_roles(m2, {0, 2, 5, 7, star}),
                          result))
          return result;
    }
  }
  throw LiftFailed(
      "no valid 5-vertex extension of a degree-bounded cube image");
}

}  // namespace inforest
