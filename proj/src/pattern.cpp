// Backtracking subgraph search for the cube and theta patterns.
#include "inforest/pattern.hpp"

#include <algorithm>
#include <map>

#include "inforest/errors.hpp"

namespace inforest {
namespace {

// Role order is 0,1,2,...; both patterns list their edges so that every role
// after the first is adjacent to at least one earlier role, which keeps the
// candidate sets small during backtracking.
const std::vector<std::pair<int, int>>& pattern_edges(PatternKind kind) {
  return kind == PatternKind::Cube ? cube_pattern_edges()
                                   : theta_pattern_edges();
}

int pattern_size(PatternKind kind) {
  return kind == PatternKind::Cube ? kCubeSize : kThetaSize;
}

struct PatternInfo {
  int size = 0;
  std::vector<std::vector<int>> adj;       // role -> adjacent roles
  std::vector<std::vector<int>> earlier;   // role -> adjacent roles < role
  std::vector<int> degree;                 // role -> pattern degree
};

PatternInfo build_info(PatternKind kind) {
  PatternInfo info;
  info.size = pattern_size(kind);
  info.adj.assign(info.size, {});
  for (auto [a, b] : pattern_edges(kind)) {
    info.adj[a].push_back(b);
    info.adj[b].push_back(a);
  }
  info.earlier.assign(info.size, {});
  info.degree.assign(info.size, 0);
  for (int r = 0; r < info.size; ++r) {
    info.degree[r] = static_cast<int>(info.adj[r].size());
    for (int s : info.adj[r])
      if (s < r) info.earlier[r].push_back(s);
  }
  return info;
}

// Enumerates role assignments in lexicographic order of the map vector and
// calls emit(map) for every full assignment whose pattern edges all exist in
// the host. Non-edges of the pattern are not checked here; callers relying on
// induced images check them separately or rely on host triangle-freeness.
template <typename Emit>
void enumerate_maps(const PlanarGraph& g, const PatternInfo& info,
                    Emit&& emit) {
  std::vector<VertexId> map(info.size, -1);
  std::vector<char> used(g.slot_count(), 0);
  std::vector<VertexId> all = g.vertices();  // sorted ascending

  auto feasible = [&](int role, VertexId v) {
    if (used[v]) return false;
    if (g.degree(v) < info.degree[role]) return false;
    for (int s : info.earlier[role])
      if (!g.has_edge(v, map[s])) return false;
    return true;
  };

  // Iterative backtracking over roles.
  struct Frame {
    std::vector<VertexId> cands;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.reserve(info.size);

  auto push_role = [&](int role) {
    Frame f;
    if (info.earlier[role].empty()) {
      f.cands = all;
    } else {
      f.cands = g.neighbors_sorted(map[info.earlier[role][0]]);
    }
    stack.push_back(std::move(f));
  };

  push_role(0);
  while (!stack.empty()) {
    int role = static_cast<int>(stack.size()) - 1;
    Frame& f = stack.back();
    bool advanced = false;
    while (f.next < f.cands.size()) {
      VertexId v = f.cands[f.next++];
      if (!feasible(role, v)) continue;
      map[role] = v;
      used[v] = 1;
      if (role + 1 == info.size) {
        emit(map);
        used[v] = 0;
        map[role] = -1;
        continue;
      }
      push_role(role + 1);
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        int prev = static_cast<int>(stack.size()) - 1;
        used[map[prev]] = 0;
        map[prev] = -1;
      }
    }
  }
}

std::vector<Match> find_pattern(const PlanarGraph& g, PatternKind kind,
                                int max_contact) {
  const PatternInfo info = build_info(kind);
  std::map<std::vector<VertexId>, std::vector<VertexId>> best_map_by_image;
  enumerate_maps(g, info, [&](const std::vector<VertexId>& map) {
    std::vector<VertexId> image = map;
    std::sort(image.begin(), image.end());
    auto it = best_map_by_image.find(image);
    if (it == best_map_by_image.end()) {
      best_map_by_image.emplace(std::move(image), map);
    } else if (map < it->second) {
      it->second = map;
    }
  });

  std::vector<Match> out;
  for (auto& [image, map] : best_map_by_image) {
    int contact = contact_of(g, image);
    if (contact > max_contact) continue;
    Match m;
    m.kind = kind;
    m.map = map;
    m.image = image;
    m.contact = contact;
    out.push_back(std::move(m));
  }
  return out;  // map keys were sorted, so matches are sorted by image
}

std::vector<std::array<int, 4>> compute_theta_quads() {
  // The theta pattern has five 4-cycles; its embedding is unique (suppressing
  // the two degree-2 roles gives K4, which is 3-connected), and exactly the
  // four cycles through a degree-2 role are faces. The fifth cycle, on the
  // degree-3 roles alone, separates role 4 from role 5. Enumerated once and
  // spot-checked in tests.
  std::vector<std::array<int, 4>> quads;
  const auto& edges = theta_pattern_edges();
  auto adj = [&](int a, int b) {
    for (auto [x, y] : edges)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  for (int a = 0; a < kThetaSize; ++a)
    for (int b = a + 1; b < kThetaSize; ++b) {
      if (adj(a, b)) continue;  // a,b opposite corners
      for (int c = 0; c < kThetaSize; ++c) {
        if (c == a || c == b || !adj(a, c) || !adj(b, c)) continue;
        for (int d = c + 1; d < kThetaSize; ++d) {
          if (d == a || d == b || !adj(a, d) || !adj(b, d)) continue;
          if (adj(c, d)) continue;
          if (c < a) continue;  // canonical: a is the smallest corner
          std::array<int, 4> walk = {a, c, b, d};
          bool touches_deg2 = false;
          for (int r : walk)
            if (r == 4 || r == 5) touches_deg2 = true;
          if (touches_deg2) quads.push_back(walk);
        }
      }
    }
  return quads;
}

}  // namespace

const std::vector<std::pair<int, int>>& cube_pattern_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {1, 2}, {2, 3}, {0, 3},  // top cycle
      {4, 5}, {5, 6}, {6, 7}, {4, 7},  // bottom cycle
      {0, 4}, {1, 5}, {2, 6}, {3, 7},  // spokes
  };
  return edges;
}

const std::vector<std::pair<int, int>>& theta_pattern_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {0, 5}, {3, 5},
  };
  return edges;
}

const std::vector<std::array<int, kCubeSize>>& cube_automorphisms() {
  static const std::vector<std::array<int, kCubeSize>> autos = [] {
    std::vector<std::array<int, kCubeSize>> out;
    // Host = the pattern itself as an abstract adjacency; reuse the
    // backtracking enumerator over a tiny stand-in graph.
    std::vector<std::vector<char>> adj(kCubeSize,
                                       std::vector<char>(kCubeSize, 0));
    for (auto [a, b] : cube_pattern_edges()) adj[a][b] = adj[b][a] = 1;
    std::array<int, kCubeSize> perm{};
    std::array<char, kCubeSize> used{};
    auto rec = [&](auto&& self, int role) -> void {
      if (role == kCubeSize) {
        out.push_back(perm);
        return;
      }
      for (int v = 0; v < kCubeSize; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int s = 0; s < role && ok; ++s)
          if (adj[role][s] != adj[v][perm[s]]) ok = false;
        if (!ok) continue;
        perm[role] = v;
        used[v] = 1;
        self(self, role + 1);
        used[v] = 0;
      }
    };
    rec(rec, 0);
    if (out.size() != 48)
      throw InternalInconsistency("cube automorphism count != 48");
    return out;
  }();
  return autos;
}

const std::vector<std::array<int, kThetaSize>>& theta_automorphisms() {
  static const std::vector<std::array<int, kThetaSize>> autos = [] {
    std::vector<std::array<int, kThetaSize>> out;
    std::vector<std::vector<char>> adj(kThetaSize,
                                       std::vector<char>(kThetaSize, 0));
    for (auto [a, b] : theta_pattern_edges()) adj[a][b] = adj[b][a] = 1;
    std::array<int, kThetaSize> perm{};
    std::array<char, kThetaSize> used{};
    auto rec = [&](auto&& self, int role) -> void {
      if (role == kThetaSize) {
        out.push_back(perm);
        return;
      }
      for (int v = 0; v < kThetaSize; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int s = 0; s < role && ok; ++s)
          if (adj[role][s] != adj[v][perm[s]]) ok = false;
        if (!ok) continue;
        perm[role] = v;
        used[v] = 1;
        self(self, role + 1);
        used[v] = 0;
      }
    };
    rec(rec, 0);
    if (out.size() != 8)
      throw InternalInconsistency("theta automorphism count != 8");
    return out;
  }();
  return autos;
}

const std::vector<std::array<int, 4>>& theta_quad_cycles() {
  static const std::vector<std::array<int, 4>> quads = [] {
    auto q = compute_theta_quads();
    if (q.size() != 4)
      throw InternalInconsistency("theta pattern must have four 4-cycles");
    return q;
  }();
  return quads;
}

std::vector<Match> find_cubes(const PlanarGraph& g, int max_contact) {
  return find_pattern(g, PatternKind::Cube, max_contact);
}

std::vector<Match> find_thetas(const PlanarGraph& g, int max_contact) {
  return find_pattern(g, PatternKind::Theta, max_contact);
}

int contact_of(const PlanarGraph& g, const std::vector<VertexId>& image) {
  int leaving = 0;
  for (VertexId v : image)
    for (VertexId w : g.rotation(v))
      if (!sorted_contains(image, w)) ++leaving;
  return leaving;
}

std::vector<VertexId> boundary_vertices(const PlanarGraph& g,
                                        const std::vector<VertexId>& image) {
  std::vector<VertexId> out;
  for (VertexId v : image)
    for (VertexId w : g.rotation(v))
      if (!sorted_contains(image, w)) {
        out.push_back(v);
        break;
      }
  return out;
}

int count_p(const PlanarGraph& g) {
  auto cubes = find_cubes(g, 1);
  // Low-contact cube images here never share a vertex; two overlapping ones
  // would contradict the structure the reduction relies on, so check.
  std::vector<char> seen(g.slot_count(), 0);
  for (const Match& m : cubes)
    for (VertexId v : m.image) {
      if (seen[v])
        throw InternalInconsistency(
            "low-contact cube images overlap at vertex " + std::to_string(v));
      seen[v] = 1;
    }
  return static_cast<int>(cubes.size());
}

int count_q(const PlanarGraph& g) {
  // A theta image with contact 0 is a whole component (the pattern is
  // connected), and a component isomorphic to the pattern yields exactly one
  // image.
  return static_cast<int>(find_thetas(g, 0).size());
}

}  // namespace inforest
