// Host graph generators.
#include "inforest/gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "inforest/embed.hpp"
#include "inforest/errors.hpp"

namespace inforest {

PlanarGraph graph_from_drawing(
    const std::vector<std::pair<double, double>>& pos,
    const std::vector<Edge>& edges) {
  int n = static_cast<int>(pos.size());
  std::vector<std::vector<VertexId>> adj(n);
  for (Edge e : edges) {
    if (e.first < 0 || e.second >= n)
      throw InvalidInput("drawing edge outside the vertex range");
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<std::vector<VertexId>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<double, VertexId>> dirs;
    for (VertexId w : adj[v]) {
      double dx = pos[w].first - pos[v].first;
      double dy = pos[w].second - pos[v].second;
      dirs.push_back({std::atan2(dy, dx), w});
    }
    std::sort(dirs.begin(), dirs.end());
    for (size_t i = 0; i + 1 < dirs.size(); ++i)
      if (dirs[i].first == dirs[i + 1].first)
        throw InvalidInput("two edges leave vertex " + std::to_string(v) +
                           " in the same direction");
    rot[v].reserve(dirs.size());
    for (auto& [angle, w] : dirs) rot[v].push_back(w);
  }
  PlanarGraph g = PlanarGraph::from_rotations(n, rot);
  validate_embedding(g);
  return g;
}

namespace {

// Nested-squares drawing of one cube, translated by (dx, 0); vertex ids
// offset by base.
void add_cube_drawing(std::vector<std::pair<double, double>>& pos,
                      std::vector<Edge>& edges, int base, double dx) {
  const double outer[4][2] = {{0, 0}, {12, 0}, {12, 12}, {0, 12}};
  const double inner[4][2] = {{4, 4}, {8, 4}, {8, 8}, {4, 8}};
  for (int i = 0; i < 4; ++i) pos.push_back({outer[i][0] + dx, outer[i][1]});
  for (int i = 0; i < 4; ++i) pos.push_back({inner[i][0] + dx, inner[i][1]});
  for (int i = 0; i < 4; ++i) {
    edges.push_back(make_edge(base + i, base + (i + 1) % 4));
    edges.push_back(make_edge(base + 4 + i, base + 4 + (i + 1) % 4));
    edges.push_back(make_edge(base + i, base + 4 + i));
  }
}

}  // namespace

PlanarGraph gen_cube() { return gen_cubes(1); }

PlanarGraph gen_cubes(int k) {
  if (k < 1) throw InvalidInput("need at least one cube");
  std::vector<std::pair<double, double>> pos;
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) add_cube_drawing(pos, edges, 8 * c, 20.0 * c);
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_theta() {
  std::vector<std::pair<double, double>> pos = {
      {-10, 0},  // 0: left degree-3 vertex
      {0, 8},    // 1: top
      {0, -8},   // 2: bottom
      {10, 0},   // 3: right degree-3 vertex
      {14, 0},   // 4: degree-2 vertex joined to top and bottom
      {0, 0},    // 5: degree-2 vertex joined to left and right
  };
  std::vector<Edge> edges;
  for (auto [a, b] : theta_pattern_edges()) edges.push_back(make_edge(a, b));
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_path(int n) {
  if (n < 1) throw InvalidInput("path needs at least one vertex");
  std::vector<std::pair<double, double>> pos;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    pos.push_back({static_cast<double>(i), 0.0});
    if (i) edges.push_back(make_edge(i - 1, i));
  }
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_cycle(int n) {
  if (n < 4) throw InvalidInput("triangle-free cycle needs at least 4 vertices");
  std::vector<std::pair<double, double>> pos;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * M_PI * i / n;
    pos.push_back({std::cos(a), std::sin(a)});
    edges.push_back(make_edge(i, (i + 1) % n));
  }
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_grid(int w, int h) {
  if (w < 1 || h < 1) throw InvalidInput("grid needs positive dimensions");
  std::vector<std::pair<double, double>> pos;
  std::vector<Edge> edges;
  auto id = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      pos.push_back({static_cast<double>(x), static_cast<double>(y)});
      if (x + 1 < w) edges.push_back(make_edge(id(x, y), id(x + 1, y)));
      if (y + 1 < h) edges.push_back(make_edge(id(x, y), id(x, y + 1)));
    }
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_hexgrid(int rings) {
  if (rings < 0) throw InvalidInput("hexgrid needs rings >= 0");
  // Corners of every unit hexagon cell within `rings` of the center cell.
  // Corner coordinates live on the lattice (x, y) = (ix/2, iy*sqrt(3)/2),
  // so integer keys (ix, iy) identify corners exactly.
  const double s3 = std::sqrt(3.0);
  std::map<std::pair<int, int>, int> corner_id;
  std::vector<std::pair<double, double>> pos;
  std::set<Edge> edges;
  auto corner = [&](double x, double y) {
    std::pair<int, int> key = {static_cast<int>(std::lround(2 * x)),
                               static_cast<int>(std::lround(2 * y / s3))};
    auto it = corner_id.find(key);
    if (it != corner_id.end()) return it->second;
    int id = static_cast<int>(pos.size());
    corner_id[key] = id;
    pos.push_back({key.first / 2.0, key.second * s3 / 2.0});
    return id;
  };
  for (int q = -rings; q <= rings; ++q)
    for (int r = -rings; r <= rings; ++r) {
      if (std::abs(q + r) > rings) continue;
      double cx = 1.5 * q, cy = s3 * (r + q / 2.0);
      int prev = -1, first = -1;
      for (int k = 0; k < 6; ++k) {
        double a = M_PI * k / 3.0;
        int c = corner(cx + std::cos(a), cy + std::sin(a));
        if (k == 0)
          first = c;
        else
          edges.insert(make_edge(prev, c));
        prev = c;
      }
      edges.insert(make_edge(prev, first));
    }
  return graph_from_drawing(pos,
                            std::vector<Edge>(edges.begin(), edges.end()));
}

PlanarGraph gen_star(int leaves) {
  if (leaves < 1) throw InvalidInput("star needs at least one leaf");
  std::vector<std::pair<double, double>> pos = {{0, 0}};
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) {
    double a = 2.0 * M_PI * i / leaves;
    pos.push_back({std::cos(a), std::sin(a)});
    edges.push_back(make_edge(0, i));
  }
  return graph_from_drawing(pos, edges);
}

PlanarGraph gen_cube_chain(int k, bool closed) {
  if (k < 2) throw InvalidInput("cube chain needs at least two cubes");
  std::vector<Edge> edges;
  std::vector<std::pair<double, double>> pos;
  for (int c = 0; c < k; ++c) add_cube_drawing(pos, edges, 8 * c, 20.0 * c);
  // Join outer-square corners of consecutive cubes: corner 1 (right side of
  // cube c) to corner 0 (left side of cube c+1).
  for (int c = 0; c + 1 < k; ++c)
    edges.push_back(make_edge(8 * c + 1, 8 * (c + 1)));
  if (closed) edges.push_back(make_edge(8 * (k - 1) + 1, 0));
  if (!closed) return graph_from_drawing(pos, edges);
  // The wrap edge does not fit the straight-line layout; fall back to the
  // incremental embedder.
  return embed_edge_list(8 * k, edges);
}

PlanarGraph gen_theta_cube_chain(int k) {
  if (k < 1) throw InvalidInput("need at least one cube after the theta");
  std::vector<Edge> edges;
  for (auto [a, b] : theta_pattern_edges()) edges.push_back(make_edge(a, b));
  for (int c = 0; c < k; ++c) {
    int base = 6 + 8 * c;
    for (auto [a, b] : cube_pattern_edges())
      edges.push_back(make_edge(base + a, base + b));
    edges.push_back(make_edge(c == 0 ? 0 : 6 + 8 * (c - 1) + 1, base));
  }
  return embed_edge_list(6 + 8 * k, edges);
}

PlanarGraph random_bipartite_planar(int n, std::uint64_t seed) {
  if (n < 4) throw InvalidInput("random host needs at least 4 vertices");
  int w = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  int h = (n + w - 1) / w;
  PlanarGraph g = gen_grid(w, h);
  std::vector<VertexId> extra;
  for (VertexId v = n; v < w * h; ++v) extra.push_back(v);
  if (!extra.empty()) g = delete_vertices(g, extra);

  std::mt19937_64 rng(seed);
  for (Edge e : g.edges())
    if (rng() % 4 == 0) g = delete_edge(g, e.first, e.second);

  std::vector<VertexId> isolated;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) isolated.push_back(v);
  if (!isolated.empty()) g = delete_vertices(g, isolated);
  return compact(g).first;
}

PlanarGraph gadget_attach(PatternKind kind, int edges_out, int tail_len,
                          std::uint64_t seed, bool distinct_anchors) {
  if (edges_out < 0 || edges_out > 5)
    throw InvalidInput("gadget supports at most 5 outgoing edges");
  if (tail_len < 1) throw InvalidInput("gadget tails need at least one vertex");
  int base = kind == PatternKind::Cube ? kCubeSize : kThetaSize;
  const auto& pedges = kind == PatternKind::Cube ? cube_pattern_edges()
                                                 : theta_pattern_edges();
  std::vector<Edge> edges;
  for (auto [a, b] : pedges) edges.push_back(make_edge(a, b));

  std::mt19937_64 rng(seed);
  std::vector<int> anchors;
  if (distinct_anchors) {
    std::vector<int> all(base);
    for (int i = 0; i < base; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    anchors.assign(all.begin(), all.begin() + edges_out);
  } else {
    for (int i = 0; i < edges_out; ++i)
      anchors.push_back(static_cast<int>(rng() % base));
  }
  int next = base;
  for (int anchor : anchors) {
    int prev = anchor;
    for (int i = 0; i < tail_len; ++i) {
      edges.push_back(make_edge(prev, next));
      prev = next++;
    }
  }
  return embed_edge_list(next, edges);
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, PlanarGraph g) {
    int n = g.n();
    if (n < 4 || n > 30)
      throw InternalInconsistency("corpus entry " + name +
                                  " has out-of-range order " +
                                  std::to_string(n));
    if (!is_triangle_free(g))
      throw InternalInconsistency("corpus entry " + name + " has a triangle");
    validate_embedding(g);
    out.push_back({std::move(name), std::move(g)});
  };

  for (int n = 4; n <= 30; ++n) add("path-" + std::to_string(n), gen_path(n));
  for (int n = 4; n <= 30; ++n)
    add("cycle-" + std::to_string(n), gen_cycle(n));
  for (int w = 2; w <= 5; ++w)
    for (int h = w; w * h <= 30; ++h)
      add("grid-" + std::to_string(w) + "x" + std::to_string(h),
          gen_grid(w, h));
  add("cube", gen_cube());
  add("cubes-2", gen_cubes(2));
  add("cubes-3", gen_cubes(3));
  add("theta", gen_theta());
  add("hexgrid-0", gen_hexgrid(0));
  add("hexgrid-1", gen_hexgrid(1));
  add("cube-chain-2", gen_cube_chain(2, false));
  add("cube-chain-3", gen_cube_chain(3, false));
  add("cube-cycle-3", gen_cube_chain(3, true));
  add("theta-cube-1", gen_theta_cube_chain(1));
  add("theta-cube-2", gen_theta_cube_chain(2));
  for (int leaves : {4, 11, 29})
    add("star-" + std::to_string(leaves), gen_star(leaves));

  for (PatternKind kind : {PatternKind::Cube, PatternKind::Theta}) {
    const char* base = kind == PatternKind::Cube ? "cube" : "theta";
    int max_out = kind == PatternKind::Cube ? 5 : 3;
    for (int eo = 1; eo <= max_out; ++eo)
      for (int tail : {1, 2})
        add(std::string("gadget-") + base + "-" + std::to_string(eo) + "-" +
                std::to_string(tail),
            gadget_attach(kind, eo, tail, 1000 + eo * 10 + tail, true));
  }

  for (int n = 8; n <= 30; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      PlanarGraph g = random_bipartite_planar(n, seed * 7919 + n);
      if (g.n() < 4) continue;  // heavy pruning on tiny hosts
      add("random-" + std::to_string(n) + "-" + std::to_string(seed),
          std::move(g));
    }

  if (out.size() < 200)
    throw InternalInconsistency("corpus too small: " +
                                std::to_string(out.size()));
  return out;
}

}  // namespace inforest
