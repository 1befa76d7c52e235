#include "inforest/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "inforest/embed.hpp"

namespace inforest {

namespace {

// Problems found by structural validation; empty means valid.
std::vector<std::string> embedding_problems(const PlanarGraph& g);

std::string id_str(VertexId v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// PlanarGraph basics

void PlanarGraph::recount() {
  n_ = 0;
  int darts = 0;
  for (int v = 0; v < slot_count(); ++v) {
    if (!alive_[v]) continue;
    ++n_;
    darts += static_cast<int>(rot_[v].size());
  }
  m_ = darts / 2;
}

PlanarGraph PlanarGraph::from_rotations(int n,
                                        std::vector<std::vector<VertexId>> rot) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (static_cast<int>(rot.size()) != n) {
    throw InvalidInput("rotation list count differs from vertex count");
  }
  PlanarGraph g;
  g.rot_ = std::move(rot);
  g.alive_.assign(n, 1);
  g.recount();
  auto problems = embedding_problems(g);
  if (!problems.empty()) throw InvalidInput(problems.front());
  return g;
}

const std::vector<VertexId>& PlanarGraph::rotation(VertexId v) const {
  if (!alive(v)) throw InvalidInput("vertex " + id_str(v) + " is not present");
  return rot_[v];
}

bool PlanarGraph::has_edge(VertexId u, VertexId v) const {
  if (!alive(u) || !alive(v)) return false;
  const auto& r = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
  VertexId other = rot_[u].size() <= rot_[v].size() ? v : u;
  return std::find(r.begin(), r.end(), other) != r.end();
}

std::vector<VertexId> PlanarGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_);
  for (int v = 0; v < slot_count(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> PlanarGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int v = 0; v < slot_count(); ++v) {
    if (!alive_[v]) continue;
    for (VertexId w : rot_[v]) {
      if (v < w) out.push_back({v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> PlanarGraph::neighbors_sorted(VertexId v) const {
  std::vector<VertexId> out = rotation(v);
  std::sort(out.begin(), out.end());
  return out;
}

VertexId PlanarGraph::min_vertex() const {
  for (int v = 0; v < slot_count(); ++v) {
    if (alive_[v]) return v;
  }
  throw InvalidInput("graph has no vertices");
}

// ---------------------------------------------------------------------------
// Faces and validation

std::vector<std::vector<VertexId>> faces(const PlanarGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::set<std::pair<VertexId, VertexId>> used;
  for (VertexId u : g.vertices()) {
    for (VertexId v : g.rotation(u)) {
      if (used.count({u, v})) continue;
      // Trace the face containing dart u->v.
      std::vector<VertexId> walk;
      VertexId a = u, b = v;
      do {
        used.insert({a, b});
        walk.push_back(a);
        const auto& rb = g.rotation(b);
        auto it = std::find(rb.begin(), rb.end(), a);
        if (it == rb.end()) {
          throw InternalInconsistency("asymmetric rotation at vertex " +
                                      id_str(b));
        }
        VertexId next = rb[(std::distance(rb.begin(), it) + 1) % rb.size()];
        a = b;
        b = next;
      } while (!(a == u && b == v));
      out.push_back(std::move(walk));
    }
  }
  return out;
}

namespace {

std::vector<std::string> embedding_problems(const PlanarGraph& g) {
  std::vector<std::string> problems;
  for (VertexId v = 0; v < g.slot_count(); ++v) {
    if (!g.alive(v)) continue;
    std::set<VertexId> seen;
    for (VertexId w : g.rotation(v)) {
      if (w == v) {
        problems.push_back("self-loop at vertex " + id_str(v));
        return problems;
      }
      if (!g.alive(w)) {
        problems.push_back("vertex " + id_str(v) + " lists dead neighbor " +
                           id_str(w));
        return problems;
      }
      if (!seen.insert(w).second) {
        problems.push_back("duplicate neighbor " + id_str(w) + " at vertex " +
                           id_str(v));
        return problems;
      }
      const auto& rw = g.rotation(w);
      if (std::count(rw.begin(), rw.end(), v) != 1) {
        problems.push_back("asymmetric adjacency between " + id_str(v) +
                           " and " + id_str(w));
        return problems;
      }
    }
  }

  // Euler's formula per connected component.
  auto comps = connected_components(g);
  std::vector<int> comp_of(g.slot_count(), -1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    for (VertexId v : comps[i]) comp_of[v] = i;
  }
  std::vector<int> face_count(comps.size(), 0);
  for (const auto& walk : faces(g)) {
    ++face_count[comp_of[walk.front()]];
  }
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    int verts = static_cast<int>(comps[i].size());
    int edges = 0;
    for (VertexId v : comps[i]) edges += g.degree(v);
    edges /= 2;
    if (edges == 0) continue;  // single vertex: nothing to check
    if (verts - edges + face_count[i] != 2) {
      problems.push_back(
          "component of vertex " + id_str(comps[i].front()) +
          " violates Euler's formula: V=" + std::to_string(verts) +
          " E=" + std::to_string(edges) + " F=" + std::to_string(face_count[i]));
      return problems;
    }
  }
  return problems;
}

}  // namespace

void validate_embedding(const PlanarGraph& g) {
  auto problems = embedding_problems(g);
  if (!problems.empty()) throw InternalInconsistency(problems.front());
}

bool is_triangle_free(const PlanarGraph& g) {
  for (const Edge& e : g.edges()) {
    if (!common_neighbors(g, e.first, e.second).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connectivity

std::vector<std::vector<VertexId>> connected_components(const PlanarGraph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(g.slot_count(), 0);
  for (VertexId s = 0; s < g.slot_count(); ++s) {
    if (!g.alive(s) || seen[s]) continue;
    std::vector<VertexId> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.rotation(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const PlanarGraph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<Edge> bridges(const PlanarGraph& g) {
  // Iterative lowlink DFS.
  std::vector<Edge> out;
  const int cap = g.slot_count();
  std::vector<int> disc(cap, -1), low(cap, 0), parent(cap, -1);
  int timer = 0;
  for (VertexId root = 0; root < cap; ++root) {
    if (!g.alive(root) || disc[root] != -1) continue;
    struct Frame {
      VertexId v;
      size_t next_idx;
    };
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& rot = g.rotation(f.v);
      if (f.next_idx < rot.size()) {
        VertexId w = rot[f.next_idx++];
        if (disc[w] == -1) {
          parent[w] = f.v;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[f.v]);
          if (low[f.v] > disc[p]) out.push_back(make_edge(p, f.v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Mutations

PlanarGraph delete_vertices(const PlanarGraph& g,
                            const std::vector<VertexId>& verts) {
  PlanarGraph out = g;
  for (VertexId v : verts) {
    if (!out.alive(v)) {
      throw InternalInconsistency("deleting vertex " + id_str(v) +
                                  " which is not present");
    }
    out.alive_[v] = 0;
  }
  for (int v = 0; v < out.slot_count(); ++v) {
    if (!out.alive_[v]) {
      out.rot_[v].clear();
      continue;
    }
    auto& r = out.rot_[v];
    r.erase(std::remove_if(r.begin(), r.end(),
                           [&](VertexId w) { return !out.alive_[w]; }),
            r.end());
  }
  out.recount();
  validate_embedding(out);
  return out;
}

PlanarGraph delete_edge(const PlanarGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) {
    throw InternalInconsistency("deleting absent edge " + id_str(u) + "-" +
                                id_str(v));
  }
  PlanarGraph out = g;
  auto& ru = out.rot_[u];
  ru.erase(std::find(ru.begin(), ru.end(), v));
  auto& rv = out.rot_[v];
  rv.erase(std::find(rv.begin(), rv.end(), u));
  out.recount();
  validate_embedding(out);
  return out;
}

std::pair<PlanarGraph, VertexId> contract_edge(const PlanarGraph& g,
                                               VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) {
    throw InternalInconsistency("contracting absent edge " + id_str(u) + "-" +
                                id_str(v));
  }
  PlanarGraph out = g;
  const VertexId w = out.slot_count();

  // Merged rotation: u's other neighbors starting after v, then v's other
  // neighbors starting after u. This is the standard embedded contraction.
  auto part = [](const std::vector<VertexId>& r, VertexId skip) {
    auto it = std::find(r.begin(), r.end(), skip);
    std::vector<VertexId> out2;
    const int k = static_cast<int>(r.size());
    int start = static_cast<int>(std::distance(r.begin(), it));
    for (int i = 1; i < k; ++i) out2.push_back(r[(start + i) % k]);
    return out2;
  };
  std::vector<VertexId> from_u = part(g.rotation(u), v);
  std::vector<VertexId> from_v = part(g.rotation(v), u);

  std::vector<VertexId> merged = from_u;
  merged.insert(merged.end(), from_v.begin(), from_v.end());

  // Rename darts at the neighbors. A common neighbor x of u and v would now
  // have two parallel edges to w; we keep the copy inherited from u and drop
  // the copy inherited from v (both from x's rotation and from merged).
  std::set<VertexId> seen_from_u(from_u.begin(), from_u.end());
  for (VertexId x : from_u) {
    auto& rx = out.rot_[x];
    *std::find(rx.begin(), rx.end(), u) = w;
  }
  std::vector<VertexId> final_rot = from_u;
  for (VertexId x : from_v) {
    auto& rx = out.rot_[x];
    auto it = std::find(rx.begin(), rx.end(), v);
    if (seen_from_u.count(x)) {
      rx.erase(it);  // drop the parallel copy
    } else {
      *it = w;
      final_rot.push_back(x);
    }
  }

  out.alive_[u] = 0;
  out.alive_[v] = 0;
  out.rot_[u].clear();
  out.rot_[v].clear();
  out.rot_.push_back(std::move(final_rot));
  out.alive_.push_back(1);
  out.recount();
  validate_embedding(out);
  return {out, w};
}

namespace {

// Finds the first face (in faces() order) whose vertex walk contains all of
// `needles`; returns its walk, or nullopt.
std::optional<std::vector<VertexId>> face_containing(
    const PlanarGraph& g, const std::vector<VertexId>& needles) {
  for (const auto& walk : faces(g)) {
    bool all = true;
    for (VertexId x : needles) {
      if (std::find(walk.begin(), walk.end(), x) == walk.end()) {
        all = false;
        break;
      }
    }
    if (all) return walk;
  }
  return std::nullopt;
}

// Splices `nv` into rot[at] right after the first occurrence of `after`.
void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId nv) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, nv);
}

}  // namespace

PlanarGraph add_edge_in_face(const PlanarGraph& g, VertexId u, VertexId v) {
  if (u == v) throw InternalInconsistency("edge endpoints coincide");
  if (g.has_edge(u, v)) {
    throw InternalInconsistency("edge " + id_str(u) + "-" + id_str(v) +
                                " already present");
  }
  auto walk = face_containing(g, {u, v});
  if (!walk) {
    throw InternalInconsistency("vertices " + id_str(u) + " and " + id_str(v) +
                                " share no face; cannot add edge");
  }
  const auto& wv = *walk;
  const int k = static_cast<int>(wv.size());
  auto prev_on_walk = [&](VertexId x) {
    for (int i = 0; i < k; ++i) {
      if (wv[i] == x) return wv[(i - 1 + k) % k];
    }
    throw InternalInconsistency("vertex not on face walk");
  };
  PlanarGraph out = g;
  insert_after(out.rot_[u], prev_on_walk(u), v);
  insert_after(out.rot_[v], prev_on_walk(v), u);
  out.recount();
  validate_embedding(out);
  return out;
}

PlanarGraph attach_existing_in_face(const PlanarGraph& g, VertexId v,
                                    const std::vector<VertexId>& anchors) {
  if (!g.alive(v) || g.degree(v) != 0) {
    throw InternalInconsistency("attach target must be an isolated vertex");
  }
  if (anchors.empty()) throw InternalInconsistency("no anchors to attach to");
  auto walk = face_containing(g, anchors);
  if (!walk) {
    throw InternalInconsistency("anchors share no face; cannot attach");
  }
  // Pendant edge to the first anchor, placed at that anchor's corner on the
  // common face; the face is not split by a pendant, so later anchors stay
  // reachable via add_edge_in_face.
  PlanarGraph out = g;
  const auto& wv = *walk;
  const int k = static_cast<int>(wv.size());
  VertexId a0 = anchors[0];
  VertexId prev = 0;
  for (int i = 0; i < k; ++i) {
    if (wv[i] == a0) {
      prev = wv[(i - 1 + k) % k];
      break;
    }
  }
  insert_after(out.rot_[a0], prev, v);
  out.rot_[v] = {a0};
  out.recount();
  validate_embedding(out);
  for (size_t i = 1; i < anchors.size(); ++i) {
    out = add_edge_in_face(out, v, anchors[i]);
  }
  return out;
}

std::pair<PlanarGraph, VertexId> attach_vertex_in_face(
    const PlanarGraph& g, const std::vector<VertexId>& anchors) {
  PlanarGraph out = g;
  const VertexId v = out.slot_count();
  out.rot_.emplace_back();
  out.alive_.push_back(1);
  out.recount();
  return {attach_existing_in_face(out, v, anchors), v};
}

// ---------------------------------------------------------------------------
// Cycle classification

int CycleClass::side_of_edge(Edge e) const {
  for (const auto& [edge, s] : edge_side) {
    if (edge == e) return s;
  }
  throw InternalInconsistency("edge has no recorded side");
}

int CycleClass::side_of_vertex(VertexId v) const {
  for (int s = 0; s < 2; ++s) {
    if (sorted_contains(side[s], v)) return s;
  }
  throw InternalInconsistency("vertex " + id_str(v) + " has no recorded side");
}

CycleClass classify_cycle(const PlanarGraph& g,
                          const std::vector<VertexId>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw InternalInconsistency("cycle too short to classify");
  if (!is_connected(g)) {
    throw InternalInconsistency("cycle classification requires a connected graph");
  }
  std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
  if (static_cast<int>(on_cycle.size()) != k) {
    throw InternalInconsistency("cycle walk repeats a vertex");
  }
  std::set<Edge> cycle_edges;
  for (int i = 0; i < k; ++i) {
    VertexId a = cycle[i], b = cycle[(i + 1) % k];
    if (!g.has_edge(a, b)) {
      throw InternalInconsistency("cycle edge " + id_str(a) + "-" + id_str(b) +
                                  " missing");
    }
    cycle_edges.insert(make_edge(a, b));
  }
  // Chordless precondition (always true for 4/5-cycles in triangle-free
  // graphs, but cheap to enforce).
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) {
        throw InternalInconsistency("cycle has a chord; classification undefined");
      }
    }
  }

  // Face ids per dart, then union faces across every non-cycle edge.
  auto walks = faces(g);
  std::map<std::pair<VertexId, VertexId>, int> face_of;
  for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
    const auto& w = walks[f];
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i) {
      face_of[{w[i], w[(i + 1) % len]}] = f;
    }
  }
  std::vector<int> uf(walks.size());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (cycle_edges.count(e)) continue;
    int fa = find(face_of.at({e.first, e.second}));
    int fb = find(face_of.at({e.second, e.first}));
    uf[fa] = fb;
  }

  // The two regions are the classes on either side of any cycle dart.
  int r0 = find(face_of.at({cycle[0], cycle[1]}));
  int r1 = find(face_of.at({cycle[1], cycle[0]}));
  if (r0 == r1) {
    throw InternalInconsistency("cycle does not separate its two sides");
  }
  for (const Edge& e : cycle_edges) {
    int fa = find(face_of.at({e.first, e.second}));
    int fb = find(face_of.at({e.second, e.first}));
    if (!((fa == r0 && fb == r1) || (fa == r1 && fb == r0))) {
      throw InternalInconsistency("cycle edge borders unexpected regions");
    }
  }

  CycleClass out;
  for (VertexId v : g.vertices()) {
    if (on_cycle.count(v)) continue;
    if (g.degree(v) == 0) {
      throw InternalInconsistency("isolated vertex in connected graph");
    }
    int r = find(face_of.at({v, g.rotation(v).front()}));
    if (r == r0) {
      out.side[0].push_back(v);
    } else if (r == r1) {
      out.side[1].push_back(v);
    } else {
      throw InternalInconsistency("vertex region is neither side of the cycle");
    }
  }
  for (const Edge& e : g.edges()) {
    if (cycle_edges.count(e)) continue;
    bool touches = on_cycle.count(e.first) || on_cycle.count(e.second);
    if (!touches) continue;
    int r = find(face_of.at({e.first, e.second}));
    out.edge_side.push_back({e, r == r0 ? 0 : 1});
  }
  out.separating = !out.side[0].empty() && !out.side[1].empty();
  return out;
}

std::vector<std::vector<VertexId>> four_cycles(const PlanarGraph& g) {
  std::vector<std::vector<VertexId>> out;
  for (VertexId a : g.vertices()) {
    auto na = g.neighbors_sorted(a);
    for (size_t i = 0; i < na.size(); ++i) {
      for (size_t j = i + 1; j < na.size(); ++j) {
        VertexId u = na[i], w = na[j];
        if (u < a || w < a) continue;
        for (VertexId c : common_neighbors(g, u, w)) {
          if (c <= a) continue;
          out.push_back({a, u, c, w});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> faces_of_length(const PlanarGraph& g,
                                                   int len) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& walk : faces(g)) {
    if (static_cast<int>(walk.size()) != len) continue;
    std::set<VertexId> distinct(walk.begin(), walk.end());
    if (static_cast<int>(distinct.size()) != len) continue;
    // Canonical form: rotate to the smallest vertex, run toward its smaller
    // neighbor on the cycle.
    int k = len;
    int pos = static_cast<int>(std::distance(
        walk.begin(), std::min_element(walk.begin(), walk.end())));
    std::vector<VertexId> fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) {
      fwd[i] = walk[(pos + i) % k];
      bwd[i] = walk[(pos - i + 2 * k) % k];
    }
    out.push_back(fwd[1] <= bwd[1] ? fwd : bwd);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hashing, io

std::uint64_t graph_hash(const PlanarGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (i * 8)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  mix(static_cast<std::uint64_t>(g.m()));
  for (VertexId v : g.vertices()) {
    mix(0x55AA55AA55AA55AAULL);
    mix(static_cast<std::uint64_t>(v));
    const auto& r = g.rotation(v);
    if (r.empty()) continue;
    // Canonical start of the cyclic order: the smallest neighbor.
    int k = static_cast<int>(r.size());
    int start = static_cast<int>(std::distance(
        r.begin(), std::min_element(r.begin(), r.end())));
    for (int i = 0; i < k; ++i) {
      mix(static_cast<std::uint64_t>(r[(start + i) % k]));
    }
  }
  return h;
}

std::pair<PlanarGraph, std::vector<VertexId>> compact(const PlanarGraph& g) {
  std::vector<VertexId> new_to_old = g.vertices();
  std::vector<int> old_to_new(g.slot_count(), -1);
  for (int i = 0; i < static_cast<int>(new_to_old.size()); ++i) {
    old_to_new[new_to_old[i]] = i;
  }
  std::vector<std::vector<VertexId>> rot(new_to_old.size());
  for (int i = 0; i < static_cast<int>(new_to_old.size()); ++i) {
    for (VertexId w : g.rotation(new_to_old[i])) {
      rot[i].push_back(old_to_new[w]);
    }
  }
  return {PlanarGraph::from_rotations(static_cast<int>(new_to_old.size()),
                                      std::move(rot)),
          std::move(new_to_old)};
}

PlanarGraph parse_graph(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      auto hash_pos = out_line.find('#');
      if (hash_pos != std::string::npos) out_line.resize(hash_pos);
      bool blank = out_line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) return true;
    }
    return false;
  };
  if (!next_content_line(line)) throw InvalidInput("empty graph file");
  std::istringstream head(line);
  long long n = 0, m = 0;
  if (!(head >> n >> m) || n < 0 || m < 0 || n > 1000000 || m > 3 * n) {
    throw InvalidInput("bad header line '" + line + "'");
  }
  std::vector<Edge> edge_list;
  std::set<Edge> edge_set;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(line)) throw InvalidInput("missing edge lines");
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw InvalidInput("bad edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge endpoint out of range in '" + line + "'");
    }
    if (u == v) throw InvalidInput("self-loop in '" + line + "'");
    Edge e = make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!edge_set.insert(e).second) {
      throw InvalidInput("duplicate edge in '" + line + "'");
    }
    edge_list.push_back(e);
  }

  // Optional rotation lines.
  std::vector<std::vector<VertexId>> rot(n);
  bool any_rot = false;
  std::set<VertexId> rot_seen;
  while (next_content_line(line)) {
    std::istringstream rs(line);
    std::string tag;
    rs >> tag;
    if (tag != "rot") throw InvalidInput("unexpected line '" + line + "'");
    std::string vtok;
    rs >> vtok;
    if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
    long long v = -1;
    try {
      v = std::stoll(vtok);
    } catch (...) {
      throw InvalidInput("bad rotation line '" + line + "'");
    }
    if (v < 0 || v >= n) throw InvalidInput("rotation vertex out of range");
    if (!rot_seen.insert(static_cast<VertexId>(v)).second) {
      throw InvalidInput("duplicate rotation line for vertex " +
                         std::to_string(v));
    }
    any_rot = true;
    long long w;
    // Tolerate a separate ":" token.
    std::string rest((std::istreambuf_iterator<char>(rs)), {});
    std::replace(rest.begin(), rest.end(), ':', ' ');
    std::istringstream ws(rest);
    while (ws >> w) {
      if (w < 0 || w >= n) throw InvalidInput("rotation neighbor out of range");
      rot[v].push_back(static_cast<VertexId>(w));
    }
  }

  if (!any_rot) {
    return embed_edge_list(static_cast<int>(n), edge_list);
  }

  // Rotations must reproduce the edge multiset exactly.
  std::set<Edge> from_rot;
  long long darts = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rot[v]) {
      from_rot.insert(make_edge(v, w));
      ++darts;
    }
  }
  if (darts != 2 * m || from_rot != edge_set) {
    throw InvalidInput("rotation lines disagree with the edge list");
  }
  return PlanarGraph::from_rotations(static_cast<int>(n), std::move(rot));
}

void write_graph(const PlanarGraph& g, std::ostream& out) {
  // The format is dense-id; compact() first when ids have holes.
  for (int v = 0; v < g.slot_count(); ++v) {
    if (!g.alive(v)) {
      throw InvalidInput("write_graph requires dense vertex ids; compact() first");
    }
  }
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    out << "rot " << v << ':';
    for (VertexId w : g.rotation(v)) out << ' ' << w;
    out << '\n';
  }
}

PlanarGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph_file(const PlanarGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  write_graph(g, out);
}

// ---------------------------------------------------------------------------
// Helpers

bool sorted_contains(const std::vector<VertexId>& sorted_vec, VertexId v) {
  return std::binary_search(sorted_vec.begin(), sorted_vec.end(), v);
}

std::vector<VertexId> sorted_union(const std::vector<VertexId>& a,
                                   const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<VertexId> common_neighbors(const PlanarGraph& g, VertexId u,
                                       VertexId v) {
  auto nu = g.neighbors_sorted(u);
  auto nv = g.neighbors_sorted(v);
  std::vector<VertexId> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace inforest
