#include "inforest/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace inforest {

namespace {

using Rot = std::map<VertexId, std::vector<VertexId>>;

// Face walks of a partial embedding given as local rotation lists, using the
// same dart convention as the main graph class.
std::vector<std::vector<VertexId>> local_faces(const Rot& rot) {
  std::vector<std::vector<VertexId>> out;
  std::set<std::pair<VertexId, VertexId>> used;
  for (const auto& [u, nbrs] : rot) {
    for (VertexId v : nbrs) {
      if (used.count({u, v})) continue;
      std::vector<VertexId> walk;
      VertexId a = u, b = v;
      do {
        used.insert({a, b});
        walk.push_back(a);
        const auto& rb = rot.at(b);
        auto it = std::find(rb.begin(), rb.end(), a);
        VertexId next = rb[(std::distance(rb.begin(), it) + 1) % rb.size()];
        a = b;
        b = next;
      } while (!(a == u && b == v));
      out.push_back(std::move(walk));
    }
  }
  return out;
}

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId nv) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, nv);
}

// Embeds path p0..pk (k >= 1) whose endpoints lie on face `walk`; interior
// vertices are new.
void embed_path(Rot& rot, const std::vector<VertexId>& walk,
                const std::vector<VertexId>& path) {
  const int k = static_cast<int>(walk.size());
  auto prev_on_walk = [&](VertexId x) {
    for (int i = 0; i < k; ++i) {
      if (walk[i] == x) return walk[(i - 1 + k) % k];
    }
    return walk[0];  // unreachable for admissible faces
  };
  VertexId a = path.front(), b = path.back();
  insert_after(rot[a], prev_on_walk(a), path[1]);
  insert_after(rot[b], prev_on_walk(b), path[path.size() - 2]);
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    rot[path[i]] = {path[i - 1], path[i + 1]};
  }
}

// One fragment relative to the embedded subgraph: either a chord (both ends
// embedded) or a connected piece of the rest plus its attachment edges.
struct Fragment {
  std::vector<VertexId> attachments;       // embedded vertices, sorted
  std::vector<VertexId> inner;             // non-embedded vertices, sorted
  Edge chord{-1, -1};                      // valid when inner is empty
};

// Embeds one biconnected block; adjacency restricted to block edges.
// Returns false when the block is nonplanar.
bool embed_block(const std::vector<Edge>& block_edges, Rot& rot_out) {
  std::set<VertexId> verts;
  std::map<VertexId, std::vector<VertexId>> adj;
  std::set<Edge> all_edges(block_edges.begin(), block_edges.end());
  for (const Edge& e : block_edges) {
    verts.insert(e.first);
    verts.insert(e.second);
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(block_edges.size());
  if (ne > 3 * nv - 6) return false;  // planar bound

  // Initial cycle: BFS tree plus the first non-tree edge, joined at the LCA.
  std::vector<VertexId> cycle;
  {
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, int> depth;
    std::vector<VertexId> queue{*verts.begin()};
    parent[*verts.begin()] = -1;
    depth[*verts.begin()] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId v = queue[qi];
      for (VertexId w : adj[v]) {
        if (!parent.count(w)) {
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
    Edge non_tree{-1, -1};
    for (const Edge& e : all_edges) {
      if (parent[e.first] != e.second && parent[e.second] != e.first) {
        non_tree = e;
        break;
      }
    }
    if (non_tree.first < 0) return false;  // acyclic block of >1 edge: bug
    std::vector<VertexId> up_a, up_b;
    VertexId a = non_tree.first, b = non_tree.second;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up_a.push_back(a);
        a = parent[a];
      } else {
        up_b.push_back(b);
        b = parent[b];
      }
    }
    cycle = up_a;
    cycle.push_back(a);  // the meeting vertex
    cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
  }

  Rot rot;
  std::set<VertexId> embedded(cycle.begin(), cycle.end());
  std::set<Edge> embedded_edges;
  const int cl = static_cast<int>(cycle.size());
  for (int i = 0; i < cl; ++i) {
    VertexId prev = cycle[(i - 1 + cl) % cl], next = cycle[(i + 1) % cl];
    rot[cycle[i]] = {prev, next};
    embedded_edges.insert(make_edge(cycle[i], next));
  }

  while (static_cast<int>(embedded_edges.size()) < ne) {
    // Collect fragments: chords first (sorted), then components of the
    // unembedded rest (by smallest vertex).
    std::vector<Fragment> fragments;
    for (const Edge& e : all_edges) {
      if (embedded_edges.count(e)) continue;
      if (embedded.count(e.first) && embedded.count(e.second)) {
        Fragment f;
        f.attachments = {e.first, e.second};
        std::sort(f.attachments.begin(), f.attachments.end());
        f.chord = e;
        fragments.push_back(std::move(f));
      }
    }
    {
      std::set<VertexId> seen;
      for (VertexId s : verts) {
        if (embedded.count(s) || seen.count(s)) continue;
        std::vector<VertexId> comp, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
          VertexId v = stack.back();
          stack.pop_back();
          comp.push_back(v);
          for (VertexId w : adj[v]) {
            if (!embedded.count(w) && !seen.count(w)) {
              seen.insert(w);
              stack.push_back(w);
            }
          }
        }
        Fragment f;
        std::sort(comp.begin(), comp.end());
        f.inner = comp;
        std::set<VertexId> att;
        for (VertexId v : comp) {
          for (VertexId w : adj[v]) {
            if (embedded.count(w)) att.insert(w);
          }
        }
        f.attachments.assign(att.begin(), att.end());
        fragments.push_back(std::move(f));
      }
    }
    if (fragments.empty()) return false;  // edges left but no fragment: bug

    // Admissible faces per fragment.
    auto walks = local_faces(rot);
    std::vector<std::vector<int>> admissible(fragments.size());
    for (size_t fi = 0; fi < fragments.size(); ++fi) {
      for (int wi = 0; wi < static_cast<int>(walks.size()); ++wi) {
        std::set<VertexId> fv(walks[wi].begin(), walks[wi].end());
        bool all = true;
        for (VertexId a : fragments[fi].attachments) {
          if (!fv.count(a)) {
            all = false;
            break;
          }
        }
        if (all) admissible[fi].push_back(wi);
      }
      if (admissible[fi].empty()) return false;  // nonplanar
    }

    // Prefer a fragment forced into a unique face.
    size_t pick = 0;
    for (size_t fi = 0; fi < fragments.size(); ++fi) {
      if (admissible[fi].size() == 1) {
        pick = fi;
        break;
      }
    }
    const Fragment& frag = fragments[pick];
    const auto& face_walk = walks[admissible[pick][0]];

    // An alpha-path through the fragment between two attachments.
    std::vector<VertexId> path;
    if (frag.inner.empty()) {
      path = {frag.chord.first, frag.chord.second};
    } else {
      VertexId a0 = frag.attachments.front();
      // BFS inside the fragment from a0 until another attachment is reached.
      std::map<VertexId, VertexId> par;
      std::vector<VertexId> queue;
      for (VertexId w : adj[a0]) {
        if (!embedded.count(w) &&
            std::binary_search(frag.inner.begin(), frag.inner.end(), w) &&
            !par.count(w)) {
          par[w] = a0;
          queue.push_back(w);
        }
      }
      VertexId hit = -1, hit_via = -1;
      for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        VertexId v = queue[qi];
        for (VertexId w : adj[v]) {
          if (embedded.count(w)) {
            if (w != a0) {
              hit = w;
              hit_via = v;
              break;
            }
            continue;
          }
          if (!par.count(w)) {
            par[w] = v;
            queue.push_back(w);
          }
        }
      }
      if (hit < 0) return false;  // single attachment: not biconnected
      std::vector<VertexId> rev{hit, hit_via};
      VertexId x = hit_via;
      while (par[x] != a0) {
        x = par[x];
        rev.push_back(x);
      }
      rev.push_back(a0);
      path.assign(rev.rbegin(), rev.rend());
    }

    embed_path(rot, face_walk, path);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      embedded_edges.insert(make_edge(path[i], path[i + 1]));
      embedded.insert(path[i]);
    }
    embedded.insert(path.back());
  }

  rot_out = std::move(rot);
  return true;
}

// Biconnected blocks (as edge lists) via edge-stacking DFS.
std::vector<std::vector<Edge>> blocks(
    int n, const std::vector<std::vector<VertexId>>& adj) {
  std::vector<std::vector<Edge>> out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> estack;
  int timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    size_t idx;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < adj[f.v].size()) {
        VertexId w = adj[f.v][f.idx++];
        if (disc[w] == -1) {
          estack.push_back(make_edge(f.v, w));
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          estack.push_back(make_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        VertexId child = f.v;
        stack.pop_back();
        if (stack.empty()) continue;
        VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[child]);
        if (low[child] >= disc[p]) {
          // Pop one block.
          std::vector<Edge> block;
          Edge sentinel = make_edge(p, child);
          while (!estack.empty()) {
            Edge e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e == sentinel) break;
          }
          if (!block.empty()) out.push_back(std::move(block));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<VertexId>>> planar_rotations(
    int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<std::vector<VertexId>> adj(n);
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (e.first == e.second) throw InvalidInput("self-loop");
    if (!seen.insert(make_edge(e.first, e.second)).second) {
      throw InvalidInput("duplicate edge");
    }
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  std::vector<std::vector<VertexId>> rot(n);
  for (const auto& block : blocks(n, adj)) {
    if (block.size() == 1) {
      rot[block[0].first].push_back(block[0].second);
      rot[block[0].second].push_back(block[0].first);
      continue;
    }
    Rot local;
    if (!embed_block(block, local)) return std::nullopt;
    // Glue: a cut vertex's rotation is the concatenation of its per-block
    // cyclic lists (each block occupies one angular sector).
    for (auto& [v, nbrs] : local) {
      rot[v].insert(rot[v].end(), nbrs.begin(), nbrs.end());
    }
  }
  return rot;
}

PlanarGraph embed_edge_list(int n, const std::vector<Edge>& edges) {
  auto rot = planar_rotations(n, edges);
  if (!rot) throw InvalidInput("graph is not planar");
  return PlanarGraph::from_rotations(n, std::move(*rot));
}

}  // namespace inforest
