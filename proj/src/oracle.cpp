// Branch-and-bound and brute-force maximum induced forest.
#include "inforest/oracle.hpp"

#include <algorithm>

#include "inforest/errors.hpp"
#include "inforest/extend.hpp"

namespace inforest {
namespace {

// Finds any cycle in the subgraph induced by `present` (1-flags indexed by
// vertex id); returns its vertices, or empty when the subgraph is a forest.
std::vector<VertexId> find_cycle(const PlanarGraph& g,
                                 const std::vector<char>& present) {
  int slots = g.slot_count();
  std::vector<VertexId> parent(slots, -2);
  std::vector<char> done(slots, 0);
  for (VertexId root = 0; root < slots; ++root) {
    if (!present[root] || !g.alive(root) || parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<VertexId> stack = {root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      if (done[v]) {
        stack.pop_back();
        continue;
      }
      done[v] = 1;
      for (VertexId w : g.rotation(v)) {
        if (!present[w] || w == parent[v]) continue;
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        } else {
          // w already discovered: the edge v-w plus the two discovery-tree
          // paths from v and w down to their meeting point close a cycle,
          // and tree paths are real edge paths, so the loop is genuine.
          std::vector<VertexId> va = {v}, wa = {w};
          auto climb = [&](std::vector<VertexId>& path) {
            while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
          };
          climb(va);
          climb(wa);
          // Trim the shared tail.
          while (va.size() > 1 && wa.size() > 1 &&
                 va[va.size() - 2] == wa[wa.size() - 2]) {
            va.pop_back();
            wa.pop_back();
          }
          std::vector<VertexId> cycle(va.begin(), va.end());
          for (auto it = wa.rbegin(); it != wa.rend(); ++it)
            if (*it != va.back()) cycle.push_back(*it);
          return cycle;
        }
      }
    }
  }
  return {};
}

// Greedy vertex-disjoint cycle packing: each packed cycle forces at least
// one deletion, so |present| - packed bounds any induced forest from above.
int packed_cycles(const PlanarGraph& g, std::vector<char> present) {
  int count = 0;
  for (;;) {
    std::vector<VertexId> cycle = find_cycle(g, present);
    if (cycle.empty()) break;
    ++count;
    for (VertexId v : cycle) present[v] = 0;
  }
  return count;
}

struct Searcher {
  const PlanarGraph& g;
  long long budget;
  Searcher(const PlanarGraph& graph, long long b) : g(graph), budget(b) {}
  long long nodes = 0;
  int best = -1;
  int target = -1;                 // stop early once a leaf reaches this
  std::vector<VertexId> best_set;  // filled at improving leaves

  int present_count(const std::vector<char>& present) const {
    int c = 0;
    for (VertexId v : g.vertices()) c += present[v];
    return c;
  }

  // Maximizes |forest| over forests squeezed between kept and present.
  // Infeasible branches (a cycle pinned inside kept) return quietly.
  void run(std::vector<char>& present, std::vector<char>& kept, int count) {
    if (++nodes > budget)
      throw BudgetExceeded("induced forest search exceeded " +
                           std::to_string(budget) + " nodes");
    if (target >= 0 && best >= target) return;
    std::vector<VertexId> cycle = find_cycle(g, present);
    if (cycle.empty()) {
      if (count > best) {
        best = count;
        best_set.clear();
        for (VertexId v : g.vertices())
          if (present[v]) best_set.push_back(v);
      }
      return;
    }
    if (count - packed_cycles(g, present) <= best) return;
    VertexId pivot = -1;
    for (VertexId v : cycle)
      if (!kept[v] && (pivot < 0 || v < pivot)) pivot = v;
    if (pivot < 0) return;  // cycle is pinned: no forest down this branch
    // Delete branch first: it reaches forest leaves fastest.
    present[pivot] = 0;
    run(present, kept, count - 1);
    present[pivot] = 1;
    kept[pivot] = 1;
    run(present, kept, count);
    kept[pivot] = 0;
  }
};

}  // namespace

ForestSearch max_induced_forest(const PlanarGraph& g, long long node_budget) {
  std::vector<VertexId> verts = g.vertices();
  int slots = g.slot_count();

  Searcher s(g, node_budget);
  std::vector<char> present(slots, 0), kept(slots, 0);
  for (VertexId v : verts) present[v] = 1;
  s.run(present, kept, static_cast<int>(verts.size()));
  int optimum = s.best;

  // Second pass: grow the lexicographically smallest optimum. Including v is
  // allowed exactly when some optimum contains everything chosen so far plus
  // v; otherwise v is excluded for good.
  std::vector<VertexId> witness;
  long long used = s.nodes;
  std::vector<char> chosen(slots, 0), excluded(slots, 0);
  for (VertexId v : verts) {
    Searcher probe(g, node_budget - used);
    probe.target = optimum;
    std::vector<char> p(slots, 0), k(slots, 0);
    int cnt = 0;
    for (VertexId w : verts)
      if (!excluded[w]) {
        p[w] = 1;
        ++cnt;
      }
    for (VertexId w : verts) k[w] = chosen[w];
    k[v] = 1;
    probe.run(p, k, cnt);
    bool feasible = probe.best >= optimum;
    used += probe.nodes;
    if (feasible) {
      chosen[v] = 1;
      witness.push_back(v);
    } else {
      excluded[v] = 1;
    }
  }
  if (static_cast<int>(witness.size()) != optimum)
    throw InternalInconsistency("witness reconstruction lost the optimum");

  ForestSearch out;
  out.size = optimum;
  out.witness = witness;
  out.nodes = used;
  return out;
}

ForestSearch brute_force_tiny(const PlanarGraph& g) {
  std::vector<VertexId> verts = g.vertices();
  int n = static_cast<int>(verts.size());
  if (n > 20)
    throw InvalidInput("brute force oracle is limited to 20 vertices");

  ForestSearch out;
  // Subsets in descending size; within a size, lexicographic order of the
  // sorted vertex vector, so the first acyclic hit is the smallest witness.
  for (int size = n; size >= 0; --size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ++out.nodes;
      std::vector<VertexId> subset(size);
      for (int i = 0; i < size; ++i) subset[i] = verts[idx[i]];
      if (is_induced_forest(g, subset)) {
        out.size = size;
        out.witness = subset;
        return out;
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;  // n == 0
}

}  // namespace inforest
