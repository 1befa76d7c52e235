// Deterministic generators for triangle-free planar hosts.
//
// Fixed families (lattices, the two patterns, chains of them) are built from
// explicit plane drawings: neighbor rotations come from sorting edge
// directions counterclockwise, giving an embedding independent of the
// incremental planarity embedder. Randomized families are seeded and
// reproducible. build_corpus bundles at least 200 hosts, every one
// triangle-free and planar with 4 to 30 vertices.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inforest/graph.hpp"
#include "inforest/pattern.hpp"

namespace inforest {

// Rotations by counterclockwise angle order around each vertex of a
// straight-line plane drawing. Throws InvalidInput when two edges leave a
// vertex in the same direction, InternalInconsistency when the result is no
// plane embedding.
PlanarGraph graph_from_drawing(const std::vector<std::pair<double, double>>& pos,
                               const std::vector<Edge>& edges);

PlanarGraph gen_cube();
PlanarGraph gen_cubes(int k);          // k disjoint cubes
PlanarGraph gen_theta();
PlanarGraph gen_path(int n);
PlanarGraph gen_cycle(int n);          // n >= 4 (triangle-free)
PlanarGraph gen_grid(int w, int h);    // w,h >= 1
PlanarGraph gen_hexgrid(int rings);    // honeycomb disc, rings >= 0
PlanarGraph gen_star(int leaves);

// k cubes joined consecutively by single edges; `closed` adds the wrap-around
// edge, making every cube touch the outside twice.
PlanarGraph gen_cube_chain(int k, bool closed);

// Theta followed by k cubes joined consecutively by single edges.
PlanarGraph gen_theta_cube_chain(int k);

// Random connected-ish subgraph of a grid on exactly n vertices before
// pruning: every edge is dropped with probability 1/4, then isolated
// vertices are removed and ids renumbered densely.
PlanarGraph random_bipartite_planar(int n, std::uint64_t seed);

// A pattern with `edges_out` pendant tails of `tail_len` vertices hung off
// seeded anchor vertices (distinct anchors when `distinct_anchors`).
// edges_out <= 5.
PlanarGraph gadget_attach(PatternKind kind, int edges_out, int tail_len,
                          std::uint64_t seed, bool distinct_anchors);

struct CorpusEntry {
  std::string name;
  PlanarGraph graph;
};

// At least 200 triangle-free planar hosts, 4 <= n <= 30, each validated.
std::vector<CorpusEntry> build_corpus();

}  // namespace inforest
