// Occurrences of the two special patterns inside a host graph.
//
// "Cube" is the 3-dimensional cube graph on roles 0..7: the 4-cycles
// 0-1-2-3 and 4-5-6-7 joined by spokes i..i+4. "Theta" is the complete
// bipartite graph on parts {0,3,4} / {1,2,5} minus the edge 4-5; roles 4 and
// 5 are its two degree-2 vertices.
//
// The contact of an occurrence is the number of edges from its image to the
// rest of the host. In triangle-free planar hosts every occurrence is induced
// (any extra edge inside an image would create a triangle or break
// planarity), and distinct low-contact cube images are vertex-disjoint; the
// counters rely on both facts and check them loudly.
#pragma once

#include <array>
#include <vector>

#include "inforest/graph.hpp"

namespace inforest {

enum class PatternKind { Cube, Theta };

struct Match {
  PatternKind kind;
  std::vector<VertexId> map;    // role -> host vertex
  std::vector<VertexId> image;  // sorted host vertices
  int contact = 0;              // edges leaving the image
};

constexpr int kCubeSize = 8;
constexpr int kThetaSize = 6;

const std::vector<std::pair<int, int>>& cube_pattern_edges();   // 12
const std::vector<std::pair<int, int>>& theta_pattern_edges();  // 8

// Pattern self-isomorphisms, cached: 48 for the cube, 8 for the theta.
const std::vector<std::array<int, kCubeSize>>& cube_automorphisms();
const std::vector<std::array<int, kThetaSize>>& theta_automorphisms();

// The four 4-cycles of the theta pattern (as role walks). These are the face
// cycles of every planar embedding of the pattern, so face-membership tests
// against a theta image need no host embedding.
const std::vector<std::array<int, 4>>& theta_quad_cycles();

// All occurrences with contact <= max_contact, one per image, sorted by
// image; map is the lexicographically smallest role assignment of its image.
std::vector<Match> find_cubes(const PlanarGraph& g, int max_contact);
std::vector<Match> find_thetas(const PlanarGraph& g, int max_contact);

int contact_of(const PlanarGraph& g, const std::vector<VertexId>& image);

// Image vertices having at least one edge out of the image, sorted.
std::vector<VertexId> boundary_vertices(const PlanarGraph& g,
                                        const std::vector<VertexId>& image);

// p(G): number of cube images of contact <= 1 (these are pairwise
// vertex-disjoint here; overlap raises InternalInconsistency).
int count_p(const PlanarGraph& g);

// q(G): number of connected components isomorphic to the theta pattern.
int count_q(const PlanarGraph& g);

}  // namespace inforest
