// Planarity testing and embedding from a bare edge list.
//
// Inputs that arrive without rotations are embedded here: the graph is split
// into biconnected blocks, each block is embedded by iterative face/fragment
// insertion (start from any cycle; repeatedly place a path of some fragment
// into a face containing all of the fragment's attachment vertices; when a
// fragment has no such face the graph is nonplanar), and block rotations are
// glued at cut vertices by concatenation. O(n*m), ample for this project's
// graph sizes, fully deterministic.
#pragma once

#include <optional>
#include <vector>

#include "inforest/graph.hpp"

namespace inforest {

// Rotation system realizing a planar embedding, or nullopt when nonplanar.
std::optional<std::vector<std::vector<VertexId>>> planar_rotations(
    int n, const std::vector<Edge>& edges);

// Convenience wrapper; throws InvalidInput when the input is not planar.
PlanarGraph embed_edge_list(int n, const std::vector<Edge>& edges);

}  // namespace inforest
