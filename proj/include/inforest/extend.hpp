// Forest validity checks and the three pattern-extension lemmas.
//
// Each extension takes a host graph, a pattern occurrence inside it, and an
// induced forest of the host minus the occurrence's image, and returns that
// forest enlarged by a fixed number of image vertices:
//   - extend_cube_low_contact: any cube image with at most three edges
//     leaving it gains 5 vertices;
//   - extend_theta: any theta image with at most three edges leaving it
//     gains 4 vertices;
//   - extend_cube_maxdeg4: a cube image whose vertices all have host degree
//     at most 4 gains 5 vertices, for contact up to 5.
// Results are validated before being returned; if no candidate extension
// survives validation the routines throw LiftFailed, which signals a bug
// rather than a recoverable condition.
#pragma once

#include <vector>

#include "inforest/graph.hpp"
#include "inforest/pattern.hpp"

namespace inforest {

// True when `verts` (sorted or not; duplicates rejected) induces a forest.
bool is_induced_forest(const PlanarGraph& g, const std::vector<VertexId>& verts);

// Independent re-implementation used to cross-check the first in tests.
bool is_induced_forest_alt(const PlanarGraph& g,
                           const std::vector<VertexId>& verts);

std::vector<VertexId> extend_cube_low_contact(const PlanarGraph& g,
                                              const Match& cube,
                                              const std::vector<VertexId>& forest);

std::vector<VertexId> extend_theta(const PlanarGraph& g, const Match& theta,
                                   const std::vector<VertexId>& forest);

std::vector<VertexId> extend_cube_maxdeg4(const PlanarGraph& g,
                                          const Match& cube,
                                          const std::vector<VertexId>& forest);

}  // namespace inforest
