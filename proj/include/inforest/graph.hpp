// Embedded planar graphs with stable vertex ids.
//
// A PlanarGraph is a rotation system: for every vertex, the clockwise cyclic
// order of its neighbors. Faces are traced by the dart rule
//     next(u -> v) = (v, w)   with w the neighbor AFTER u in rot[v],
// a convention pinned once here and verified by Euler's formula per connected
// component (checked after every mutation; graphs in this project are tiny).
//
// Vertex ids are stable: deleting a vertex never renumbers the others, and a
// contraction allocates a fresh id for the merged vertex. This keeps
// reduction traces and lift stages unambiguous about which vertex is which.
//
// Mutating operations are free functions returning new graphs; the class
// itself only exposes read access plus the builders.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inforest/errors.hpp"

namespace inforest {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

class PlanarGraph {
 public:
  PlanarGraph() = default;

  // Build from explicit rotations over ids 0..n-1. Throws InvalidInput when
  // the lists are not symmetric, contain loops or duplicates, or the rotation
  // system fails Euler's formula on some component.
  static PlanarGraph from_rotations(int n,
                                    std::vector<std::vector<VertexId>> rot);

  int slot_count() const { return static_cast<int>(rot_.size()); }
  bool alive(VertexId v) const {
    return v >= 0 && v < slot_count() && alive_[v];
  }
  int n() const { return n_; }
  int m() const { return m_; }

  const std::vector<VertexId>& rotation(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
  bool has_edge(VertexId u, VertexId v) const;

  std::vector<VertexId> vertices() const;           // alive ids, ascending
  std::vector<Edge> edges() const;                  // normalized, sorted
  std::vector<VertexId> neighbors_sorted(VertexId v) const;

  // Smallest alive id; throws InvalidInput when empty.
  VertexId min_vertex() const;

 private:
  friend PlanarGraph delete_vertices(const PlanarGraph&,
                                     const std::vector<VertexId>&);
  friend PlanarGraph delete_edge(const PlanarGraph&, VertexId, VertexId);
  friend std::pair<PlanarGraph, VertexId> contract_edge(const PlanarGraph&,
                                                        VertexId, VertexId);
  friend PlanarGraph add_edge_in_face(const PlanarGraph&, VertexId, VertexId);
  friend std::pair<PlanarGraph, VertexId> attach_vertex_in_face(
      const PlanarGraph&, const std::vector<VertexId>&);
  friend PlanarGraph attach_existing_in_face(const PlanarGraph&, VertexId,
                                             const std::vector<VertexId>&);

  void recount();

  std::vector<std::vector<VertexId>> rot_;
  std::vector<char> alive_;
  int n_ = 0;
  int m_ = 0;
};

// ---------------------------------------------------------------------------
// Faces. Each face is the closed dart walk (v0, v1, ..., vk-1) meaning darts
// v0->v1, ..., vk-1->v0. A pendant edge appears twice in its face's walk.

std::vector<std::vector<VertexId>> faces(const PlanarGraph& g);

// Throws InternalInconsistency when rotations are asymmetric, contain
// duplicates/loops, or some component violates V - E + F = 2.
void validate_embedding(const PlanarGraph& g);

bool is_triangle_free(const PlanarGraph& g);

// ---------------------------------------------------------------------------
// Connectivity.

std::vector<std::vector<VertexId>> connected_components(const PlanarGraph& g);
bool is_connected(const PlanarGraph& g);
std::vector<Edge> bridges(const PlanarGraph& g);

// ---------------------------------------------------------------------------
// Mutations (validated; every result passes validate_embedding).

PlanarGraph delete_vertices(const PlanarGraph& g,
                            const std::vector<VertexId>& verts);
PlanarGraph delete_edge(const PlanarGraph& g, VertexId u, VertexId v);

// Contracts edge (u,v): both endpoints die, a fresh vertex id takes over
// their remaining neighbors (parallel edges coalesced). Returns the new
// graph and the fresh id.
std::pair<PlanarGraph, VertexId> contract_edge(const PlanarGraph& g,
                                               VertexId u, VertexId v);

// Adds edge (u,v) inside a common face; throws InternalInconsistency when no
// face contains both vertices (the callers' structure analyses guarantee one).
PlanarGraph add_edge_in_face(const PlanarGraph& g, VertexId u, VertexId v);

// New vertex adjacent to the given anchors, all of which must lie on one
// common face. Returns the new graph and the fresh vertex id.
std::pair<PlanarGraph, VertexId> attach_vertex_in_face(
    const PlanarGraph& g, const std::vector<VertexId>& anchors);

// Same, but re-attaches an existing isolated vertex instead of a fresh one.
PlanarGraph attach_existing_in_face(const PlanarGraph& g, VertexId v,
                                    const std::vector<VertexId>& anchors);

// ---------------------------------------------------------------------------
// Cycle classification. Requires a connected graph and a chordless simple
// cycle given as its vertex walk. The cycle splits the sphere into two
// regions; "face" means one region contains no vertices at all.

struct CycleClass {
  bool separating = false;
  // Vertices strictly inside region 0 / region 1 (cycle vertices in neither).
  std::vector<VertexId> side[2];
  // For every non-cycle edge incident to a cycle vertex: which region its
  // far corner lies in. Key is the normalized edge.
  std::vector<std::pair<Edge, int>> edge_side;

  int side_of_edge(Edge e) const;         // throws if unknown
  int side_of_vertex(VertexId v) const;   // throws if on the cycle / unknown
};

CycleClass classify_cycle(const PlanarGraph& g,
                          const std::vector<VertexId>& cycle);

// All simple 4-cycles, each canonicalized to start at its smallest vertex
// and run toward the smaller of that vertex's two cycle neighbors. Sorted.
std::vector<std::vector<VertexId>> four_cycles(const PlanarGraph& g);

// Faces of given length, canonicalized the same way. Only faces that are
// simple cycles are returned.
std::vector<std::vector<VertexId>> faces_of_length(const PlanarGraph& g,
                                                   int len);

// ---------------------------------------------------------------------------
// Hashing, io.

std::uint64_t graph_hash(const PlanarGraph& g);

// Renumber alive vertices to 0..n-1 (order preserving). Second result maps
// new id -> old id.
std::pair<PlanarGraph, std::vector<VertexId>> compact(const PlanarGraph& g);

// Text format:
//   n m
//   u v            (m lines, 0-based ids)
//   rot u: a b c   (optional, one per vertex; when absent the graph is
//                   embedded by the planarity algorithm in embed.hpp)
PlanarGraph parse_graph(std::istream& in);
void write_graph(const PlanarGraph& g, std::ostream& out);
PlanarGraph read_graph_file(const std::string& path);
void write_graph_file(const PlanarGraph& g, const std::string& path);

// ---------------------------------------------------------------------------
// Small helpers shared across modules.

bool sorted_contains(const std::vector<VertexId>& sorted_vec, VertexId v);
std::vector<VertexId> sorted_union(const std::vector<VertexId>& a,
                                   const std::vector<VertexId>& b);
std::vector<VertexId> common_neighbors(const PlanarGraph& g, VertexId u,
                                       VertexId v);

}  // namespace inforest
