#include "inforest/embed.hpp"

#include <doctest.h>

#include <set>

#include "inforest/graph.hpp"

using namespace inforest;

namespace {

std::vector<Edge> complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return e;
}

std::vector<Edge> complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return e;
}

std::vector<Edge> grid_edges(int w, int h) {
  std::vector<Edge> e;
  auto id = [w](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) e.push_back(make_edge(id(x, y), id(x + 1, y)));
      if (y + 1 < h) e.push_back(make_edge(id(x, y), id(x, y + 1)));
    }
  }
  return e;
}

}  // namespace

TEST_CASE("planar classics embed") {
  // K4: 4 triangular faces.
  PlanarGraph k4 = embed_edge_list(4, complete(4));
  CHECK(faces(k4).size() == 4);

  // Cube: 6 quadrilateral faces.
  std::vector<Edge> cube = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                            {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  PlanarGraph qc = embed_edge_list(8, cube);
  auto fw = faces(qc);
  CHECK(fw.size() == 6);
  for (const auto& f : fw) CHECK(f.size() == 4);

  // K2,3: 3 quadrilateral faces.
  PlanarGraph k23 = embed_edge_list(5, complete_bipartite(2, 3));
  CHECK(faces(k23).size() == 3);

  // 4x4 grid: 9 unit squares + outer face.
  PlanarGraph grid = embed_edge_list(16, grid_edges(4, 4));
  CHECK(faces(grid).size() == 10);

  // K3,3 minus one edge is planar with 4 quad faces.
  auto k33e = complete_bipartite(3, 3);
  k33e.pop_back();
  PlanarGraph theta = embed_edge_list(6, k33e);
  auto tf = faces(theta);
  CHECK(tf.size() == 4);
  for (const auto& f : tf) CHECK(f.size() == 4);
}

TEST_CASE("nonplanar graphs are rejected") {
  CHECK_FALSE(planar_rotations(5, complete(5)).has_value());
  CHECK_FALSE(planar_rotations(6, complete_bipartite(3, 3)).has_value());
  CHECK_THROWS_AS(embed_edge_list(6, complete_bipartite(3, 3)), InvalidInput);

  // Petersen graph.
  std::vector<Edge> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  CHECK_FALSE(planar_rotations(10, petersen).has_value());

  // K6 and a K5 with subdivided edges (homeomorph, not subgraph-level K5).
  CHECK_FALSE(planar_rotations(6, complete(6)).has_value());
  std::vector<Edge> sub_k5;
  int next = 5;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      sub_k5.push_back({i, next});
      sub_k5.push_back({next, j});
      ++next;
    }
  }
  CHECK_FALSE(planar_rotations(next, sub_k5).has_value());
}

TEST_CASE("disconnected and bridge-heavy inputs embed") {
  // Two components with cut vertices and cycles.
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0},  // triangle
                         {2, 3}, {3, 4},          // tail
                         {5, 6}, {6, 7}, {7, 8}, {8, 5}, {8, 9}};
  PlanarGraph g = embed_edge_list(10, e);
  CHECK(g.n() == 10);
  CHECK(g.m() == 10);
  validate_embedding(g);
  CHECK(connected_components(g).size() == 2);

  // A tree embeds with a single face.
  PlanarGraph tree = embed_edge_list(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                         {2, 5}, {2, 6}});
  CHECK(faces(tree).size() == 1);

  // Star with many leaves (one block per edge).
  std::vector<Edge> star;
  for (int i = 1; i < 9; ++i) star.push_back({0, i});
  PlanarGraph sg = embed_edge_list(9, star);
  CHECK(sg.degree(0) == 8);
  validate_embedding(sg);
}

TEST_CASE("embedding is deterministic") {
  auto e = grid_edges(5, 3);
  auto r1 = planar_rotations(15, e);
  auto r2 = planar_rotations(15, e);
  REQUIRE(r1.has_value());
  CHECK(*r1 == *r2);
}

TEST_CASE("larger mixed instance embeds and validates") {
  // Dodecahedron (3-regular, 12 pentagonal faces).
  std::vector<Edge> dodeca = {
      {0, 1},  {1, 2},   {2, 3},   {3, 4},   {4, 0},   {0, 5},   {1, 6},
      {2, 7},  {3, 8},   {4, 9},   {5, 10},  {10, 6},  {6, 11},  {11, 7},
      {7, 12}, {12, 8},  {8, 13},  {13, 9},  {9, 14},  {14, 5},  {10, 15},
      {11, 16},{12, 17}, {13, 18}, {14, 19}, {15, 16}, {16, 17}, {17, 18},
      {18, 19},{19, 15}};
  PlanarGraph g = embed_edge_list(20, dodeca);
  auto fw = faces(g);
  CHECK(fw.size() == 12);
  for (const auto& f : fw) CHECK(f.size() == 5);
}
