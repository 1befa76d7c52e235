// Tests for the host generators and the corpus builder.
#include <set>
#include <string>

#include <doctest.h>

#include "inforest/gen.hpp"
#include "inforest/graph.hpp"
#include "inforest/pattern.hpp"

using namespace inforest;

TEST_CASE("drawing-based fixed families") {
  PlanarGraph cube = gen_cube();
  CHECK(cube.n() == 8);
  CHECK(cube.m() == 12);
  CHECK(faces_of_length(cube, 4).size() == 6);
  CHECK(find_cubes(cube, 0).size() == 1);

  PlanarGraph theta = gen_theta();
  CHECK(theta.n() == 6);
  CHECK(theta.m() == 8);
  CHECK(faces_of_length(theta, 4).size() == 4);
  CHECK(count_q(theta) == 1);

  PlanarGraph grid = gen_grid(3, 3);
  CHECK(grid.n() == 9);
  CHECK(grid.m() == 12);
  CHECK(faces(grid).size() == 5);

  CHECK(gen_cycle(5).m() == 5);
  CHECK(faces(gen_cycle(5)).size() == 2);
  CHECK(gen_path(6).m() == 5);
  CHECK(gen_star(4).n() == 5);
  CHECK(faces(gen_star(4)).size() == 1);
}

TEST_CASE("hexgrid structure") {
  PlanarGraph h0 = gen_hexgrid(0);
  CHECK(h0.n() == 6);
  CHECK(h0.m() == 6);

  PlanarGraph h1 = gen_hexgrid(1);
  CHECK(h1.n() == 24);
  CHECK(h1.m() == 30);
  CHECK(faces_of_length(h1, 6).size() == 7);
  CHECK(is_triangle_free(h1));
  for (VertexId v : h1.vertices()) CHECK(h1.degree(v) <= 3);
}

TEST_CASE("cube chains") {
  PlanarGraph open2 = gen_cube_chain(2, false);
  CHECK(open2.n() == 16);
  CHECK(open2.m() == 25);
  CHECK(find_cubes(open2, 1).size() == 2);
  CHECK(count_p(open2) == 2);

  PlanarGraph closed3 = gen_cube_chain(3, true);
  CHECK(closed3.n() == 24);
  CHECK(closed3.m() == 39);
  CHECK(find_cubes(closed3, 1).empty());
  CHECK(find_cubes(closed3, 2).size() == 3);

  PlanarGraph tc = gen_theta_cube_chain(1);
  CHECK(tc.n() == 14);
  CHECK(find_thetas(tc, 1).size() == 1);
  CHECK(count_p(tc) == 1);
  CHECK(count_q(tc) == 0);
}

TEST_CASE("random hosts are reproducible, bounded and triangle-free") {
  for (int n : {8, 15, 30}) {
    PlanarGraph a = random_bipartite_planar(n, 99);
    PlanarGraph b = random_bipartite_planar(n, 99);
    CHECK(graph_hash(a) == graph_hash(b));
    CHECK(a.n() <= n);
    CHECK(is_triangle_free(a));
    validate_embedding(a);
    PlanarGraph c = random_bipartite_planar(n, 100);
    // Different seeds give different hosts (possible ties are astronomically
    // unlikely at these sizes).
    CHECK(graph_hash(a) != graph_hash(c));
  }
}

TEST_CASE("gadgets") {
  PlanarGraph g = gadget_attach(PatternKind::Cube, 5, 1, 7, true);
  CHECK(g.n() == 13);
  auto ms = find_cubes(g, 5);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].contact == 5);
  for (VertexId v : ms[0].image) CHECK(g.degree(v) <= 4);

  PlanarGraph t = gadget_attach(PatternKind::Theta, 3, 2, 11, true);
  CHECK(t.n() == 12);
  auto ts = find_thetas(t, 3);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].contact == 3);

  // Same seed, same graph.
  CHECK(graph_hash(gadget_attach(PatternKind::Cube, 3, 2, 5, false)) ==
        graph_hash(gadget_attach(PatternKind::Cube, 3, 2, 5, false)));
}

TEST_CASE("corpus is large, named uniquely, and in range") {
  auto corpus = build_corpus();
  CHECK(corpus.size() >= 200);
  std::set<std::string> names;
  for (const CorpusEntry& e : corpus) {
    CHECK(names.insert(e.name).second);
    CHECK(e.graph.n() >= 4);
    CHECK(e.graph.n() <= 30);
    CHECK(is_triangle_free(e.graph));
  }
}
