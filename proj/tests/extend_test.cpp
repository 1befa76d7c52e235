// Tests for forest validity and the pattern-extension lemmas.
#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "inforest/errors.hpp"
#include "inforest/extend.hpp"
#include "inforest/pattern.hpp"

using namespace inforest;
using namespace inforest::testing;

namespace {

// Cube (vertices 0..7) with pendant chains hung off chosen image vertices;
// pendant ids start at 8. `hangs` lists (anchor, chain length).
PlanarGraph cube_with_hangs(const std::vector<std::pair<int, int>>& hangs) {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                            {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                            {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  int next = 8;
  for (auto [anchor, len] : hangs) {
    int prev = anchor;
    for (int i = 0; i < len; ++i) {
      pairs.push_back({prev, next});
      prev = next++;
    }
  }
  return from_edges(next, pairs);
}

PlanarGraph theta_with_hangs(const std::vector<std::pair<int, int>>& hangs) {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                            {1, 4}, {2, 4}, {0, 5}, {3, 5}};
  int next = 6;
  for (auto [anchor, len] : hangs) {
    int prev = anchor;
    for (int i = 0; i < len; ++i) {
      pairs.push_back({prev, next});
      prev = next++;
    }
  }
  return from_edges(next, pairs);
}

// Everything outside the image of `m` (valid as a forest whenever the
// outside is itself acyclic, which holds for pendant-tree fixtures).
std::vector<VertexId> outside_of(const PlanarGraph& g, const Match& m) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (!sorted_contains(m.image, v)) out.push_back(v);
  return out;
}

void check_extension(const PlanarGraph& g, const Match& m,
                     const std::vector<VertexId>& before,
                     const std::vector<VertexId>& after, int gain) {
  CHECK(after.size() == before.size() + gain);
  CHECK(std::is_sorted(after.begin(), after.end()));
  CHECK(is_induced_forest(g, after));
  CHECK(is_induced_forest_alt(g, after));
  for (VertexId v : before) CHECK(sorted_contains(after, v));
  for (VertexId v : after)
    if (!sorted_contains(m.image, v))
      CHECK(std::find(before.begin(), before.end(), v) != before.end());
}

}  // namespace

TEST_CASE("induced forest checks") {
  PlanarGraph g = grid_fixture(3, 3);
  CHECK(is_induced_forest(g, {}));
  CHECK(is_induced_forest(g, {0}));
  CHECK(is_induced_forest(g, {0, 1, 2, 5}));           // a path
  CHECK_FALSE(is_induced_forest(g, {0, 1, 3, 4}));     // a 4-cycle
  CHECK(is_induced_forest(g, {0, 2, 4, 6, 8}));        // independent set
  CHECK_FALSE(is_induced_forest(g, g.vertices()));     // whole grid

  CHECK_THROWS_AS((void)is_induced_forest(g, {0, 0}), InvalidInput);
  CHECK_THROWS_AS((void)is_induced_forest(g, {99}), InvalidInput);
}

TEST_CASE("the two forest checks agree on random subsets") {
  std::mt19937_64 rng(20260816);
  for (const PlanarGraph& g :
       {grid_fixture(4, 4), cube_with_tail_fixture(3), theta_fixture()}) {
    auto verts = g.vertices();
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<VertexId> subset;
      for (VertexId v : verts)
        if (rng() % 2) subset.push_back(v);
      CHECK(is_induced_forest(g, subset) == is_induced_forest_alt(g, subset));
    }
  }
}

TEST_CASE("cube extension, contact 0") {
  PlanarGraph g = cube_fixture();
  auto ms = find_cubes(g, 0);
  REQUIRE(ms.size() == 1);
  auto out = extend_cube_low_contact(g, ms[0], {});
  check_extension(g, ms[0], {}, out, 5);
}

TEST_CASE("cube extension, contact 1 through 3") {
  struct Case {
    std::vector<std::pair<int, int>> hangs;
  };
  // Single tail; two tails on one vertex (degree 5); tails on adjacent,
  // face-opposite and antipodal pairs; then contact-3 placements: spread
  // over a face path, concentrated on one vertex, and mixed.
  for (const Case& c : {Case{{{0, 2}}}, Case{{{0, 1}, {0, 1}}},
                        Case{{{0, 1}, {1, 2}}}, Case{{{0, 1}, {2, 1}}},
                        Case{{{0, 2}, {6, 1}}}, Case{{{3, 1}, {4, 2}}},
                        Case{{{0, 1}, {1, 1}, {2, 1}}},
                        Case{{{0, 1}, {0, 1}, {0, 1}}},
                        Case{{{0, 1}, {0, 1}, {2, 1}}},
                        Case{{{0, 1}, {1, 1}, {6, 1}}},
                        Case{{{0, 1}, {2, 2}, {5, 1}}},
                        Case{{{1, 1}, {4, 1}, {6, 1}}}}) {
    CAPTURE(c.hangs.size());
    PlanarGraph g = cube_with_hangs(c.hangs);
    auto ms = find_cubes(g, 3);
    REQUIRE(ms.size() == 1);
    auto before = outside_of(g, ms[0]);
    REQUIRE(is_induced_forest(g, before));
    auto out = extend_cube_low_contact(g, ms[0], before);
    check_extension(g, ms[0], before, out, 5);
  }
}

TEST_CASE("cube extension rejects high contact") {
  PlanarGraph g = cube_with_hangs({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  auto ms = find_cubes(g, 4);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].contact == 4);
  CHECK_THROWS_AS((void)extend_cube_low_contact(g, ms[0], outside_of(g, ms[0])),
                  InvalidInput);
}

TEST_CASE("theta extension, contact 0 through 3") {
  std::vector<std::vector<std::pair<int, int>>> configs = {
      {},                          // component
      {{4, 1}},                    // one edge out of a degree-2 vertex
      {{0, 2}},                    // one edge out of a degree-3 vertex
      {{4, 1}, {4, 1}},            // two edges out of one vertex
      {{0, 1}, {3, 1}},            // two degree-3 vertices
      {{0, 1}, {4, 1}},            // mixed
      {{4, 1}, {5, 1}},            // both degree-2 vertices
      {{0, 1}, {1, 1}, {2, 1}},    // three spread
      {{4, 1}, {4, 1}, {0, 1}},    // concentrated plus one
      {{5, 1}, {5, 1}, {4, 1}},    // heavy on the off-face vertex
  };
  for (const auto& hangs : configs) {
    CAPTURE(hangs.size());
    PlanarGraph g = theta_with_hangs(hangs);
    auto ms = find_thetas(g, 3);
    REQUIRE(ms.size() == 1);
    auto before = outside_of(g, ms[0]);
    REQUIRE(is_induced_forest(g, before));
    auto out = extend_theta(g, ms[0], before);
    check_extension(g, ms[0], before, out, 4);
  }
}

TEST_CASE("theta extension rejects high contact") {
  PlanarGraph g = theta_with_hangs({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  auto ms = find_thetas(g, 4);
  REQUIRE(ms.size() == 1);
  CHECK_THROWS_AS((void)extend_theta(g, ms[0], outside_of(g, ms[0])),
                  InvalidInput);
}

TEST_CASE("degree-bounded cube extension") {
  std::vector<std::vector<std::pair<int, int>>> configs = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},          // four on one face
      {{0, 1}, {1, 1}, {6, 1}, {7, 1}},          // split pairs
      {{0, 1}, {2, 1}, {5, 1}, {7, 1}},          // two opposite pairs
      {{0, 1}, {1, 1}, {2, 1}, {6, 1}, {7, 1}},  // contact five
      {{0, 1}, {1, 2}, {2, 1}, {4, 3}, {6, 1}},  // longer chains
      {{0, 1}, {5, 1}, {6, 1}},                  // contact three
  };
  for (const auto& hangs : configs) {
    CAPTURE(hangs.size());
    PlanarGraph g = cube_with_hangs(hangs);
    auto ms = find_cubes(g, 5);
    REQUIRE(ms.size() == 1);
    auto before = outside_of(g, ms[0]);
    REQUIRE(is_induced_forest(g, before));
    auto out = extend_cube_maxdeg4(g, ms[0], before);
    check_extension(g, ms[0], before, out, 5);
  }
}

TEST_CASE("degree-bounded cube extension rejects a degree-5 vertex") {
  PlanarGraph g = cube_with_hangs({{0, 1}, {0, 1}});
  auto ms = find_cubes(g, 2);
  REQUIRE(ms.size() == 1);
  CHECK_THROWS_AS((void)extend_cube_maxdeg4(g, ms[0], outside_of(g, ms[0])),
                  InvalidInput);
}

TEST_CASE("extensions succeed against randomized pendant forests") {
  std::mt19937_64 rng(991);
  int cube_runs = 0, theta_runs = 0, deg4_runs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // Random pendant chains on random anchors.
    std::vector<std::pair<int, int>> hangs;
    int contact_budget = 1 + static_cast<int>(rng() % 5);
    std::vector<int> load(8, 0);
    for (int i = 0; i < contact_budget; ++i) {
      int anchor = static_cast<int>(rng() % 8);
      hangs.push_back({anchor, 1 + static_cast<int>(rng() % 3)});
      ++load[anchor];
    }
    PlanarGraph g = cube_with_hangs(hangs);
    auto ms = find_cubes(g, 8);
    REQUIRE(ms.size() == 1);
    auto before = outside_of(g, ms[0]);
    if (ms[0].contact <= 3) {
      auto out = extend_cube_low_contact(g, ms[0], before);
      check_extension(g, ms[0], before, out, 5);
      ++cube_runs;
    }
    if (ms[0].contact <= 5 &&
        *std::max_element(load.begin(), load.end()) <= 1) {
      auto out = extend_cube_maxdeg4(g, ms[0], before);
      check_extension(g, ms[0], before, out, 5);
      ++deg4_runs;
    }

    std::vector<std::pair<int, int>> thangs;
    int tcontact = static_cast<int>(rng() % 4);
    for (int i = 0; i < tcontact; ++i)
      thangs.push_back({static_cast<int>(rng() % 6),
                        1 + static_cast<int>(rng() % 3)});
    PlanarGraph t = theta_with_hangs(thangs);
    auto tms = find_thetas(t, 3);
    if (tms.size() == 1 && tms[0].contact <= 3) {
      auto tbefore = outside_of(t, tms[0]);
      auto tout = extend_theta(t, tms[0], tbefore);
      check_extension(t, tms[0], tbefore, tout, 4);
      ++theta_runs;
    }
  }
  // Make sure the sweep exercised each routine a meaningful number of times.
  CHECK(cube_runs > 80);
  CHECK(theta_runs > 200);
  CHECK(deg4_runs > 100);
}
