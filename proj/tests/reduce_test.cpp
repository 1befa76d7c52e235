// Tests for the reduction engine: rule table order, driver soundness
// (accounting, measure decrease, per-level bound), lift execution, trace
// serialization, replay, and an end-to-end corpus sweep with oracle
// cross-checks.
#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "inforest/errors.hpp"
#include "inforest/extend.hpp"
#include "inforest/gen.hpp"
#include "inforest/lpcert.hpp"
#include "inforest/oracle.hpp"
#include "inforest/pattern.hpp"
#include "inforest/reduce.hpp"

using namespace inforest;
using namespace inforest::testing;

namespace {

bool same_tuple(const Accounting& x, const Accounting& y) {
  return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma &&
         x.eta == y.eta && x.lambda == y.lambda;
}

// Every applied step's tuple must appear in the certified accounting table,
// joined on rule name and tuple. Two families are parametric: theta chains
// of any length, and closed cube chains, which aggregate h per-cube rows.
bool tuple_certified(const TraceStep& s) {
  if (s.rule == "theta-chain") {
    const long long t = (s.acct.alpha - 6) / 8;
    return t >= 0 && s.acct.alpha == 8 * t + 6 && s.acct.beta == 13 * t + 9 &&
           s.acct.gamma == 0 && s.acct.eta == -1 && s.acct.lambda == 5 * t + 4;
  }
  if (s.rule == "cube-contact2" && s.variant == "cycle") {
    const long long h = s.acct.alpha / 8;
    return h >= 1 && s.acct.alpha == 8 * h && s.acct.beta == 13 * h &&
           s.acct.gamma == 0 && s.acct.eta == 0 && s.acct.lambda == 5 * h;
  }
  for (const lp::RuleRow& row : lp::rule_rows())
    if (row.rule == s.rule && same_tuple(row.tuple, s.acct)) return true;
  return false;
}

std::set<std::string>& fired_rules() {
  static std::set<std::string> s;
  return s;
}

// Solve with the full battery of cross-checks every host must pass.
SolveResult checked_solve(const PlanarGraph& g) {
  SolveResult res = solve(g);
  REQUIRE(is_induced_forest(g, res.forest));
  REQUIRE(static_cast<int>(res.forest.size()) >= forest_bound(g.n()));
  for (const TraceStep& s : res.trace) {
    fired_rules().insert(s.rule);
    INFO("step rule ", s.rule, " variant ", s.variant);
    CHECK(tuple_certified(s));
    CHECK(s.acct.expr().eval(lp::coefficient_point()).sign() >= 0);
    CHECK(s.n_before - s.n_after == s.acct.alpha);
    CHECK(s.m_before - s.m_after >= s.acct.beta);
  }
  return res;
}

PlanarGraph prism_fixture(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.push_back({i, (i + 1) % k});
    pairs.push_back({k + i, k + (i + 1) % k});
    pairs.push_back({i, k + i});
  }
  return from_edges(2 * k, pairs);
}

// Three concentric k-cycles with aligned spokes: middle ring degree 4,
// inner and outer rings degree 3.
PlanarGraph cylinder3_fixture(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < k; ++i)
      pairs.push_back({r * k + i, r * k + (i + 1) % k});
  for (int r = 0; r + 1 < 3; ++r)
    for (int i = 0; i < k; ++i) pairs.push_back({r * k + i, (r + 1) * k + i});
  return from_edges(3 * k, pairs);
}

// Theta (0..5, its 2-vertices are 4 and 5), a cube (6..13) hanging off
// vertex 4, and a 2-vertex tail off the cube's far corner.
PlanarGraph theta_cube_tail_fixture() {
  return from_edges(16, {{0, 1},  {0, 2},   {1, 3},   {2, 3},   {1, 4},
                         {2, 4},  {0, 5},   {3, 5},   {4, 6},   {6, 7},
                         {7, 8},  {8, 9},   {6, 9},   {10, 11}, {11, 12},
                         {12, 13}, {10, 13}, {6, 10},  {7, 11},  {8, 12},
                         {9, 13}, {13, 14}, {14, 15}});
}

PlanarGraph k24_fixture() {
  return from_edges(
      6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

PlanarGraph k23_fixture() {
  return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

PlanarGraph cube_minus_edge_fixture() {
  return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                        {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Cube with the spoke 3-7 subdivided by vertex 8; contracting 8 restores it.
PlanarGraph cube_subdivided_spoke_fixture() {
  return from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                        {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 8},
                        {7, 8}});
}

}  // namespace

TEST_CASE("forest_bound is the exact ceiling of 5n/9") {
  for (int n = 0; n <= 300; ++n) {
    const int fb = forest_bound(n);
    CHECK(9 * fb >= 5 * n);
    CHECK(9 * (fb - 1) < 5 * n);
  }
}

TEST_CASE("rule table carries the pinned order") {
  const std::vector<std::string> expected = {
      "cube-component",    "theta-component",     "cube-contact1",
      "theta-chain",       "cube-contact2",       "cube-contact3",
      "theta-contact2",    "big-vertex",          "cube-contact4",
      "theta-contact3",    "theta-face45",        "cube-contact5",
      "take-all",          "split",               "deg2-contract",
      "deg2-deg4",         "deg2-deg2",           "deg3-two-deg2",
      "deg2-diamond",      "deg3-deg4-rewire",    "square-two-sides",
      "square-four-deg3",  "square-three-deg3",   "square-two-deg3",
      "quadface-cross-pair", "quadface-corridor", "quadface-twin-anchor",
      "quadface-all-deg3", "quadface-three-deg3", "quadface-two-deg3",
      "hub-common-neighbor", "hub-shared-tip",    "hub-spread",
      "hub-tip-edge",      "hub-tip-anchor",      "hub-last",
      "pentaface"};
  const auto& table = build_rule_table();
  REQUIRE(table.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(table[i].name == expected[i]);
}

TEST_CASE("empty and tiny hosts") {
  PlanarGraph empty = from_edges(0, {});
  CHECK(!apply_first_rule(empty).has_value());
  SolveResult r = checked_solve(empty);
  CHECK(r.forest.empty());
  CHECK(r.trace.empty());

  SolveResult single = checked_solve(from_edges(1, {}));
  CHECK(single.forest == std::vector<VertexId>{0});
  CHECK(single.trace.size() == 1);
  CHECK(single.trace[0].rule == "take-all");
  CHECK(single.trace[0].variant == "single");

  SolveResult edge = checked_solve(from_edges(2, {{0, 1}}));
  CHECK(edge.forest.size() == 2);
  CHECK(edge.trace[0].variant == "edge");
}

TEST_CASE("hosts with triangles are rejected") {
  PlanarGraph k3 = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS((void)solve(k3), InvalidInput);
}

TEST_CASE("pattern components come out first") {
  SolveResult cube = checked_solve(cube_fixture());
  REQUIRE(cube.trace.size() == 1);
  CHECK(cube.trace[0].rule == "cube-component");
  CHECK(same_tuple(cube.trace[0].acct, Accounting{8, 12, 1, 0, 5}));
  CHECK(cube.forest.size() == 5);

  SolveResult theta = checked_solve(theta_fixture());
  REQUIRE(theta.trace.size() == 1);
  CHECK(theta.trace[0].rule == "theta-component");
  CHECK(same_tuple(theta.trace[0].acct, Accounting{6, 8, 0, 1, 4}));
  CHECK(theta.forest.size() == 4);

  SolveResult two = checked_solve(cubes_fixture(2));
  REQUIRE(two.trace.size() == 2);
  CHECK(two.trace[0].rule == "cube-component");
  CHECK(two.trace[1].rule == "cube-component");
  CHECK(two.forest.size() == 10);

  // Cube next to a plain square: the cube leaves first, then the square.
  PlanarGraph mixed = from_edges(
      12, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
           {0, 4}, {1, 5}, {2, 6}, {3, 7}, {8, 9}, {9, 10}, {10, 11}, {8, 11}});
  SolveResult r = checked_solve(mixed);
  CHECK(r.trace[0].rule == "cube-component");
  CHECK(same_tuple(r.trace[0].acct, Accounting{8, 12, 1, 0, 5}));
  CHECK(r.forest.size() == 8);
}

TEST_CASE("cycles solve to n-1 via contraction down to the square") {
  SolveResult c4 = checked_solve(cycle_fixture(4));
  REQUIRE(c4.trace.size() == 1);
  CHECK(c4.trace[0].rule == "deg2-deg2");
  CHECK(c4.trace[0].variant == "whole-square");
  CHECK(c4.forest.size() == 3);

  for (int n = 5; n <= 12; ++n) {
    SolveResult r = checked_solve(cycle_fixture(n));
    CHECK(static_cast<int>(r.forest.size()) == n - 1);
    CHECK(r.trace[0].rule == "deg2-contract");
    CHECK(r.trace[0].variant == "clean");
    CHECK(r.trace.back().rule == "deg2-deg2");
  }
}

TEST_CASE("trees are taken whole through bridge splits") {
  SolveResult path = checked_solve(path_fixture(7));
  CHECK(path.forest.size() == 7);
  CHECK(path.trace[0].rule == "split");
  CHECK(path.trace[0].variant == "bridge");

  SolveResult star = checked_solve(gen_star(5));
  CHECK(star.trace[0].rule == "big-vertex");
  CHECK(same_tuple(star.trace[0].acct, Accounting{1, 5, 0, 0, 0}));
  CHECK(star.forest.size() == 5);
}

TEST_CASE("disconnected pattern-free hosts split by component") {
  PlanarGraph two_squares = from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  SolveResult r = checked_solve(two_squares);
  CHECK(r.trace[0].rule == "split");
  CHECK(r.trace[0].variant == "component");
  CHECK(r.trace[0].image.empty());
  CHECK(r.forest.size() == 6);
}

TEST_CASE("degree-2 rules fire on their minimal hosts") {
  SolveResult k24 = checked_solve(k24_fixture());
  CHECK(k24.trace[0].rule == "deg2-deg4");
  CHECK(same_tuple(k24.trace[0].acct, Accounting{2, 5, 0, 0, 1}));
  CHECK(k24.forest.size() == 5);

  SolveResult ladder = checked_solve(grid_fixture(4, 2));
  CHECK(ladder.trace[0].rule == "deg2-deg2");
  CHECK(ladder.trace[0].variant == "main");

  SolveResult k23 = checked_solve(k23_fixture());
  CHECK(k23.trace[0].rule == "deg3-two-deg2");
  CHECK(same_tuple(k23.trace[0].acct, Accounting{3, 5, 0, 0, 2}));
  CHECK(k23.forest.size() == 4);

  SolveResult diamond = checked_solve(cube_minus_edge_fixture());
  CHECK(diamond.trace[0].rule == "deg2-diamond");
  CHECK(diamond.trace[0].variant == "tight");
  CHECK(same_tuple(diamond.trace[0].acct, Accounting{5, 9, 0, 0, 3}));
  CHECK(diamond.forest.size() == 6);

  SolveResult sub = checked_solve(cube_subdivided_spoke_fixture());
  CHECK(sub.trace[0].rule == "deg2-contract");
  CHECK(sub.trace[0].variant == "new-cube");
  CHECK(same_tuple(sub.trace[0].acct, Accounting{1, 1, -1, 0, 1}));
  REQUIRE(sub.trace.size() == 2);
  CHECK(sub.trace[1].rule == "cube-component");
  CHECK(sub.forest.size() == 6);
}

TEST_CASE("pattern contact ladder: cubes") {
  const std::string rules[6] = {"",
                                "cube-contact1",
                                "cube-contact2",
                                "cube-contact3",
                                "cube-contact4",
                                "cube-contact5"};
  // Contact 1 on a tree tail loses the host's only low-contact cube outright
  // (no replacement appears), which is the "swap" accounting row.
  const Accounting tuples[6] = {{},
                                {8, 13, 1, -1, 5},
                                {8, 14, 0, 0, 5},
                                {8, 15, -1, -1, 5},
                                {8, 16, -1, -1, 5},
                                {8, 17, -1, -1, 5}};
  for (int k = 1; k <= 5; ++k) {
    PlanarGraph g = gadget_attach(PatternKind::Cube, k, 2, 40 + k, true);
    SolveResult r = checked_solve(g);
    INFO("contact ", k);
    CHECK(r.trace[0].rule == rules[k]);
    CHECK(same_tuple(r.trace[0].acct, tuples[k]));
  }
  CHECK(checked_solve(gadget_attach(PatternKind::Cube, 1, 2, 41, true))
            .trace[0]
            .variant == "swap");
}

namespace {

// Theta (roles 0..5) plus a length-2 tail at each requested anchor role.
PlanarGraph theta_with_tails(const std::vector<int>& anchors) {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                            {1, 4}, {2, 4}, {0, 5}, {3, 5}};
  int next = 6;
  for (int a : anchors) {
    edges.push_back({a, next});
    edges.push_back({next, next + 1});
    next += 2;
  }
  return from_edges(next, edges);
}

}  // namespace

TEST_CASE("pattern contact ladder: thetas") {
  // Contacts 1..3 are claimed unconditionally by the dedicated contact rules.
  const std::string low[4] = {"", "theta-chain", "theta-contact2",
                              "theta-contact3"};
  for (int k = 1; k <= 3; ++k) {
    PlanarGraph g = gadget_attach(PatternKind::Theta, k, 2, 70 + k, true);
    SolveResult r = checked_solve(g);
    INFO("contact ", k);
    CHECK(r.trace[0].rule == low[k]);
    if (k == 1) {
      CHECK(r.trace[0].variant == "t=0");
      CHECK(same_tuple(r.trace[0].acct, Accounting{6, 9, 0, -1, 4}));
    }
  }

  // Contact 4 with every attachment on one quad face (roles 0,1,2 and the
  // degree-2 role 4) is claimed by the face rule, keeping role 4 alive.
  {
    SolveResult r = checked_solve(theta_with_tails({0, 1, 2, 4}));
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0].rule == "theta-face45");
    CHECK(r.trace[0].variant == "clean");
    CHECK(same_tuple(r.trace[0].acct, Accounting{5, 10, 0, 0, 3}));
  }

  // Contact 4 spread over all four degree-3 roles fits no single face, so the
  // theta survives to the split rule; cutting one tail bridge drops it to
  // contact 3, where the contact rule picks it up.
  {
    SolveResult r = checked_solve(theta_with_tails({0, 1, 2, 3}));
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0].rule == "split");
    CHECK(r.trace[0].variant == "bridge");
    bool contact3_fired = false;
    for (const TraceStep& ts : r.trace)
      if (ts.rule == "theta-contact3") contact3_fired = true;
    CHECK(contact3_fired);
  }

  // Contact 5 can never put all attachments on one 4-face, so it always
  // falls through to split first.
  {
    PlanarGraph g = gadget_attach(PatternKind::Theta, 5, 2, 75, true);
    SolveResult r = checked_solve(g);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0].rule == "split");
  }
}

TEST_CASE("cube chains") {
  SolveResult open = checked_solve(gen_cube_chain(3, false));
  CHECK(open.trace[0].rule == "cube-contact1");
  CHECK(open.trace[0].variant == "plain");
  CHECK(open.forest.size() == 15);

  SolveResult closed = checked_solve(gen_cube_chain(3, true));
  REQUIRE(closed.trace.size() == 1);
  CHECK(closed.trace[0].rule == "cube-contact2");
  CHECK(closed.trace[0].variant == "cycle");
  CHECK(same_tuple(closed.trace[0].acct, Accounting{24, 39, 0, 0, 15}));
  CHECK(closed.forest.size() == 15);
}

TEST_CASE("theta followed by a cube swaps the removal order") {
  SolveResult r = checked_solve(gen_theta_cube_chain(1));
  REQUIRE(r.trace.size() >= 2);
  CHECK(r.trace[0].rule == "cube-contact1");
  CHECK(r.trace[0].variant == "swap");
  CHECK(same_tuple(r.trace[0].acct, Accounting{8, 13, 1, -1, 5}));
  CHECK(r.trace[1].rule == "theta-component");
  CHECK(r.forest.size() == 9);
}

TEST_CASE("theta chain with one pass-through cube") {
  SolveResult r = checked_solve(theta_cube_tail_fixture());
  REQUIRE(!r.trace.empty());
  CHECK(r.trace[0].rule == "theta-chain");
  CHECK(r.trace[0].variant == "t=1");
  CHECK(same_tuple(r.trace[0].acct, Accounting{14, 22, 0, -1, 9}));
  CHECK(r.forest.size() == 11);
}

TEST_CASE("prisms walk through the all-3-vertex quad face rule") {
  for (int k : {6, 8}) {
    PlanarGraph g = prism_fixture(k);
    SolveResult r = checked_solve(g);
    INFO("prism ", k);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0].rule == "quadface-all-deg3");
    CHECK(r.trace[0].variant == "eight-block");
    CHECK(same_tuple(r.trace[0].acct, Accounting{8, 13, 0, 0, 5}));
    ForestSearch opt = max_induced_forest(g);
    CHECK(static_cast<int>(r.forest.size()) <= opt.size);
  }
}

TEST_CASE("three-ring cylinder starts with the degree-3-4 rewire") {
  PlanarGraph g = cylinder3_fixture(8);
  SolveResult r = checked_solve(g);
  REQUIRE(!r.trace.empty());
  CHECK(r.trace[0].rule == "deg3-deg4-rewire");
  CHECK(r.trace[0].variant == "virtual-edge");
  CHECK(same_tuple(r.trace[0].acct, Accounting{2, 5, 0, 0, 1}));
}

TEST_CASE("grids and hex patches solve within the oracle sandwich") {
  for (auto [w, h] : {std::pair{3, 3}, {4, 3}, {4, 4}, {5, 3}, {6, 3}}) {
    PlanarGraph g = grid_fixture(w, h);
    SolveResult r = checked_solve(g);
    if (g.n() <= 18) {
      ForestSearch opt = max_induced_forest(g);
      INFO("grid ", w, "x", h);
      CHECK(static_cast<int>(r.forest.size()) <= opt.size);
    }
  }
  checked_solve(gen_hexgrid(1));
  checked_solve(gen_hexgrid(2));
}

TEST_CASE("corpus sweep: bound everywhere, oracle sandwich on small hosts") {
  const auto corpus = build_corpus();
  REQUIRE(corpus.size() >= 200);
  int sandwiched = 0;
  for (const CorpusEntry& e : corpus) {
    INFO("corpus entry ", e.name);
    SolveResult r = checked_solve(e.graph);
    if (e.graph.n() <= 18) {
      ForestSearch opt = max_induced_forest(e.graph);
      CHECK(static_cast<int>(r.forest.size()) <= opt.size);
      ++sandwiched;
    }
  }
  CHECK(sandwiched > 0);
}

TEST_CASE("solving is deterministic") {
  for (const PlanarGraph& g :
       {gadget_attach(PatternKind::Cube, 3, 2, 11, true), prism_fixture(8),
        grid_fixture(5, 4), random_bipartite_planar(24, 7)}) {
    SolveResult a = solve(g);
    SolveResult b = solve(g);
    CHECK(a.forest == b.forest);
    std::ostringstream ta, tb;
    write_trace(a.trace, ta);
    write_trace(b.trace, tb);
    CHECK(ta.str() == tb.str());
  }
}

TEST_CASE("trace round-trip and replay") {
  PlanarGraph g = prism_fixture(8);
  SolveResult r = solve(g);
  std::ostringstream out;
  write_trace(r.trace, out);
  std::istringstream in(out.str());
  std::vector<TraceStep> back = read_trace(in);
  REQUIRE(back.size() == r.trace.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].rule == r.trace[i].rule);
    CHECK(back[i].variant == r.trace[i].variant);
    CHECK(back[i].depth == r.trace[i].depth);
    CHECK(back[i].image == r.trace[i].image);
    CHECK(same_tuple(back[i].acct, r.trace[i].acct));
    CHECK(back[i].hash_before == 0);
  }

  CHECK(replay(g, back).ok);

  std::vector<TraceStep> wrong = back;
  wrong[0].acct.lambda += 1;
  ReplayResult bad = replay(g, wrong);
  CHECK(!bad.ok);
  CHECK(!bad.mismatch.empty());

  // A different host diverges immediately.
  ReplayResult cross = replay(prism_fixture(6), back);
  CHECK(!cross.ok);
}

TEST_CASE("trace parser rejects malformed lines") {
  std::istringstream missing("take-all single 0 1 0");
  CHECK_THROWS_AS((void)read_trace(missing), InvalidInput);
  std::istringstream short_image("take-all single 0 1 0 0 0 1 0 0 0 1 2 0");
  CHECK_THROWS_AS((void)read_trace(short_image), InvalidInput);
  std::istringstream trailing("take-all single 0 1 0 0 0 1 0 0 0 1 1 0 9");
  CHECK_THROWS_AS((void)read_trace(trailing), InvalidInput);
}

TEST_CASE("rule coverage over the whole suite") {
  // Runs last in this file: reports which table rules the suite exercised.
  std::vector<std::string> missed;
  for (const ReductionRule& rule : build_rule_table())
    if (!fired_rules().count(rule.name)) missed.push_back(rule.name);
  for (const std::string name : {"cube-component", "theta-component",
                                  "cube-contact1", "theta-chain",
                                  "cube-contact2", "cube-contact3",
                                  "theta-contact2", "big-vertex",
                                  "cube-contact4", "theta-contact3",
                                  "theta-face45", "cube-contact5", "take-all",
                                  "split", "deg2-contract", "deg2-deg4",
                                  "deg2-deg2", "deg3-two-deg2", "deg2-diamond",
                                  "deg3-deg4-rewire", "quadface-all-deg3"}) {
    INFO("expected rule to fire: ", name);
    CHECK(fired_rules().count(name) == 1);
  }
  std::string report;
  for (const std::string& name : missed) report += name + " ";
  MESSAGE("rules not exercised by this suite: ",
          report.empty() ? "(none)" : report);
}
