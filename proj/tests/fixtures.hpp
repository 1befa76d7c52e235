// Small graph builders shared by the test files. Everything goes through
// embed_edge_list so fixtures carry a valid embedding.
#pragma once

#include <utility>
#include <vector>

#include "inforest/embed.hpp"
#include "inforest/graph.hpp"

namespace inforest::testing {

inline PlanarGraph from_edges(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
  return embed_edge_list(n, edges);
}

// The cube graph on 0..7: 4-cycles 0-1-2-3 and 4-5-6-7 plus spokes i,i+4.
inline PlanarGraph cube_fixture() {
  return from_edges(8, {{0, 1},
                        {1, 2},
                        {2, 3},
                        {0, 3},
                        {4, 5},
                        {5, 6},
                        {6, 7},
                        {4, 7},
                        {0, 4},
                        {1, 5},
                        {2, 6},
                        {3, 7}});
}

// Theta graph on 0..5: complete bipartite {0,3,4}/{1,2,5} minus edge 4-5.
inline PlanarGraph theta_fixture() {
  return from_edges(
      6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {0, 5}, {3, 5}});
}

inline PlanarGraph cycle_fixture(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
  return from_edges(n, pairs);
}

inline PlanarGraph path_fixture(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return from_edges(n, pairs);
}

inline PlanarGraph grid_fixture(int w, int h) {
  std::vector<std::pair<int, int>> pairs;
  auto id = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) pairs.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < h) pairs.push_back({id(x, y), id(x, y + 1)});
    }
  return from_edges(w * h, pairs);
}

// k disjoint cubes on 0..8k-1.
inline PlanarGraph cubes_fixture(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int c = 0; c < k; ++c) {
    int b = 8 * c;
    std::vector<std::pair<int, int>> cube = {
        {0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
        {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    for (auto [a, bb] : cube) pairs.push_back({a + b, bb + b});
  }
  return from_edges(8 * k, pairs);
}

// Cube plus a pendant path of `tail` vertices hanging off vertex 0.
inline PlanarGraph cube_with_tail_fixture(int tail) {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                            {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                            {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  int prev = 0;
  for (int i = 0; i < tail; ++i) {
    pairs.push_back({prev, 8 + i});
    prev = 8 + i;
  }
  return from_edges(8 + tail, pairs);
}

// Theta plus a pendant vertex 6 attached to `anchor`.
inline PlanarGraph theta_with_pendant_fixture(int anchor) {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                            {1, 4}, {2, 4}, {0, 5}, {3, 5}};
  pairs.push_back({anchor, 6});
  return from_edges(7, pairs);
}

}  // namespace inforest::testing
