// Exact maximum induced forest oracles.
//
// max_induced_forest runs branch-and-bound: find a cycle in what remains,
// branch on its smallest undecided vertex (delete it, or pin it into the
// forest), and prune with the bound |remaining| minus a greedily packed set
// of vertex-disjoint cycles. A second pass then grows the lexicographically
// smallest optimum witness one vertex at a time.
//
// brute_force_tiny enumerates vertex subsets outright and is limited to 20
// vertices; it exists to cross-check the branch-and-bound on small hosts.
#pragma once

#include <vector>

#include "inforest/graph.hpp"

namespace inforest {

struct ForestSearch {
  int size = 0;                    // maximum induced forest order
  std::vector<VertexId> witness;   // lexicographically smallest optimum
  long long nodes = 0;             // search nodes spent (brute: subsets seen)
};

// Throws BudgetExceeded when the node budget runs out.
ForestSearch max_induced_forest(const PlanarGraph& g,
                                long long node_budget = 50'000'000);

// Exhaustive reference; InvalidInput beyond 20 vertices.
ForestSearch brute_force_tiny(const PlanarGraph& g);

}  // namespace inforest
