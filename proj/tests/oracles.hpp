#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls the library's search, flow or LP code except
// where noted.

#include <cstdint>
#include <vector>

#include "fedlab/graph.hpp"
#include "fedlab/rational.hpp"
#include "fedlab/reconfig.hpp"

namespace oracle {

using fedlab::Graph;
using fedlab::Rat;

std::vector<std::vector<int>> distances(const Graph& g);

int domination_number(const Graph& g);
int independence_number(const Graph& g);
/// max over 2-packings P of |P| + [N[P] != V]
int two_packing_bound(const Graph& g);
bool has_efficient_dominating_set(const Graph& g);
/// Smallest vertex cut; n-1 for complete graphs, 0 when disconnected.
int connectivity(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);  // permutations, n <= 8

/// Hall's condition: w1(A) <= w2(N[A]) for every vertex set A.
bool hall_reconfigurable(const Graph& g, const fedlab::FDFunction& w1, const fedlab::FDFunction& w2);
/// Movement-variable feasibility LP (uses the library's simplex, not its flow code).
bool movement_lp_reconfigurable(const Graph& g, const fedlab::FDFunction& w1, const fedlab::FDFunction& w2);

/// Integral all-guards-move eternal domination number by exhaustive game
/// evaluation over guard multisets.
int m_eternal_number(const Graph& g);

/// Every unlabelled tree on n vertices, one labelled representative each.
std::vector<Graph> all_trees(int n);

Graph random_graph(int n, int percent, std::uint64_t seed);
/// Weights k/den with small k, total fixed.
std::vector<fedlab::FDFunction> grid_weights(int n, int den, int total_num);

}  // namespace oracle
