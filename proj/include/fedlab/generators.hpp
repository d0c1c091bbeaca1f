#pragma once

#include <cstdint>

#include "fedlab/graph.hpp"

namespace fedlab {

enum class ProductKind { cartesian, strong };

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
/// K_{1,leaves}, centre 0.
Graph star_graph(int leaves);
/// k-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
Graph kneser_graph(int n, int k);
Graph hypercube(int d);
/// C_n x K_2 with (i,j) -> 2i+j.
Graph prism_graph(int n);
/// Circulant on Z_{2n} with connection set {+-1, n}.
Graph moebius_graph(int n);
/// Clique X = 0..t-1, then Y and Y' (d-subsets of X, lexicographic), each
/// joined to the members of its subset.
Graph gtd_graph(int t, int d);
/// gtd(t,d) with every Y and Y' vertex blown up into a path on h vertices.
Graph gq_graph(int t, int d, int h);
Graph grid_graph(int m, int n);
Graph strong_grid_graph(int m, int n);
/// Spine P_{3k}; spine vertices 1, 4, 7, ... each carry two pendant leaves.
Graph caterpillar(int k);
/// Uniform labelled tree from a Pruefer sequence drawn with mt19937_64.
Graph random_tree(int n, std::uint64_t seed);
/// Clique on 0..clique-1, independent rest, each cross edge kept with
/// probability 1/2; every independent vertex gets at least one neighbour.
Graph random_split(int clique, int independent, std::uint64_t seed);

Graph product(const Graph& g, const Graph& h, ProductKind kind);

/// Rebuilds the graph named by a tag. Throws invalid_params for bad params or
/// for tags that do not determine a graph.
Graph generate(const ClassTag& tag);

long long binomial(int n, int k);
/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace fedlab
