#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fedlab/graph.hpp"

namespace fedlab {

/// Exhaustive searches (domination, independence, packings) refuse larger graphs.
inline constexpr int kSearchLimit = 32;
/// Isomorphism matching inside classify().
inline constexpr int kIsoLimit = 24;

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<int> eccentricities(const Graph& g);

int domination_number(const Graph& g);
VertexSet minimum_dominating_set(const Graph& g);
int independence_number(const Graph& g);

/// Vertices pairwise at distance >= 3.
bool is_two_packing(const Graph& g, const VertexSet& s);

struct PackingBound {
  int bound = 0;
  VertexSet witness;
  bool strict = false;  // witness misses part of V, so one more is added
};
PackingBound two_packing_lower(const Graph& g);
/// Largest 2-packing, lexicographically least among the largest.
VertexSet maximum_two_packing(const Graph& g);

std::optional<VertexSet> efficient_dominating_set(const Graph& g);

int connectivity(const Graph& g);
/// Internally vertex-disjoint s-t paths, shortest first. Throws
/// insufficient_connectivity when fewer than k exist.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, int s, int t, int k);

bool isomorphic(const Graph& a, const Graph& b);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};
bool is_split_partition(const Graph& g, const SplitPartition& p);
std::optional<SplitPartition> split_partition(const Graph& g);

struct Classification {
  bool is_complete = false;
  bool has_universal_vertex = false;
  bool every_edge_dominating = false;
  bool is_connected = false;
  bool is_tree = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_star = false;
  bool is_complete_multipartite = false;
  std::vector<int> parts;  // part sizes when complete multipartite
  std::optional<SplitPartition> split;
  std::optional<ClassTag> cubic_match;  // complete(4), hypercube(3), prism(k) or moebius(k)
  std::vector<ClassTag> tags;
};
Classification classify(const Graph& g);

}  // namespace fedlab
