#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fedlab {

enum class Family {
  path,
  cycle,
  complete,
  complete_multipartite,
  star,
  kneser,
  hypercube,
  prism,
  moebius,
  gtd,
  gq,
  tree,
  grid,
  strong_grid,
  generic,
};

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

struct ClassTag {
  Family family = Family::generic;
  std::vector<long long> params;

  bool operator==(const ClassTag&) const = default;
};

/// Throws invalid_params when the parameter count does not fit the family.
void check_tag_arity(const ClassTag& tag);

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph(int n, const std::vector<Edge>& edges, std::optional<ClassTag> tag = std::nullopt);

  int n() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  VertexSet closed(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  std::size_t edge_count() const { return m_; }
  std::vector<Edge> edges() const;
  const std::optional<ClassTag>& tag() const { return tag_; }
  Graph with_tag(std::optional<ClassTag> tag) const;

  /// Induced subgraph on the remaining vertices, relabelled in increasing
  /// order. Needs at least one survivor.
  Graph without(const VertexSet& removed) const;

  /// Closed neighbourhood of v as a bitmask; only valid for n <= 64.
  std::uint64_t closed_mask(int v) const;

  bool same_edges(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
  std::optional<ClassTag> tag_;
};

/// "n m" header then m lines "i j".
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace fedlab
