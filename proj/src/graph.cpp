#include "fedlab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "fedlab/error.hpp"

namespace fedlab {

namespace {

struct FamilyName {
  Family family;
  const char* name;
  int min_arity;
  int max_arity;
};

constexpr FamilyName kFamilies[] = {
    {Family::path, "path", 1, 1},
    {Family::cycle, "cycle", 1, 1},
    {Family::complete, "complete", 1, 1},
    {Family::complete_multipartite, "complete_multipartite", 1, 64},
    {Family::star, "star", 1, 1},
    {Family::kneser, "kneser", 2, 2},
    {Family::hypercube, "hypercube", 1, 1},
    {Family::prism, "prism", 1, 1},
    {Family::moebius, "moebius", 1, 1},
    {Family::gtd, "gtd", 2, 2},
    {Family::gq, "gq", 3, 3},
    {Family::tree, "tree", 1, 2},
    {Family::grid, "grid", 2, 2},
    {Family::strong_grid, "strong_grid", 2, 2},
    {Family::generic, "generic", 0, 64},
};

const FamilyName& lookup(Family f) {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry;
  }
  return kFamilies[std::size(kFamilies) - 1];
}

}  // namespace

const char* to_string(Family f) { return lookup(f).name; }

std::optional<Family> family_from_string(const std::string& name) {
  for (const auto& entry : kFamilies) {
    if (name == entry.name) return entry.family;
  }
  return std::nullopt;
}

void check_tag_arity(const ClassTag& tag) {
  const auto& entry = lookup(tag.family);
  int k = static_cast<int>(tag.params.size());
  if (k < entry.min_arity || k > entry.max_arity) {
    throw Error(ErrorCode::invalid_params, std::string("wrong number of parameters for family ") + entry.name);
  }
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::optional<ClassTag> tag) : tag_(std::move(tag)) {
  if (n < 1) throw Error(ErrorCode::invalid_graph, "graph needs at least one vertex");
  if (tag_) check_tag_arity(*tag_);
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::invalid_graph, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw Error(ErrorCode::invalid_graph, "self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw Error(ErrorCode::invalid_graph, "duplicate edge at vertex " + std::to_string(v));
    }
    m_ += a.size();
  }
  m_ /= 2;
}

VertexSet Graph::closed(int v) const {
  VertexSet out = adj_[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Graph::adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

int Graph::min_degree() const {
  int d = n();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_tag(std::optional<ClassTag> tag) const {
  Graph g = *this;
  if (tag) check_tag_arity(*tag);
  g.tag_ = std::move(tag);
  return g;
}

Graph Graph::without(const VertexSet& removed) const {
  std::vector<int> label(n(), 0);
  for (int v : removed) label[v] = -1;
  int next = 0;
  for (int v = 0; v < n(); ++v) {
    if (label[v] == 0) label[v] = next++;
  }
  std::vector<Edge> kept;
  for (auto [u, v] : edges()) {
    if (label[u] >= 0 && label[v] >= 0) kept.emplace_back(label[u], label[v]);
  }
  return Graph(next, kept);
}

std::uint64_t Graph::closed_mask(int v) const {
  std::uint64_t m = std::uint64_t{1} << v;
  for (int u : adj_[v]) m |= std::uint64_t{1} << u;
  return m;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw Error(ErrorCode::parse_error, "edge list header must be 'n m'");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw Error(ErrorCode::parse_error, "edge list truncated at edge " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::parse_error, "trailing data after edge list");
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace fedlab
