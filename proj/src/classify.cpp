#include <algorithm>
#include <numeric>

#include "fedlab/error.hpp"
#include "fedlab/generators.hpp"
#include "fedlab/graph_algorithms.hpp"

namespace fedlab {

namespace {

// Vertex invariant used to restrict candidate images: degree plus the sorted
// degrees of the neighbours.
std::vector<std::vector<int>> signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(g.n());
  for (int v = 0; v < g.n(); ++v) {
    sig[v].push_back(g.degree(v));
    for (int u : g.neighbors(v)) sig[v].push_back(g.degree(u));
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<std::vector<int>> sa, sb;
  std::vector<int> order;  // BFS order of a
  std::vector<int> map, used;

  IsoSearch(const Graph& ga, const Graph& gb) : a(ga), b(gb), sa(signatures(ga)), sb(signatures(gb)) {
    std::vector<char> seen(a.n(), 0);
    for (int r = 0; r < a.n(); ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      order.push_back(r);
      for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
        for (int u : a.neighbors(order[i])) {
          if (!seen[u]) {
            seen[u] = 1;
            order.push_back(u);
          }
        }
      }
    }
    map.assign(a.n(), -1);
    used.assign(b.n(), 0);
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < b.n(); ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int x = order[i];
        ok = a.adjacent(v, x) == b.adjacent(w, map[x]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  }
};

bool complete_multipartite_parts(const Graph& g, std::vector<int>& parts) {
  // non-adjacency must be an equivalence relation
  std::vector<int> part(g.n(), -1);
  int count = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (part[v] >= 0) continue;
    for (int u = v; u < g.n(); ++u) {
      if (u == v || !g.adjacent(u, v)) {
        if (part[u] >= 0) return false;
        part[u] = count;
      }
    }
    ++count;
  }
  parts.assign(count, 0);
  for (int v = 0; v < g.n(); ++v) ++parts[part[v]];
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if ((part[u] == part[v]) == g.adjacent(u, v)) return false;
  return count >= 2;
}

bool exhaustive_split(const Graph& g, SplitPartition& out) {
  if (g.n() > kIsoLimit) return false;
  for (unsigned long mask = 0; mask < (1ul << g.n()); ++mask) {
    SplitPartition p;
    for (int v = 0; v < g.n(); ++v) (mask >> v & 1 ? p.clique : p.independent).push_back(v);
    if (is_split_partition(g, p)) {
      out = p;
      return true;
    }
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  IsoSearch s(a, b);
  auto ka = s.sa, kb = s.sb;
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  return s.extend(0);
}

bool is_split_partition(const Graph& g, const SplitPartition& p) {
  std::vector<int> seen(g.n(), 0);
  for (const auto* side : {&p.clique, &p.independent})
    for (int v : *side) {
      if (v < 0 || v >= g.n() || seen[v]++) return false;
    }
  if (std::count(seen.begin(), seen.end(), 1) != g.n()) return false;
  for (std::size_t i = 0; i < p.clique.size(); ++i)
    for (std::size_t j = i + 1; j < p.clique.size(); ++j)
      if (!g.adjacent(p.clique[i], p.clique[j])) return false;
  for (std::size_t i = 0; i < p.independent.size(); ++i)
    for (std::size_t j = i + 1; j < p.independent.size(); ++j)
      if (g.adjacent(p.independent[i], p.independent[j])) return false;
  return true;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  // Hammer-Simeone degree test: with degrees sorted descending and m the
  // largest i with d_i >= i-1, G is split iff the top m vertices form a
  // clique and the rest are independent.
  int n = g.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + m);
  p.independent.assign(order.begin() + m, order.end());
  if (!is_split_partition(g, p) && !exhaustive_split(g, p)) return std::nullopt;
  // prefer the smaller clique: a clique vertex with no independent neighbour
  // can join the independent side
  std::sort(p.clique.begin(), p.clique.end());
  for (int x : p.clique) {
    bool lonely = std::none_of(p.independent.begin(), p.independent.end(), [&](int y) { return g.adjacent(x, y); });
    if (lonely && p.clique.size() > 1) {
      p.clique.erase(std::find(p.clique.begin(), p.clique.end(), x));
      p.independent.push_back(x);
      break;
    }
  }
  std::sort(p.independent.begin(), p.independent.end());
  return p;
}

Classification classify(const Graph& g) {
  Classification c;
  int n = g.n();
  std::size_t m = g.edge_count();
  c.is_complete = m == static_cast<std::size_t>(n) * (n - 1) / 2;
  c.is_connected = is_connected(g);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) c.has_universal_vertex = true;
  c.every_edge_dominating = m > 0;
  for (auto [u, v] : g.edges()) {
    auto cover = closed_neighborhood(g, {u, v});
    if (static_cast<int>(cover.size()) != n) {
      c.every_edge_dominating = false;
      break;
    }
  }
  c.is_tree = is_tree(g);
  c.is_path = c.is_tree && g.max_degree() <= 2;
  c.is_cycle = n >= 3 && c.is_connected && g.min_degree() == 2 && g.max_degree() == 2;
  c.is_star = c.is_tree && n >= 3 && c.has_universal_vertex;
  c.is_complete_multipartite = complete_multipartite_parts(g, c.parts);
  if (!c.is_complete_multipartite) c.parts.clear();
  c.split = split_partition(g);

  if (c.is_complete) c.tags.push_back({Family::complete, {n}});
  if (c.is_path) c.tags.push_back({Family::path, {n}});
  if (c.is_cycle) c.tags.push_back({Family::cycle, {n}});
  if (c.is_star) c.tags.push_back({Family::star, {n - 1}});
  if (c.is_tree) c.tags.push_back({Family::tree, {n}});
  if (c.is_complete_multipartite) {
    c.tags.push_back({Family::complete_multipartite, std::vector<long long>(c.parts.begin(), c.parts.end())});
  }

  if (n >= 4 && g.min_degree() == 3 && g.max_degree() == 3) {
    if (n > kIsoLimit) {
      throw Error(ErrorCode::size_limit_exceeded, "cubic isomorphism matching is limited to n <= " + std::to_string(kIsoLimit));
    }
    std::vector<std::pair<ClassTag, Graph>> candidates;
    if (n == 4) candidates.emplace_back(ClassTag{Family::complete, {4}}, complete_graph(4));
    if (n == 8) candidates.emplace_back(ClassTag{Family::hypercube, {3}}, hypercube(3));
    if (n % 2 == 0 && n / 2 >= 3) {
      candidates.emplace_back(ClassTag{Family::prism, {n / 2}}, prism_graph(n / 2));
      candidates.emplace_back(ClassTag{Family::moebius, {n / 2}}, moebius_graph(n / 2));
    }
    for (const auto& [tag, h] : candidates) {
      if (isomorphic(g, h)) {
        c.cubic_match = tag;
        if (tag.family != Family::complete) c.tags.push_back(tag);
        break;
      }
    }
  }
  return c;
}

}  // namespace fedlab
