#include "fedlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fedlab/error.hpp"

namespace fedlab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::invalid_params, msg);
}

constexpr int kMaxGeneratedOrder = 1 << 16;

int as_int(long long v, const char* what) {
  require(v >= -kMaxGeneratedOrder && v <= kMaxGeneratedOrder, std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e, ClassTag{Family::path, {n}});
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e, ClassTag{Family::cycle, {n}});
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e, ClassTag{Family::complete, {n}});
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), "complete multipartite needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "parts must be nonempty");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return Graph(n, e, ClassTag{Family::complete_multipartite, std::vector<long long>(parts.begin(), parts.end())});
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e, ClassTag{Family::star, {leaves}});
}

Graph kneser_graph(int n, int k) {
  require(k >= 1 && n >= 2 * k, "kneser needs n >= 2k and k >= 1");
  require(binomial(n, k) <= kMaxGeneratedOrder, "kneser graph too large");
  auto subsets = k_subsets(n, k);
  std::vector<unsigned> masks;
  for (const auto& s : subsets) {
    unsigned m = 0;
    for (int x : s) m |= 1u << x;
    masks.push_back(m);
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == 0) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(masks.size()), e, ClassTag{Family::kneser, {n, k}});
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 16, "hypercube dimension must be in 0..16");
  int n = 1 << d;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (int u = v ^ (1 << b); v < u) e.emplace_back(v, u);
  return Graph(n, e, ClassTag{Family::hypercube, {d}});
}

Graph prism_graph(int n) {
  require(n >= 3, "prism needs n >= 3");
  return product(cycle_graph(n), complete_graph(2), ProductKind::cartesian).with_tag(ClassTag{Family::prism, {n}});
}

Graph moebius_graph(int n) {
  require(n >= 2, "moebius needs n >= 2");
  int m = 2 * n;
  std::set<Edge> e;
  for (int i = 0; i < m; ++i) {
    for (int j : {(i + 1) % m, (i + n) % m}) {
      if (i != j) e.insert(std::minmax(i, j));
    }
  }
  return Graph(m, std::vector<Edge>(e.begin(), e.end()), ClassTag{Family::moebius, {n}});
}

Graph gtd_graph(int t, int d) {
  require(d >= 1 && t >= d, "gtd needs t >= d >= 1");
  require(binomial(t, d) <= kMaxGeneratedOrder / 2, "gtd graph too large");
  auto subsets = k_subsets(t, d);
  int c = static_cast<int>(subsets.size());
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) e.emplace_back(i, j);
  for (int copy = 0; copy < 2; ++copy)
    for (int s = 0; s < c; ++s)
      for (int x : subsets[s]) e.emplace_back(x, t + copy * c + s);
  return Graph(t + 2 * c, e, ClassTag{Family::gtd, {t, d}});
}

Graph gq_graph(int t, int d, int h) {
  require(d >= 1 && t >= d && h >= 1, "gq needs t >= d >= 1 and h >= 1");
  require(binomial(t, d) * h <= kMaxGeneratedOrder / 2, "gq graph too large");
  auto subsets = k_subsets(t, d);
  int c = static_cast<int>(subsets.size());
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) e.emplace_back(i, j);
  int next = t;
  for (int copy = 0; copy < 2; ++copy) {
    for (int s = 0; s < c; ++s) {
      for (int p = 0; p < h; ++p) {
        int v = next + p;
        if (p > 0) e.emplace_back(v - 1, v);
        for (int x : subsets[s]) e.emplace_back(x, v);
      }
      next += h;
    }
  }
  return Graph(next, e, ClassTag{Family::gq, {t, d, h}});
}

Graph grid_graph(int m, int n) {
  require(m >= 1 && n >= 1, "grid needs positive sides");
  return product(path_graph(m), path_graph(n), ProductKind::cartesian).with_tag(ClassTag{Family::grid, {m, n}});
}

Graph strong_grid_graph(int m, int n) {
  require(m >= 1 && n >= 1, "strong grid needs positive sides");
  return product(path_graph(m), path_graph(n), ProductKind::strong).with_tag(ClassTag{Family::strong_grid, {m, n}});
}

Graph caterpillar(int k) {
  require(k >= 1, "caterpillar needs k >= 1");
  int spine = 3 * k;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  for (int r = 0; r < k; ++r) {
    int hub = 3 * r + 1;
    e.emplace_back(hub, spine + 2 * r);
    e.emplace_back(hub, spine + 2 * r + 1);
  }
  int n = spine + 2 * k;
  return Graph(n, e, ClassTag{Family::tree, {n}});
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1, {}, ClassTag{Family::tree, {1, static_cast<long long>(seed)}});
  if (n == 2) return Graph(2, {{0, 1}}, ClassTag{Family::tree, {2, static_cast<long long>(seed)}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> e;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  e.emplace_back(a, b);
  return Graph(n, e, ClassTag{Family::tree, {n, static_cast<long long>(seed)}});
}

Graph random_split(int clique, int independent, std::uint64_t seed) {
  require(clique >= 1 && independent >= 0, "split graph needs a nonempty clique");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) e.emplace_back(i, j);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> anyx(0, clique - 1);
  for (int y = 0; y < independent; ++y) {
    std::vector<int> nb;
    for (int x = 0; x < clique; ++x)
      if (coin(rng)) nb.push_back(x);
    if (nb.empty()) nb.push_back(anyx(rng));
    for (int x : nb) e.emplace_back(x, clique + y);
  }
  return Graph(clique + independent, e, ClassTag{Family::generic, {}});
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  int a = g.n(), b = h.n();
  auto id = [b](int u, int v) { return u * b + v; };
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) {
      for (int v2 : h.neighbors(v))
        if (v < v2) e.emplace_back(id(u, v), id(u, v2));
      for (int u2 : g.neighbors(u)) {
        if (u >= u2) continue;
        e.emplace_back(id(u, v), id(u2, v));
        if (kind == ProductKind::strong) {
          for (int v2 : h.neighbors(v)) e.emplace_back(id(u, v), id(u2, v2));
        }
      }
    }
  }
  return Graph(a * b, e);
}

Graph generate(const ClassTag& tag) {
  check_tag_arity(tag);
  const auto& p = tag.params;
  auto at = [&](std::size_t i, const char* what) { return as_int(p[i], what); };
  switch (tag.family) {
    case Family::path: return path_graph(at(0, "n"));
    case Family::cycle: return cycle_graph(at(0, "n"));
    case Family::complete: return complete_graph(at(0, "n"));
    case Family::complete_multipartite: {
      std::vector<int> parts;
      for (std::size_t i = 0; i < p.size(); ++i) parts.push_back(at(i, "part"));
      return complete_multipartite(parts);
    }
    case Family::star: return star_graph(at(0, "leaves"));
    case Family::kneser: return kneser_graph(at(0, "n"), at(1, "k"));
    case Family::hypercube: return hypercube(at(0, "d"));
    case Family::prism: return prism_graph(at(0, "n"));
    case Family::moebius: return moebius_graph(at(0, "n"));
    case Family::gtd: return gtd_graph(at(0, "t"), at(1, "d"));
    case Family::gq: return gq_graph(at(0, "t"), at(1, "d"), at(2, "h"));
    case Family::grid: return grid_graph(at(0, "m"), at(1, "n"));
    case Family::strong_grid: return strong_grid_graph(at(0, "m"), at(1, "n"));
    case Family::tree:
      if (p.size() == 2) return random_tree(at(0, "n"), static_cast<std::uint64_t>(p[1]));
      throw Error(ErrorCode::invalid_params, "tree tag needs (n, seed) to be generated");
    case Family::generic: break;
  }
  throw Error(ErrorCode::invalid_params, "generic tag does not determine a graph");
}

}  // namespace fedlab
