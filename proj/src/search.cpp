#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>

#include "fedlab/error.hpp"
#include "fedlab/graph_algorithms.hpp"

namespace fedlab {

namespace {

using Mask = std::uint64_t;

void check_budget(const Graph& g, const char* what) {
  if (g.n() > kSearchLimit) {
    throw Error(ErrorCode::size_limit_exceeded, std::string(what) + " is limited to n <= " +
                                                    std::to_string(kSearchLimit) + ", got " + std::to_string(g.n()));
  }
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = g.closed_mask(v);
  return out;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<int> bfs_dist(const Graph& g, int s) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

// Branch and bound for a minimum dominating set.
struct DomSearch {
  std::vector<Mask> nb;
  int max_cover = 1;
  Mask all = 0;
  Mask best_set = 0;
  int best = 0;

  void run(Mask chosen, Mask dominated, int size) {
    if (dominated == all) {
      if (size < best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    int left = std::popcount(all & ~dominated);
    if (size + (left + max_cover - 1) / max_cover >= best) return;
    // branch on the undominated vertex with fewest ways to dominate it
    int pick = -1, ways = 1 << 30;
    for (Mask m = all & ~dominated; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int w = std::popcount(nb[v]);
      if (w < ways) {
        ways = w;
        pick = v;
      }
    }
    std::vector<int> options = to_set(nb[pick]);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return std::popcount(nb[a] & ~dominated) > std::popcount(nb[b] & ~dominated);
    });
    for (int u : options) run(chosen | (Mask{1} << u), dominated | nb[u], size + 1);
  }
};

int alpha_rec(const std::vector<Mask>& open, Mask cand) {
  if (!cand) return 0;
  int best_v = -1, best_deg = -1;
  for (Mask m = cand; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(open[v] & cand);
    if (d <= 1) return 1 + alpha_rec(open, cand & ~(open[v] | (Mask{1} << v)));
    if (d > best_deg) {
      best_deg = d;
      best_v = v;
    }
  }
  Mask bit = Mask{1} << best_v;
  int with = 1 + alpha_rec(open, cand & ~(open[best_v] | bit));
  int without = alpha_rec(open, cand & ~bit);
  return std::max(with, without);
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw Error(ErrorCode::invalid_params, "vertex out of range: " + std::to_string(v));
    in[v] = 1;
    for (int u : g.neighbors(v)) in[u] = 1;
  }
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  auto d = bfs_dist(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const Graph& g) { return g.edge_count() + 1 == static_cast<std::size_t>(g.n()) && is_connected(g); }

std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto d = bfs_dist(g, v);
    ecc[v] = *std::max_element(d.begin(), d.end());
  }
  return ecc;
}

VertexSet minimum_dominating_set(const Graph& g) {
  check_budget(g, "domination search");
  DomSearch s;
  s.nb = closed_masks(g);
  s.all = full_mask(g.n());
  for (Mask m : s.nb) s.max_cover = std::max(s.max_cover, std::popcount(m));
  // greedy start
  Mask dom = 0, chosen = 0;
  while (dom != s.all) {
    int pick = 0, gain = -1;
    for (int v = 0; v < g.n(); ++v) {
      int c = std::popcount(s.nb[v] & ~dom);
      if (c > gain) {
        gain = c;
        pick = v;
      }
    }
    chosen |= Mask{1} << pick;
    dom |= s.nb[pick];
  }
  s.best = std::popcount(chosen);
  s.best_set = chosen;
  s.run(0, 0, 0);
  return to_set(s.best_set);
}

int domination_number(const Graph& g) { return static_cast<int>(minimum_dominating_set(g).size()); }

int independence_number(const Graph& g) {
  check_budget(g, "independence search");
  std::vector<Mask> open(g.n());
  for (int v = 0; v < g.n(); ++v) open[v] = g.closed_mask(v) & ~(Mask{1} << v);
  return alpha_rec(open, full_mask(g.n()));
}

bool is_two_packing(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto d = bfs_dist(g, s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || (d[s[j]] >= 0 && d[s[j]] < 3)) return false;
    }
  }
  return true;
}

namespace {

// Pre-order DFS over 2-packings in lexicographic order; only maximal packings
// are scored (adding a vertex never lowers the value). Only strictly better
// values replace the incumbent, so the reported witness is lexicographically
// least among optimal ones.
struct PackingSearch {
  std::vector<Mask> nb;
  Mask all = 0;
  int min_closed = 1;
  bool count_uncovered = true;
  int best = -1;
  Mask best_set = 0;

  int value(Mask chosen, Mask covered) const {
    int v = std::popcount(chosen);
    if (count_uncovered && covered != all) ++v;
    return v;
  }

  bool maximal(Mask covered) const {
    for (Mask v : nb)
      if (!(v & covered)) return false;
    return true;
  }

  void run(Mask chosen, Mask covered, int next) {
    int val = value(chosen, covered);
    if (val > best && maximal(covered)) {
      best = val;
      best_set = chosen;
    }
    int n = static_cast<int>(nb.size());
    Mask avail = 0;
    for (int v = next; v < n; ++v)
      if (!(nb[v] & covered)) avail |= Mask{1} << v;
    int room = std::min(std::popcount(avail), std::popcount(all & ~covered) / min_closed);
    if (std::popcount(chosen) + room + (count_uncovered ? 1 : 0) <= best) return;
    for (Mask m = avail; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (nb[v] & covered) continue;
      run(chosen | (Mask{1} << v), covered | nb[v], v + 1);
    }
  }
};

PackingSearch packing_search(const Graph& g, bool count_uncovered) {
  PackingSearch s;
  s.nb = closed_masks(g);
  s.all = full_mask(g.n());
  s.min_closed = g.min_degree() + 1;
  s.count_uncovered = count_uncovered;
  s.run(0, 0, 0);
  return s;
}

}  // namespace

PackingBound two_packing_lower(const Graph& g) {
  check_budget(g, "packing search");
  auto s = packing_search(g, true);
  PackingBound out;
  out.bound = s.best;
  out.witness = to_set(s.best_set);
  Mask covered = 0;
  for (int v : out.witness) covered |= s.nb[v];
  out.strict = covered != s.all;
  return out;
}

VertexSet maximum_two_packing(const Graph& g) {
  check_budget(g, "packing search");
  return to_set(packing_search(g, false).best_set);
}

std::optional<VertexSet> efficient_dominating_set(const Graph& g) {
  check_budget(g, "efficient domination search");
  auto nb = closed_masks(g);
  Mask all = full_mask(g.n());
  std::optional<Mask> best;
  auto lex_less = [](Mask a, Mask b) {
    // compare sorted member sequences
    while (a && b) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return !a && b;
  };
  std::function<void(Mask, Mask)> rec = [&](Mask chosen, Mask covered) {
    if (covered == all) {
      if (!best || lex_less(chosen, *best)) best = chosen;
      return;
    }
    int v = std::countr_zero(all & ~covered);
    for (Mask m = nb[v]; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (nb[u] & covered) continue;
      rec(chosen | (Mask{1} << u), covered | nb[u]);
    }
  };
  rec(0, 0);
  if (!best) return std::nullopt;
  return to_set(*best);
}

}  // namespace fedlab
