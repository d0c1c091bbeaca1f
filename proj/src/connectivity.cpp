#include <algorithm>
#include <queue>

#include "fedlab/error.hpp"
#include "fedlab/graph_algorithms.hpp"

namespace fedlab {

namespace {

// Unit-capacity network where vertex v becomes v_in = 2v and v_out = 2v+1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t) : g_(g), s_(s), t_(t), n_(2 * g.n()) {
    head_.assign(n_, -1);
    for (int v = 0; v < g.n(); ++v) {
      int cap = (v == s || v == t) ? g.n() : 1;
      add(2 * v, 2 * v + 1, cap);
    }
    for (auto [u, v] : g.edges()) {
      add(2 * u + 1, 2 * v, 1);
      add(2 * v + 1, 2 * u, 1);
    }
  }

  // Augments until `limit` units flow or no path remains.
  int flow(int limit) {
    int total = 0;
    int src = 2 * s_ + 1, snk = 2 * t_;
    while (total < limit) {
      std::vector<int> via(n_, -1);
      std::vector<char> seen(n_, 0);
      std::queue<int> q;
      q.push(src);
      seen[src] = 1;
      while (!q.empty() && !seen[snk]) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && !seen[to_[a]]) {
            seen[to_[a]] = 1;
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (!seen[snk]) break;
      for (int x = snk; x != src; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++total;
    }
    return total;
  }

  // Follows saturated forward arcs from s; each walk is one path.
  std::vector<std::vector<int>> paths(int count) {
    std::vector<std::vector<int>> out;
    std::vector<int> used(to_.size(), 0);
    for (int p = 0; p < count; ++p) {
      std::vector<int> path{s_};
      int x = 2 * s_ + 1;
      while (x != 2 * t_) {
        int chosen = -1;
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if ((a & 1) == 0 && orig_[a] - cap_[a] - used[a] > 0 && to_[a] != 2 * s_) {
            chosen = a;
            break;
          }
        }
        ++used[chosen];
        x = to_[chosen];
        int v = x / 2;
        path.push_back(v);
        if (x != 2 * t_) x = 2 * v + 1;
      }
      out.push_back(path);
    }
    return out;
  }

 private:
  void add(int a, int b, int c) {
    for (auto [x, y, cc] : {std::tuple{a, b, c}, std::tuple{b, a, 0}}) {
      to_.push_back(y);
      cap_.push_back(cc);
      orig_.push_back(cc);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }

  const Graph& g_;
  int s_, t_, n_;
  std::vector<int> head_, next_, to_, cap_, orig_;
};

}  // namespace

int connectivity(const Graph& g) {
  int n = g.n();
  if (n == 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      SplitNetwork net(g, s, t);
      best = std::min(best, net.flow(best));
    }
  }
  return std::min(best, g.min_degree());
}

std::vector<std::vector<int>> disjoint_paths(const Graph& g, int s, int t, int k) {
  if (s < 0 || t < 0 || s >= g.n() || t >= g.n() || s == t || k < 0) {
    throw Error(ErrorCode::invalid_params, "disjoint_paths needs distinct valid endpoints");
  }
  SplitNetwork net(g, s, t);
  int got = net.flow(k);
  if (got < k) {
    throw Error(ErrorCode::insufficient_connectivity,
                "only " + std::to_string(got) + " disjoint paths between " + std::to_string(s) + " and " + std::to_string(t));
  }
  auto out = net.paths(k);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace fedlab
