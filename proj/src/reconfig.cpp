#include "fedlab/reconfig.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "fedlab/error.hpp"

namespace fedlab {

Rat FDFunction::total() const { return sum(weights); }

Rat closed_sum(const Graph& g, const FDFunction& w, int v) {
  Rat s = w[v];
  for (int u : g.neighbors(v)) s += w[u];
  return s;
}

bool is_fractional_dominating(const Graph& g, const FDFunction& w) {
  if (w.size() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (sgn(w[v]) < 0 || closed_sum(g, w, v) < 1) return false;
  }
  return true;
}

void check_weights(const Graph& g, const FDFunction& w) {
  if (w.size() != g.n()) {
    throw Error(ErrorCode::dimension_mismatch,
                "weight vector has " + std::to_string(w.size()) + " entries, graph has " + std::to_string(g.n()) + " vertices");
  }
  for (int v = 0; v < g.n(); ++v) {
    if (sgn(w[v]) < 0) throw Error(ErrorCode::invalid_params, "negative weight at vertex " + std::to_string(v));
  }
}

ReconfigNetwork build_reconfig_network(const Graph& g, const FDFunction& w1, const FDFunction& w2) {
  check_weights(g, w1);
  check_weights(g, w2);
  ReconfigNetwork net;
  net.n = g.n();
  Rat big = w1.total();
  for (int v = 0; v < g.n(); ++v) net.arcs.push_back({net.source(), net.left(v), w1[v], false});
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.closed(v)) net.arcs.push_back({net.left(v), net.right(u), big, true});
  for (int v = 0; v < g.n(); ++v) net.arcs.push_back({net.right(v), net.sink(), w2[v], false});
  return net;
}

FlowResult max_flow(const ReconfigNetwork& net) {
  int nodes = net.node_count();
  // residual graph: arc 2k is arc k forward, 2k+1 its reverse
  std::size_t m = net.arcs.size();
  std::vector<Rat> resid(2 * m);
  std::vector<std::vector<int>> out(nodes);
  for (std::size_t k = 0; k < m; ++k) {
    resid[2 * k] = net.arcs[k].capacity;
    out[net.arcs[k].from].push_back(static_cast<int>(2 * k));
    out[net.arcs[k].to].push_back(static_cast<int>(2 * k + 1));
  }
  auto head = [&](int r) { return r % 2 == 0 ? net.arcs[r / 2].to : net.arcs[r / 2].from; };

  FlowResult res;
  res.value = 0;
  int s = net.source(), t = net.sink();
  std::vector<int> via(nodes);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<char> seen(nodes, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int x = q.front();
      q.pop();
      for (int r : out[x]) {
        int y = head(r);
        if (!seen[y] && sgn(resid[r]) > 0) {
          seen[y] = 1;
          via[y] = r;
          q.push(y);
        }
      }
    }
    if (!seen[t]) {
      res.source_side = seen;
      break;
    }
    Rat push = resid[via[t]];
    for (int y = t; y != s; y = head(via[y] ^ 1))
      if (resid[via[y]] < push) push = resid[via[y]];
    for (int y = t; y != s; y = head(via[y] ^ 1)) {
      resid[via[y]] -= push;
      resid[via[y] ^ 1] += push;
    }
    res.value += push;
  }
  res.arc_flow.resize(m);
  for (std::size_t k = 0; k < m; ++k) res.arc_flow[k] = resid[2 * k + 1];
  return res;
}

std::optional<MovePlan> can_reconfigure(const Graph& g, const FDFunction& w1, const FDFunction& w2) {
  check_weights(g, w1);
  check_weights(g, w2);
  Rat total = w1.total();
  if (total != w2.total()) {
    throw Error(ErrorCode::total_weight_mismatch, "totals differ: " + to_string(total) + " vs " + to_string(w2.total()));
  }
  auto net = build_reconfig_network(g, w1, w2);
  auto flow = max_flow(net);
  if (flow.value != total) return std::nullopt;
  MovePlan plan;
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    const auto& a = net.arcs[k];
    if (!a.unbounded || sgn(flow.arc_flow[k]) == 0) continue;
    plan.push_back({a.from - 1, a.to - net.n - 1, flow.arc_flow[k]});
  }
  return plan;
}

FDFunction apply_move_plan(const Graph& g, const FDFunction& w, const MovePlan& plan) {
  check_weights(g, w);
  std::vector<Rat> outflow(g.n());
  FDFunction next = w;
  for (const auto& mv : plan) {
    if (mv.from < 0 || mv.from >= g.n() || mv.to < 0 || mv.to >= g.n()) {
      throw Error(ErrorCode::illegal_move, "move references a vertex outside the graph");
    }
    if (mv.from != mv.to && !g.adjacent(mv.from, mv.to)) {
      throw Error(ErrorCode::illegal_move, "vertex " + std::to_string(mv.from) + " cannot reach " + std::to_string(mv.to));
    }
    if (sgn(mv.amount) <= 0) {
      throw Error(ErrorCode::illegal_move, "nonpositive amount moved from vertex " + std::to_string(mv.from));
    }
    outflow[mv.from] += mv.amount;
    if (mv.from != mv.to) {
      next[mv.from] -= mv.amount;
      next[mv.to] += mv.amount;
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (outflow[v] > w[v]) {
      throw Error(ErrorCode::illegal_move, "vertex " + std::to_string(v) + " sends " + to_string(outflow[v]) + " but holds " +
                                               to_string(w[v]));
    }
  }
  return next;
}

}  // namespace fedlab
