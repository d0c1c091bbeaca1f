#include <stdexcept>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"

namespace fedlab {

namespace {

// x(i,v): weight of state i at vertex v
int xvar(int n, int i, int v) { return i * n + v; }

// FDS rows for every state, equal totals, objective = total of state 0.
LPModel state_block(const Graph& g) {
  int n = g.n();
  LPModel lp(n * n);
  for (int v = 0; v < n; ++v) lp.set_objective(xvar(n, 0, v), 1);
  for (int i = 0; i < n; ++i) {
    lp.add_constraint({{xvar(n, i, i), 1}}, Relation::eq, 1, "pin " + std::to_string(i));
    for (int v = 0; v < n; ++v) {
      std::vector<Term> row;
      for (int u : g.closed(v)) row.push_back({xvar(n, i, u), 1});
      lp.add_constraint(std::move(row), Relation::ge, 1, "fds " + std::to_string(i) + " N[" + std::to_string(v) + "]");
    }
  }
  for (int i = 1; i < n; ++i) {
    std::vector<Term> row;
    for (int v = 0; v < n; ++v) {
      row.push_back({xvar(n, i, v), 1});
      row.push_back({xvar(n, 0, v), -1});
    }
    lp.add_constraint(std::move(row), Relation::eq, 0, "total " + std::to_string(i));
  }
  return lp;
}

std::vector<FDFunction> states_of(const LPSolution& sol, int n) {
  std::vector<FDFunction> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> w(sol.assignment.begin() + i * n, sol.assignment.begin() + (i + 1) * n);
    out.emplace_back(std::move(w));
  }
  return out;
}

void check_budget(const Graph& g, int budget) {
  if (g.n() > budget) {
    throw Error(ErrorCode::size_limit_exceeded,
                "program A is limited to n <= " + std::to_string(budget) + ", got " + std::to_string(g.n()));
  }
}

}  // namespace

LPModel build_program_a(const Graph& g) {
  int n = g.n();
  LPModel lp = state_block(g);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::string pair = std::to_string(i) + "->" + std::to_string(j);
      std::vector<int> src(n), snk(n);
      std::vector<std::vector<std::pair<int, int>>> out(n), in(n);  // (var, other end)
      for (int v = 0; v < n; ++v) src[v] = lp.add_variable(0, "src " + pair + " " + std::to_string(v));
      for (int v = 0; v < n; ++v) {
        for (int u : g.closed(v)) {
          int f = lp.add_variable(0, "mid " + pair + " " + std::to_string(v) + "," + std::to_string(u));
          out[v].push_back({f, u});
          in[u].push_back({f, v});
        }
      }
      for (int v = 0; v < n; ++v) snk[v] = lp.add_variable(0, "snk " + pair + " " + std::to_string(v));
      for (int v = 0; v < n; ++v) {
        std::vector<Term> left{{src[v], 1}};
        for (auto [f, u] : out[v]) left.push_back({f, -1});
        lp.add_constraint(std::move(left), Relation::eq, 0, "conserve left " + pair);
        std::vector<Term> right{{snk[v], -1}};
        for (auto [f, u] : in[v]) right.push_back({f, 1});
        lp.add_constraint(std::move(right), Relation::eq, 0, "conserve right " + pair);
        lp.add_constraint({{src[v], 1}, {xvar(n, i, v), -1}}, Relation::le, 0, "cap source " + pair);
        lp.add_constraint({{snk[v], 1}, {xvar(n, j, v), -1}}, Relation::le, 0, "cap sink " + pair);
      }
      std::vector<Term> value;
      for (int v = 0; v < n; ++v) {
        value.push_back({src[v], 1});
        value.push_back({xvar(n, i, v), -1});
      }
      lp.add_constraint(std::move(value), Relation::eq, 0, "flow value " + pair);
    }
  }
  return lp;
}

Rat solve_program_a_direct(const Graph& g) {
  auto sol = solve(build_program_a(g));
  if (sol.status != LPStatus::optimal) throw std::logic_error("program A must be feasible");
  return sol.value;
}

ProgramAResult solve_program_a(const Graph& g, std::optional<int> budget) {
  check_budget(g, budget.value_or(lp_budget()));
  int n = g.n();
  LPSession lp(state_block(g));
  ProgramAResult res;
  std::vector<FDFunction> states;
  while (true) {
    auto sol = lp.solve();
    if (sol.status != LPStatus::optimal) throw std::logic_error("program A relaxation must be feasible");
    states = states_of(sol, n);
    res.value = sol.value;
    int added = 0;
    // both directions of each pair give different cuts, so test all ordered pairs
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        auto net = build_reconfig_network(g, states[i], states[j]);
        auto flow = max_flow(net);
        if (flow.value == res.value) continue;
        // left nodes on the source side form a set A whose weight in state i
        // exceeds the weight of N[A] in state j
        std::vector<char> in_a(n, 0), in_na(n, 0);
        for (int v = 0; v < n; ++v) {
          if (!flow.source_side[net.left(v)]) continue;
          in_a[v] = 1;
          for (int u : g.closed(v)) in_na[u] = 1;
        }
        std::vector<Term> row;
        for (int v = 0; v < n; ++v) {
          if (in_na[v]) row.push_back({xvar(n, j, v), 1});
          if (in_a[v]) row.push_back({xvar(n, i, v), -1});
        }
        lp.add_constraint(std::move(row), Relation::ge, 0, "hall " + std::to_string(i) + "->" + std::to_string(j));
        ++added;
      }
    }
    ++res.cut_rounds;
    res.cuts += added;
    if (added == 0) break;
  }

  auto& cert = res.certificate;
  cert.weight = res.value;
  cert.states = states;
  cert.cover.resize(n);
  for (int v = 0; v < n; ++v) cert.cover[v] = v;
  cert.pairwise = true;
  cert.provenance = "lp_a";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !can_reconfigure(g, states[i], states[j])) {
        throw std::logic_error("program A states are not pairwise reconfigurable");
      }
  return res;
}

}  // namespace fedlab
