#include <algorithm>
#include <functional>
#include <map>

#include "fedlab/error.hpp"
#include "fedlab/game.hpp"
#include "fedlab/generators.hpp"

namespace fedlab {

namespace {

MovePlan merged(const std::map<std::pair<int, int>, Rat>& moves) {
  MovePlan plan;
  for (const auto& [key, amount] : moves)
    if (sgn(amount) > 0) plan.push_back({key.first, key.second, amount});
  return plan;
}

MovePlan stay_plan(const FDFunction& w) {
  MovePlan plan;
  for (int v = 0; v < w.size(); ++v)
    if (sgn(w[v]) > 0) plan.push_back({v, v, w[v]});
  return plan;
}

class LpOnline : public Defender {
 public:
  std::string name() const override { return "lp_online"; }

  std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) override {
    int n = g.n();
    LPModel lp;
    std::vector<std::vector<std::pair<int, int>>> into(n);  // (var, source) per destination
    std::vector<std::tuple<int, int, int>> vars;           // (var, from, to)
    for (int x = 0; x < n; ++x) {
      std::vector<Term> out;
      for (int y : g.closed(x)) {
        int m = lp.add_variable();
        vars.emplace_back(m, x, y);
        into[y].push_back({m, x});
        out.push_back({m, 1});
      }
      lp.add_constraint(std::move(out), Relation::eq, state.weights[x], "send " + std::to_string(x));
    }
    int slack = lp.add_variable();
    lp.set_objective(slack, -1);
    for (int v = 0; v < n; ++v) {
      std::vector<Term> row{{slack, -1}};
      for (int u : g.closed(v))
        for (auto [m, x] : into[u]) row.push_back({m, 1});
      lp.add_constraint(std::move(row), Relation::ge, 1, "cover " + std::to_string(v));
    }
    std::vector<Term> hit;
    for (auto [m, x] : into[attack]) hit.push_back({m, 1});
    lp.add_constraint(std::move(hit), Relation::ge, 1, "attack");
    auto sol = solve(lp);
    if (sol.status != LPStatus::optimal) return std::nullopt;
    MovePlan plan;
    for (auto [m, x, y] : vars)
      if (sgn(sol.assignment[m]) > 0) plan.push_back({x, y, sol.assignment[m]});
    return plan;
  }
};

class TableDefender : public Defender {
 public:
  explicit TableDefender(StrategyCertificate cert) : cert_(std::move(cert)) {}
  std::string name() const override { return "table"; }

  std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) override {
    auto it = std::find(cert_.states.begin(), cert_.states.end(), state.weights);
    if (it == cert_.states.end()) throw Error(ErrorCode::wrong_shape, "state is not one of the certificate's states");
    int from = static_cast<int>(it - cert_.states.begin());
    if (cert_.pairwise) {
      int to = cert_.cover[attack];
      if (to == from) return stay_plan(state.weights);
      return can_reconfigure(g, state.weights, cert_.states[to]);
    }
    const Transition* pick = nullptr;
    for (const auto& t : cert_.transitions) {
      if (t.from != from || cert_.states[t.to][attack] < 1) continue;
      if (!pick || t.to == cert_.cover[attack]) pick = &t;
      if (t.to == cert_.cover[attack]) break;
    }
    if (pick) return pick->plan;
    if (state.weights[attack] >= 1) return stay_plan(state.weights);
    return std::nullopt;
  }

 private:
  StrategyCertificate cert_;
};

class ConnectivityUniform : public Defender {
 public:
  explicit ConnectivityUniform(const Graph& g) : k_(connectivity(g)) {
    if (k_ < 1) throw Error(ErrorCode::invalid_params, "connectivity defender needs a connected graph with n >= 2");
  }
  std::string name() const override { return "connectivity_uniform"; }

  std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) override {
    Rat share = rat(1, k_ + 1);
    int rover = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (state.weights[v] == 1 && rover < 0) {
        rover = v;
      } else if (state.weights[v] != share) {
        throw Error(ErrorCode::wrong_shape, "vertex " + std::to_string(v) + " breaks the rover/uniform shape");
      }
    }
    if (rover < 0) throw Error(ErrorCode::wrong_shape, "no rover vertex of weight 1");
    if (rover == attack) return MovePlan{};
    std::map<std::pair<int, int>, Rat> moves;
    for (const auto& path : disjoint_paths(g, rover, attack, k_))
      for (std::size_t i = 0; i + 1 < path.size(); ++i) moves[{path[i], path[i + 1]}] += share;
    return merged(moves);
  }

 private:
  int k_;
};

class DoubleGammaF : public Defender {
 public:
  DoubleGammaF(const Graph& g, const FDFunction& home) : home_(home) {
    check_weights(g, home);
    if (!is_fractional_dominating(g, home)) throw Error(ErrorCode::invalid_params, "home weighting must dominate");
    for (auto& layer : layers_)
      for (int v = 0; v < g.n(); ++v)
        if (sgn(home[v]) > 0) layer[{v, v}] = home[v];
  }
  std::string name() const override { return "double_gamma_f"; }

  std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) override {
    if (!(state.weights == current(g.n()))) throw Error(ErrorCode::wrong_shape, "state does not match the tracked layers");
    auto& active = layers_[turn_ % 2];
    auto& passive = layers_[(turn_ + 1) % 2];
    std::map<std::pair<int, int>, Rat> moves;
    Layer next_active, next_passive;
    // the active layer is at home; its parcels around the attack converge on it
    for (const auto& [key, amount] : active) {
      auto [home, at] = key;
      if (at == home && (home == attack || g.adjacent(home, attack))) {
        if (home != attack) moves[{home, attack}] += amount;
        next_active[{home, attack}] += amount;
      } else {
        next_active[key] += amount;
      }
    }
    // displaced parcels of the passive layer step back home
    for (const auto& [key, amount] : passive) {
      auto [home, at] = key;
      if (at != home) moves[{at, home}] += amount;
      next_passive[{home, home}] += amount;
    }
    active = std::move(next_active);
    passive = std::move(next_passive);
    ++turn_;
    return merged(moves);
  }

 private:
  using Layer = std::map<std::pair<int, int>, Rat>;  // (home, location) -> amount

  FDFunction current(int n) const {
    auto w = FDFunction::zeros(n);
    for (const auto& layer : layers_)
      for (const auto& [key, amount] : layer) w[key.second] += amount;
    return w;
  }

  FDFunction home_;
  Layer layers_[2];
  long turn_ = 0;
};

// Kuhn's augmenting-path matching from `left` into `right`.
std::vector<int> perfect_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
  std::map<int, int> owner;  // right vertex -> left index
  std::vector<int> match(left.size(), -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (seen[j] || !g.adjacent(left[i], right[j])) continue;
      seen[j] = 1;
      auto it = owner.find(static_cast<int>(j));
      if (it == owner.end() || augment(it->second, seen)) {
        owner[static_cast<int>(j)] = static_cast<int>(i);
        match[i] = right[j];
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<char> seen(right.size(), 0);
    if (!augment(i, seen)) throw std::logic_error("regular bipartite graph without a perfect matching");
  }
  return match;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet non_neighbors(const Graph& g, int v) {
  VertexSet out;
  for (int u = 0; u < g.n(); ++u)
    if (u != v && !g.adjacent(u, v)) out.push_back(u);
  return out;
}

class KneserCanonical : public Defender {
 public:
  explicit KneserCanonical(int n) : n_(n) {
    if (n < 5) throw Error(ErrorCode::invalid_params, "Kneser defender needs n >= 5");
  }
  std::string name() const override { return "kneser_canonical"; }

  std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) override {
    int vertices = static_cast<int>(binomial(n_, 2));
    if (g.n() != vertices) throw Error(ErrorCode::wrong_shape, "graph is not KG(n,2)");
    int root = -1;
    for (int v = 0; v < g.n() && root < 0; ++v)
      if (state.weights[v] == 1 && kneser_canonical_state(n_, v) == state.weights) root = v;
    if (root < 0) throw Error(ErrorCode::wrong_shape, "state is not a canonical Kneser state");
    if (attack == root) return MovePlan{};
    return n_ == 5 ? petersen(g, root, attack) : general(g, root, attack);
  }

 private:
  MovePlan general(const Graph& g, int r, int a) const {
    Rat c = rat(1, binomial(n_ - 3, 2));
    std::map<std::pair<int, int>, Rat> moves;
    VertexSet nr = g.neighbors(r), na = g.neighbors(a);
    VertexSet leaving, arriving;
    if (g.adjacent(r, a)) {
      moves[{r, a}] += 1 - c;
      leaving = minus(minus(nr, na), {a});
      arriving = minus(minus(na, nr), {r});
    } else {
      VertexSet common = intersect(nr, na);
      for (int u : common) {
        moves[{u, a}] += c;
        moves[{r, u}] += c;
      }
      leaving = minus(nr, na);
      arriving = minus(na, nr);
    }
    auto match = perfect_matching(g, leaving, arriving);
    for (std::size_t i = 0; i < leaving.size(); ++i) moves[{leaving[i], match[i]}] += c;
    return merged(moves);
  }

  // Petersen: root 1, the six non-neighbours of the root 1/3 each.
  MovePlan petersen(const Graph& g, int r, int a) const {
    Rat third = rat(1, 3);
    std::map<std::pair<int, int>, Rat> moves;
    VertexSet far_r = non_neighbors(g, r), far_a = non_neighbors(g, a);
    if (g.adjacent(r, a)) {
      moves[{r, a}] += 1;
      // two disjoint length-2 paths from the old-only to the new-only vertices
      // through vertices kept by both states
      VertexSet out = minus(far_r, far_a), in = minus(minus(far_a, far_r), {r});
      VertexSet mid = intersect(far_r, far_a);
      for (int swap = 0; swap < 2; ++swap) {
        int t0 = in[swap], t1 = in[1 - swap];
        for (int m0 : mid) {
          if (!g.adjacent(out[0], m0) || !g.adjacent(m0, t0)) continue;
          for (int m1 : mid) {
            if (m1 == m0 || !g.adjacent(out[1], m1) || !g.adjacent(m1, t1)) continue;
            moves[{out[0], m0}] += third;
            moves[{m0, t0}] += third;
            moves[{out[1], m1}] += third;
            moves[{m1, t1}] += third;
            return merged(moves);
          }
        }
      }
      throw std::logic_error("Petersen response paths not found");
    }
    for (int u : g.neighbors(a))
      if (sgn(kneser_canonical_state(5, r)[u]) > 0) moves[{u, a}] += third;
    for (int u : minus(minus(far_a, far_r), {r})) moves[{r, u}] += third;
    return merged(moves);
  }

  int n_;
};

class RandomAttacker : public Attacker {
 public:
  explicit RandomAttacker(std::uint64_t seed) : rng_(seed) {}
  int next(const Graph& g, const GameState&, const Transcript&) override {
    return std::uniform_int_distribution<int>(0, g.n() - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

class GreedyAttacker : public Attacker {
 public:
  int next(const Graph& g, const GameState& state, const Transcript&) override {
    int best = 0;
    Rat low = closed_sum(g, state.weights, 0);
    for (int v = 1; v < g.n(); ++v) {
      Rat s = closed_sum(g, state.weights, v);
      if (s < low) {
        low = s;
        best = v;
      }
    }
    return best;
  }
};

class ScriptedAttacker : public Attacker {
 public:
  explicit ScriptedAttacker(std::vector<int> seq) : seq_(std::move(seq)) {
    if (seq_.empty()) throw Error(ErrorCode::invalid_params, "scripted attack sequence is empty");
  }
  int next(const Graph& g, const GameState&, const Transcript&) override {
    int v = seq_[pos_++ % seq_.size()];
    if (v < 0 || v >= g.n()) throw Error(ErrorCode::invalid_params, "scripted attack outside the graph");
    return v;
  }

 private:
  std::vector<int> seq_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Defender> make_lp_online() { return std::make_unique<LpOnline>(); }
std::unique_ptr<Defender> make_table_defender(StrategyCertificate cert) { return std::make_unique<TableDefender>(std::move(cert)); }
std::unique_ptr<Defender> make_connectivity_uniform(const Graph& g) { return std::make_unique<ConnectivityUniform>(g); }
std::unique_ptr<Defender> make_double_gamma_f(const Graph& g, const FDFunction& home) {
  return std::make_unique<DoubleGammaF>(g, home);
}
std::unique_ptr<Defender> make_kneser_canonical(int n) { return std::make_unique<KneserCanonical>(n); }

std::unique_ptr<Attacker> make_random_attacker(std::uint64_t seed) { return std::make_unique<RandomAttacker>(seed); }
std::unique_ptr<Attacker> make_greedy_attacker() { return std::make_unique<GreedyAttacker>(); }
std::unique_ptr<Attacker> make_scripted_attacker(std::vector<int> sequence) {
  return std::make_unique<ScriptedAttacker>(std::move(sequence));
}

FDFunction connectivity_initial(const Graph& g, int rover) {
  int k = connectivity(g);
  if (k < 1) throw Error(ErrorCode::invalid_params, "connectivity defender needs a connected graph with n >= 2");
  FDFunction w(std::vector<Rat>(g.n(), rat(1, k + 1)));
  w[rover] = 1;
  return w;
}

FDFunction double_initial(const FDFunction& home) {
  FDFunction w = home;
  for (auto& x : w.weights) x *= 2;
  return w;
}

FDFunction kneser_canonical_state(int n, int root) {
  Graph g = kneser_graph(n, 2);
  if (root < 0 || root >= g.n()) throw Error(ErrorCode::invalid_params, "root outside KG(n,2)");
  auto w = FDFunction::zeros(g.n());
  w[root] = 1;
  if (n == 5) {
    for (int u : non_neighbors(g, root)) w[u] = rat(1, 3);
  } else {
    for (int u : g.neighbors(root)) w[u] = rat(1, binomial(n - 3, 2));
  }
  return w;
}

std::vector<int> ladder_sweep(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (i % 3 == 1) out.push_back(2 * (i - 1));
    if (i % 3 == 2) out.push_back(2 * (i - 1) + 1);
  }
  return out;
}

std::vector<int> path_sweep(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; i += 2) out.push_back(i);
  return out;
}

std::vector<int> caterpillar_sweep(int k) {
  std::vector<int> out;
  for (int r = 0; r < k; ++r) {
    out.push_back(3 * k + 2 * r);
    out.push_back(3 * k + 2 * r + 1);
  }
  return out;
}

std::vector<int> cycle_sweep(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; i += 3) out.push_back(i);
  return out;
}

}  // namespace fedlab
