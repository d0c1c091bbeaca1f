#include <algorithm>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"

namespace fedlab {

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::gamma_f: return "gamma_f";
    case WitnessKind::big_f: return "big_f";
    case WitnessKind::two_packing: return "two_packing";
    case WitnessKind::noncomplete: return "noncomplete";
    case WitnessKind::efficient_domination: return "efficient_domination";
    case WitnessKind::packing_equals_gamma: return "packing_equals_gamma";
    case WitnessKind::closed_form: return "closed_form";
    case WitnessKind::double_gamma_f: return "double_gamma_f";
    case WitnessKind::connectivity: return "connectivity";
    case WitnessKind::independence: return "independence";
    case WitnessKind::universal_vertex: return "universal_vertex";
    case WitnessKind::dominating_edges: return "dominating_edges";
    case WitnessKind::program_a: return "program_a";
  }
  return "?";
}

namespace {

Rat connectivity_value(long long n, long long k) { return rat(n + k, k + 1); }

bool dominates_all(const Graph& g, const VertexSet& s) {
  return static_cast<int>(closed_neighborhood(g, s).size()) == g.n();
}

std::optional<std::pair<int, int>> non_edge(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) return std::pair{u, v};
  return std::nullopt;
}

}  // namespace

BoundsReport bounds(const Graph& g, const BoundsOptions& opt) {
  BoundsReport r;
  int n = g.n();
  bool searchable = n <= kSearchLimit;

  auto gf = gamma_f(g);
  r.lower.push_back({gf.value, WitnessKind::gamma_f, false, "optimal fractional dominating function", {}, gf.witness, {}});
  r.upper.push_back({2 * gf.value, WitnessKind::double_gamma_f, false, "two superimposed copies of a minimum fractional dominating function",
                     {}, gf.witness, {}});

  auto bf = big_F(g);
  r.lower.push_back({bf.value, WitnessKind::big_f, false, "f(v) maximised at v = " + std::to_string(bf.argmax), {bf.argmax}, bf.witness, {}});

  if (auto ne = non_edge(g)) {
    r.lower.push_back({2, WitnessKind::noncomplete, false, "non-adjacent pair", {ne->first, ne->second}, std::nullopt, {}});
  }

  if (searchable) {
    auto pk = two_packing_lower(g);
    r.lower.push_back({pk.bound, WitnessKind::two_packing, false,
                       pk.strict ? "2-packing missing part of V" : "dominating 2-packing", pk.witness, std::nullopt, {}});
    if (auto eds = efficient_dominating_set(g)) {
      r.lower.push_back({static_cast<long>(eds->size()), WitnessKind::efficient_domination, false, "efficient dominating set", *eds,
                         std::nullopt, {}});
    } else {
      auto packing = maximum_two_packing(g);
      int gamma = domination_number(g);
      if (static_cast<int>(packing.size()) == gamma) {
        r.lower.push_back({gamma, WitnessKind::packing_equals_gamma, false, "maximum 2-packing has size gamma", packing, std::nullopt,
                           {gamma}});
      }
    }
    int alpha = independence_number(g);
    r.upper.push_back({alpha, WitnessKind::independence, false, "independence number", {}, std::nullopt, {alpha}});
  } else {
    r.notes.push_back("exhaustive searches skipped above n = " + std::to_string(kSearchLimit));
  }

  if (is_connected(g) && n > 1) {
    int k = connectivity(g);
    r.upper.push_back({connectivity_value(n, k), WitnessKind::connectivity, false, "rover plus uniform weight 1/(k+1)", {}, std::nullopt,
                       {n, k}});
  }

  for (int v = 0; v < n; ++v) {
    if (n > 1 && g.degree(v) == n - 1) {
      r.upper.push_back({2, WitnessKind::universal_vertex, false, "universal vertex", {v}, std::nullopt, {}});
      break;
    }
  }
  if (g.edge_count() > 0) {
    bool all = true;
    for (auto [u, v] : g.edges()) all = all && dominates_all(g, {u, v});
    if (all) r.upper.push_back({2, WitnessKind::dominating_edges, false, "every edge dominates", {}, std::nullopt, {}});
  }

  if (auto cf = closed_form_fed(g)) {
    r.lower.push_back({cf->lower, WitnessKind::closed_form, cf->lower_open, cf->reason, {}, std::nullopt, {}});
    r.upper.push_back({cf->upper, WitnessKind::closed_form, cf->upper_open, cf->reason, {}, std::nullopt, {}});
  }

  if (opt.program_a) {
    int budget = opt.lp_budget.value_or(lp_budget());
    if (n <= budget) {
      auto pa = solve_program_a(g, budget);
      r.upper.push_back({pa.value, WitnessKind::program_a, false, "pairwise reconfigurable states", {}, std::nullopt, {}});
    } else {
      r.notes.push_back("program A skipped: n = " + std::to_string(n) + " exceeds budget " + std::to_string(budget));
    }
  }

  r.best_lower = r.lower.front().value;
  r.best_lower_open = r.lower.front().open;
  for (const auto& e : r.lower) {
    if (e.value > r.best_lower) {
      r.best_lower = e.value;
      r.best_lower_open = e.open;
    } else if (e.value == r.best_lower && e.open) {
      r.best_lower_open = true;
    }
  }
  r.best_upper = r.upper.front().value;
  for (const auto& e : r.upper) r.best_upper = std::min(r.best_upper, e.value);
  if (r.best_lower == r.best_upper && !r.best_lower_open) r.exact = r.best_lower;
  return r;
}

bool recheck(const Graph& g, const BoundEntry& e, bool is_lower) {
  int n = g.n();
  switch (e.kind) {
    case WitnessKind::gamma_f:
      return e.weights && is_fractional_dominating(g, *e.weights) && e.weights->total() == e.value && gamma_f(g).value == e.value;
    case WitnessKind::big_f:
      return e.vertices.size() == 1 && e.weights && is_fractional_dominating(g, *e.weights) && (*e.weights)[e.vertices[0]] >= 1 &&
             f_value(g, e.vertices[0]).value == e.value;
    case WitnessKind::two_packing:
      return is_two_packing(g, e.vertices) &&
             e.value == static_cast<long>(e.vertices.size()) + (dominates_all(g, e.vertices) ? 0 : 1);
    case WitnessKind::noncomplete:
      return e.vertices.size() == 2 && e.vertices[0] != e.vertices[1] && !g.adjacent(e.vertices[0], e.vertices[1]) && e.value == 2;
    case WitnessKind::efficient_domination:
      return is_two_packing(g, e.vertices) && dominates_all(g, e.vertices) && e.value == static_cast<long>(e.vertices.size());
    case WitnessKind::packing_equals_gamma:
      return is_two_packing(g, e.vertices) && e.value == static_cast<long>(e.vertices.size()) &&
             static_cast<int>(maximum_two_packing(g).size()) == static_cast<int>(e.vertices.size()) &&
             domination_number(g) == static_cast<int>(e.vertices.size());
    case WitnessKind::closed_form: {
      auto cf = closed_form_fed(g);
      return cf && (is_lower ? cf->lower == e.value : cf->upper == e.value);
    }
    case WitnessKind::double_gamma_f:
      return e.weights && is_fractional_dominating(g, *e.weights) && 2 * e.weights->total() == e.value;
    case WitnessKind::connectivity:
      return e.numbers.size() == 2 && e.numbers[0] == n && connectivity(g) == e.numbers[1] &&
             connectivity_value(e.numbers[0], e.numbers[1]) == e.value;
    case WitnessKind::independence: return independence_number(g) == e.value;
    case WitnessKind::universal_vertex:
      return e.vertices.size() == 1 && g.degree(e.vertices[0]) == n - 1 && e.value == 2;
    case WitnessKind::dominating_edges: {
      if (g.edge_count() == 0 || e.value != 2) return false;
      for (auto [u, v] : g.edges())
        if (!dominates_all(g, {u, v})) return false;
      return true;
    }
    case WitnessKind::program_a: return solve_program_a(g).value == e.value;
  }
  return false;
}

}  // namespace fedlab
