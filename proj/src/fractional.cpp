#include <cstdlib>
#include <stdexcept>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"

namespace fedlab {

namespace {

LPModel domination_lp(const Graph& g) {
  LPModel lp(g.n());
  for (int v = 0; v < g.n(); ++v) lp.set_objective(v, 1);
  for (int v = 0; v < g.n(); ++v) {
    std::vector<Term> row;
    for (int u : g.closed(v)) row.push_back({u, 1});
    lp.add_constraint(std::move(row), Relation::ge, 1, "N[" + std::to_string(v) + "]");
  }
  return lp;
}

FractionalResult solve_domination(const LPModel& lp) {
  auto sol = solve(lp);
  if (sol.status != LPStatus::optimal) throw std::logic_error("domination LP is always feasible and bounded");
  return {sol.value, FDFunction(sol.assignment)};
}

}  // namespace

FractionalResult gamma_f(const Graph& g) { return solve_domination(domination_lp(g)); }

FractionalResult f_value(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::invalid_params, "vertex out of range: " + std::to_string(v));
  LPModel lp = domination_lp(g);
  lp.set_lower_bound(v, 1);
  return solve_domination(lp);
}

BigF big_F(const Graph& g) {
  BigF best;
  for (int v = 0; v < g.n(); ++v) {
    auto r = f_value(g, v);
    if (v == 0 || r.value > best.value) {
      best.value = r.value;
      best.argmax = v;
      best.witness = r.witness;
    }
  }
  return best;
}

bool is_fully_fd_critical(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::invalid_params, "vertex out of range: " + std::to_string(v));
  Rat whole = gamma_f(g).value;
  // the empty graph needs no weight
  Rat rest = g.n() == 1 ? Rat(0) : gamma_f(g.without({v})).value;
  return whole - rest == 1;
}

int lp_budget() {
  if (const char* env = std::getenv("FEDLAB_LP_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 12;
}

std::vector<std::string> static_certificate_violations(const Graph& g, const StrategyCertificate& c) {
  std::vector<std::string> out;
  if (c.states.empty()) out.push_back("certificate has no states");
  for (std::size_t i = 0; i < c.states.size(); ++i) {
    const auto& w = c.states[i];
    std::string tag = "state " + std::to_string(i) + ": ";
    if (w.size() != g.n()) {
      out.push_back(tag + "has " + std::to_string(w.size()) + " entries");
      continue;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (sgn(w[v]) < 0) out.push_back(tag + "negative weight at " + std::to_string(v));
      if (closed_sum(g, w, v) < 1) out.push_back(tag + "vertex " + std::to_string(v) + " is not dominated");
    }
    if (w.total() != c.weight) out.push_back(tag + "total " + to_string(w.total()) + " differs from " + to_string(c.weight));
  }
  if (static_cast<int>(c.cover.size()) != g.n()) {
    out.push_back("cover lists " + std::to_string(c.cover.size()) + " vertices");
  } else {
    for (int v = 0; v < g.n(); ++v) {
      int s = c.cover[v];
      if (s < 0 || s >= static_cast<int>(c.states.size()) || c.states[s].size() != g.n()) {
        out.push_back("cover of " + std::to_string(v) + " names a missing state");
      } else if (c.states[s][v] < 1) {
        out.push_back("cover state " + std::to_string(s) + " has weight below 1 at " + std::to_string(v));
      }
    }
  }
  return out;
}

}  // namespace fedlab
