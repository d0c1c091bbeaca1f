#include "fedlab/error.hpp"
#include "fedlab/game.hpp"

namespace fedlab {

std::string Transcript::outcome() const {
  return survived ? "survived" : "defender_failed_at_round " + std::to_string(failed_round);
}

Transcript simulate(const Graph& g, Defender& defender, Attacker& attacker, int rounds, const FDFunction& initial,
                    const SimulateOptions& opt) {
  try {
    check_weights(g, initial);
  } catch (const Error& e) {
    throw Error(ErrorCode::invalid_initial, e.what());
  }
  if (opt.require_dominating_initial && !is_fractional_dominating(g, initial)) {
    throw Error(ErrorCode::invalid_initial, "initial weighting is not a fractional dominating function");
  }
  Transcript tr;
  tr.initial = initial;
  GameState state{initial, 0, initial.total()};
  for (int r = 1; r <= rounds; ++r) {
    int attack = attacker.next(g, state, tr);
    auto plan = defender.respond(g, state, attack);
    if (!plan) {
      tr.survived = false;
      tr.failed_round = r;
      break;
    }
    FDFunction next = apply_move_plan(g, state.weights, *plan);
    if (next.total() != state.total) throw std::logic_error("weight was not conserved");
    bool ok = next[attack] >= 1 && is_fractional_dominating(g, next);
    tr.events.push_back({attack, *plan, next});
    if (!ok) {
      tr.survived = false;
      tr.failed_round = r;
      break;
    }
    state.weights = std::move(next);
    state.round = r;
  }
  return tr;
}

VerificationReport verify_certificate(const Graph& g, const StrategyCertificate& cert) {
  VerificationReport rep;
  rep.violations = static_certificate_violations(g, cert);
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  int k = static_cast<int>(cert.states.size());
  if (cert.pairwise) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        ++rep.checked_transitions;
        if (!can_reconfigure(g, cert.states[i], cert.states[j])) {
          rep.violations.push_back("state " + std::to_string(i) + " cannot reach state " + std::to_string(j));
        }
      }
    }
  } else {
    std::vector<std::vector<char>> answers(k, std::vector<char>(g.n(), 0));
    for (int i = 0; i < k; ++i)
      for (int v = 0; v < g.n(); ++v) answers[i][v] = cert.states[i][v] >= 1;
    for (const auto& t : cert.transitions) {
      ++rep.checked_transitions;
      std::string tag = "transition " + std::to_string(t.from) + "->" + std::to_string(t.to) + ": ";
      if (t.from < 0 || t.from >= k || t.to < 0 || t.to >= k) {
        rep.violations.push_back(tag + "unknown state");
        continue;
      }
      try {
        if (!(apply_move_plan(g, cert.states[t.from], t.plan) == cert.states[t.to])) {
          rep.violations.push_back(tag + "plan does not produce the target state");
          continue;
        }
      } catch (const Error& e) {
        rep.violations.push_back(tag + e.what());
        continue;
      }
      for (int v = 0; v < g.n(); ++v)
        if (cert.states[t.to][v] >= 1) answers[t.from][v] = 1;
    }
    for (int i = 0; i < k; ++i)
      for (int v = 0; v < g.n(); ++v)
        if (!answers[i][v]) rep.violations.push_back("state " + std::to_string(i) + " has no answer to an attack on " + std::to_string(v));
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace fedlab
