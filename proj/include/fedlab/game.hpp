#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fedlab/fed.hpp"
#include "fedlab/graph.hpp"
#include "fedlab/reconfig.hpp"

namespace fedlab {

struct GameState {
  FDFunction weights;
  int round = 0;
  Rat total;
};

struct GameEvent {
  int attack;
  MovePlan plan;
  FDFunction resulting;
};

struct Transcript {
  FDFunction initial;
  std::vector<GameEvent> events;
  bool survived = true;
  int failed_round = 0;  // 1-based round the defender could not answer

  std::string outcome() const;
};

class Defender {
 public:
  virtual ~Defender() = default;
  virtual std::string name() const = 0;
  /// Plan answering `attack` from `state`; nullopt when no answer exists.
  virtual std::optional<MovePlan> respond(const Graph& g, const GameState& state, int attack) = 0;
};

class Attacker {
 public:
  virtual ~Attacker() = default;
  virtual int next(const Graph& g, const GameState& state, const Transcript& so_far) = 0;
};

/// Movement LP maximising the smallest closed-neighbourhood slack.
std::unique_ptr<Defender> make_lp_online();
/// Follows a certificate; the state must be one of its states.
std::unique_ptr<Defender> make_table_defender(StrategyCertificate cert);
/// Rover of weight 1, every other vertex 1/(k+1), k the connectivity.
std::unique_ptr<Defender> make_connectivity_uniform(const Graph& g);
FDFunction connectivity_initial(const Graph& g, int rover);
/// Two copies of `home`; the copies take turns answering attacks.
std::unique_ptr<Defender> make_double_gamma_f(const Graph& g, const FDFunction& home);
FDFunction double_initial(const FDFunction& home);
/// KG(n,2): weight 1 on a root and 1/C(n-3,2) on its neighbours; for n = 5 the
/// root's non-neighbours carry 1/3 instead.
std::unique_ptr<Defender> make_kneser_canonical(int n);
FDFunction kneser_canonical_state(int n, int root);

std::unique_ptr<Attacker> make_random_attacker(std::uint64_t seed);
/// Least w(N[v]), least index on ties.
std::unique_ptr<Attacker> make_greedy_attacker();
/// Replays `sequence`, wrapping around at the end.
std::unique_ptr<Attacker> make_scripted_attacker(std::vector<int> sequence);

/// grid(n,2): v_1, v_2', v_4, v_5', ... with v_i = 2(i-1), v_i' = 2(i-1)+1.
std::vector<int> ladder_sweep(int n);
/// path(n): 0, 2, 4, ...
std::vector<int> path_sweep(int n);
/// caterpillar(k): x, y leaf pair of each hub in turn.
std::vector<int> caterpillar_sweep(int k);
/// cycle(n): 0, 3, 6, ...
std::vector<int> cycle_sweep(int n);

struct SimulateOptions {
  /// When false, the initial weighting only has to be nonnegative; used to
  /// probe weights below the fractional domination number.
  bool require_dominating_initial = true;
};

Transcript simulate(const Graph& g, Defender& defender, Attacker& attacker, int rounds, const FDFunction& initial,
                    const SimulateOptions& opt = {});

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> violations;
  long checked_transitions = 0;
};
VerificationReport verify_certificate(const Graph& g, const StrategyCertificate& cert);

}  // namespace fedlab
