#pragma once

#include <optional>
#include <vector>

#include "fedlab/graph.hpp"
#include "fedlab/rational.hpp"

namespace fedlab {

/// Nonnegative vertex weighting.
struct FDFunction {
  std::vector<Rat> weights;

  FDFunction() = default;
  explicit FDFunction(std::vector<Rat> w) : weights(std::move(w)) {}
  static FDFunction zeros(int n) { return FDFunction(std::vector<Rat>(n)); }

  int size() const { return static_cast<int>(weights.size()); }
  Rat total() const;
  const Rat& operator[](int v) const { return weights[v]; }
  Rat& operator[](int v) { return weights[v]; }
  bool operator==(const FDFunction& o) const { return weights == o.weights; }
};

Rat closed_sum(const Graph& g, const FDFunction& w, int v);
/// Nonnegative, sized for g, and every closed neighbourhood sums to >= 1.
bool is_fractional_dominating(const Graph& g, const FDFunction& w);
/// Throws dimension_mismatch or invalid_params (negative entry).
void check_weights(const Graph& g, const FDFunction& w);

struct Arc {
  int from;
  int to;
  Rat capacity;  // for unbounded arcs this is the finite surrogate total(w1)
  bool unbounded = false;
};

/// s = 0, left copy of v = 1+v, right copy of v = n+1+v, t = 2n+1. Arcs are
/// stored source arcs first, then middle arcs grouped by tail, then sink arcs.
struct ReconfigNetwork {
  int n = 0;
  std::vector<Arc> arcs;

  int source() const { return 0; }
  int sink() const { return 2 * n + 1; }
  int left(int v) const { return 1 + v; }
  int right(int v) const { return n + 1 + v; }
  int node_count() const { return 2 * n + 2; }
};

ReconfigNetwork build_reconfig_network(const Graph& g, const FDFunction& w1, const FDFunction& w2);

struct FlowResult {
  Rat value;
  std::vector<Rat> arc_flow;      // parallel to net.arcs
  std::vector<char> source_side;  // nodes reachable from s in the final residual graph
};

/// Edmonds-Karp with exact rational residuals.
FlowResult max_flow(const ReconfigNetwork& net);

struct Move {
  int from;
  int to;
  Rat amount;
  bool operator==(const Move&) const = default;
};
/// Sorted by (from, to); from == to entries are weight that stays.
using MovePlan = std::vector<Move>;

std::optional<MovePlan> can_reconfigure(const Graph& g, const FDFunction& w1, const FDFunction& w2);

/// Throws illegal_move naming the offending vertex.
FDFunction apply_move_plan(const Graph& g, const FDFunction& w, const MovePlan& plan);

}  // namespace fedlab
