#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fedlab/graph.hpp"
#include "fedlab/graph_algorithms.hpp"
#include "fedlab/lp.hpp"
#include "fedlab/reconfig.hpp"

namespace fedlab {

struct Transition {
  int from;
  int to;
  MovePlan plan;
};

/// A family of fractional dominating functions of one common weight, a state
/// covering each vertex, and evidence that the family can answer attacks.
struct StrategyCertificate {
  std::string graph_ref;
  Rat weight;
  std::vector<FDFunction> states;
  std::vector<int> cover;  // vertex -> state with weight >= 1 there
  bool pairwise = true;    // otherwise `transitions` lists the allowed moves
  std::vector<Transition> transitions;
  std::string provenance;  // "lp_a", "fixture" or "constructed"
};

struct FractionalResult {
  Rat value;
  FDFunction witness;
};

/// Minimum-weight fractional dominating function.
FractionalResult gamma_f(const Graph& g);
/// Same LP with weight at least 1 pinned on v.
FractionalResult f_value(const Graph& g, int v);

struct BigF {
  Rat value;
  int argmax = 0;  // least vertex attaining the maximum
  FDFunction witness;
};
BigF big_F(const Graph& g);

/// Largest order accepted by program A; FEDLAB_LP_BUDGET overrides the default 12.
int lp_budget();

struct ProgramAResult {
  Rat value;
  StrategyCertificate certificate;
  int cut_rounds = 0;
  int cuts = 0;
};

/// Program A solved by separating Hall-type cuts of the reconfiguration
/// networks until every pair of states is reconfigurable.
ProgramAResult solve_program_a(const Graph& g, std::optional<int> budget = std::nullopt);
/// The full LP: equal-weight dominating states plus explicit arc-flow
/// variables for every ordered pair of states.
LPModel build_program_a(const Graph& g);
/// Solves build_program_a directly; only sensible for very small graphs.
Rat solve_program_a_direct(const Graph& g);

/// Throws not_a_tree.
int med_tree(const Graph& t);

struct SplitResult {
  Rat value;
  StrategyCertificate certificate;
  bool verified = false;  // every ordered pair of states reconfigurable
};
/// Throws invalid_partition.
SplitResult split_fed(const Graph& g, const SplitPartition& p);
bool is_fully_fd_critical(const Graph& g, int v);
bool split_equality_check(const Graph& g, const SplitPartition& p);

struct ClosedForm {
  bool exact = false;
  Rat lower;
  Rat upper;
  bool lower_open = false;
  bool upper_open = false;
  std::string reason;
};
std::optional<ClosedForm> closed_form_fed(const Graph& g);

enum class WitnessKind {
  gamma_f,
  big_f,
  two_packing,
  noncomplete,
  efficient_domination,
  packing_equals_gamma,
  closed_form,
  double_gamma_f,
  connectivity,
  independence,
  universal_vertex,
  dominating_edges,
  program_a,
};
const char* to_string(WitnessKind k);

struct BoundEntry {
  Rat value;
  WitnessKind kind;
  bool open = false;  // strict inequality
  std::string detail;
  VertexSet vertices;
  std::optional<FDFunction> weights;
  std::vector<long long> numbers;
};

struct BoundsReport {
  std::vector<BoundEntry> lower;
  std::vector<BoundEntry> upper;
  Rat best_lower;
  Rat best_upper;
  bool best_lower_open = false;
  std::optional<Rat> exact;
  std::vector<std::string> notes;  // candidates skipped for budget reasons
};

struct BoundsOptions {
  bool program_a = false;
  std::optional<int> lp_budget;
};
BoundsReport bounds(const Graph& g, const BoundsOptions& opt = {});
/// Recomputes one entry from its witness.
bool recheck(const Graph& g, const BoundEntry& e, bool is_lower);

/// State sizes, weights, domination and cover only; transitions are checked
/// by verify_certificate in the game module.
std::vector<std::string> static_certificate_violations(const Graph& g, const StrategyCertificate& c);

}  // namespace fedlab
