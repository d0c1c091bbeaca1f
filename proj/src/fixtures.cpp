#include "fedlab/fixtures.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "fedlab/error.hpp"
#include "fedlab/game.hpp"
#include "fedlab/generators.hpp"

namespace fedlab {

namespace {

// Responses from the base state of Z_8 with connection set {+-1, 4}: weight 1
// on 0, 1/3 on 4, 2/3 on 2 and 6. Keyed by attacked vertex.
const char* const kZ8Plans[] = {
    "",
    "0>1:1 4>5:1/3 6>7:2/3 2>3:2/3",
    "0>4:1/3 6>2:1/3",
    "0>1:2/3 0>7:1/3 6>5:2/3 2>3:2/3 4>3:1/3",
    "0>4:2/3",
    "0>1:1/3 0>7:2/3 4>5:1/3 6>5:2/3 2>3:2/3",
    "0>4:1/3 2>6:1/3",
    "0>7:1 2>1:2/3 6>5:2/3 4>3:1/3",
};

// C_10 x K_2 with v_i = 2i and u_i = 2i+1. Base state in fifths.
constexpr int kC10V[] = {5, 0, 1, 2, 1, 1, 1, 2, 1, 0};
constexpr int kC10U[] = {2, 1, 2, 1, 1, 2, 1, 1, 2, 1};

// Responses from the base state to attacks on v_1..v_5 and u_0..u_5; attacks
// on v_6..v_9 and u_6..u_9 use the reflection i -> -i, which fixes the base
// state. Rows marked with a comment were patched by hand so the moved state
// is exactly the rotated base state.
struct C10Row {
  const char* attack;
  const char* moves;
};
const C10Row kC10Rows[] = {
    {"v1", "v0>v1:1 v2>v3:1/5 v3>v4:2/5 v4>v5:1/5 v5>v6:1/5 v6>v7:1/5 v7>v8:2/5 v8>v9:1/5 u0>u1:2/5 u1>u2:1/5 u2>u3:2/5 "
           "u3>u4:1/5 u4>u5:1/5 u5>u6:2/5 u6>u7:1/5 u7>u8:1/5 u8>u9:2/5 u9>u0:1/5"},
    {"v2", "v0>v9:2/5 v0>u0:2/5 v3>v2:2/5 v6>v5:1/5 v7>v6:1/5 u0>u1:1/5 u0>u9:1/5 u1>u2:1/5 u2>v2:2/5 u3>u2:1/5 u4>u3:1/5 "
           "u5>u4:2/5 u6>u5:1/5 u7>u6:1/5 u8>u7:2/5 u9>u8:1/5"},
    // added u3>v3
    {"v3", "v0>v1:1/5 v0>v9:1/5 v0>u0:1/5 v2>v3:1/5 v4>v3:1/5 v7>v6:1/5 u0>u1:1/5 u0>u9:1/5 u2>u3:1/5 u4>u3:1/5 u5>u4:1/5 "
           "u6>u5:1/5 u7>u6:1/5 u8>u7:1/5 u9>u8:1/5 u3>v3:1/5"},
    // v0>v1 raised to 2/5, added u4>v4
    {"v4", "v0>v1:2/5 v0>v9:1/5 v0>u0:1/5 v3>v4:2/5 v5>v4:1/5 u0>u1:1/5 u0>u9:1/5 u1>u2:1/5 u2>u3:1/5 u3>u4:1/5 u5>u4:1/5 "
           "u7>u6:1/5 u8>u7:1/5 u4>v4:1/5"},
    // v3>v2 and v7>v8 lowered to 1/5, added u5>v5
    {"v5", "v0>v1:1/5 v0>v9:1/5 v0>u0:2/5 v3>v2:1/5 v4>v5:1/5 v6>v5:1/5 v7>v8:1/5 u0>u1:1/5 u0>u9:1/5 u1>u2:1/5 u2>u3:2/5 "
           "u3>u4:1/5 u4>u5:1/5 u6>u5:1/5 u7>u6:1/5 u8>u7:2/5 u9>u8:1/5 u5>v5:2/5"},
    {"u0", "v0>v1:1/5 v0>v9:1/5 v0>u0:1/5 v3>v2:1/5 v7>v8:1/5 u1>u0:1/5 u2>u3:1/5 u5>v5:1/5 u8>u7:1/5 u9>u0:1/5"},
    {"u1", "v0>v1:2/5 v0>v9:2/5 v7>v6:1/5 u0>u1:2/5 u2>u1:2/5 u5>u4:1/5"},
    {"u2", "v0>v1:1/5 v0>v9:1/5 v0>u0:1/5 v2>u2:1/5 v3>v2:2/5 v4>v3:1/5 v5>v4:1/5 v6>v5:1/5 v7>v6:1/5 v8>v7:1/5 u0>u9:2/5 "
           "u1>u2:1/5 u3>u2:1/5 u4>v4:1/5 u5>u4:1/5 u6>u5:1/5 u7>u6:1/5 u8>u7:1/5 u8>v8:1/5 u9>u8:1/5"},
    // the self-move u3>u3 replaced by u4>u3
    {"u3", "v0>v1:2/5 v0>v9:1/5 v0>u0:1/5 v3>u3:1/5 v4>v3:1/5 v5>v4:1/5 v6>v5:1/5 v7>v6:1/5 u0>u9:1/5 u2>u3:2/5 u4>u3:1/5 "
           "u5>v5:1/5 u7>u6:1/5 u8>u7:1/5 u9>u8:1/5 u8>v8:1/5"},
    // u5>u4 raised to 2/5, added u2>v2 and u7>v7
    {"u4", "v0>v1:1/5 v0>v9:2/5 v0>u0:1/5 v3>v4:1/5 v4>u4:1/5 v5>v4:1/5 v6>v5:1/5 v7>v6:2/5 u0>u1:1/5 u0>u9:1/5 u3>u4:1/5 "
           "u5>u4:2/5 u8>u7:2/5 u9>u8:1/5 u2>v2:1/5 u7>v7:1/5"},
    {"u5", "v0>v1:1/5 v0>v9:1/5 v0>u0:1/5 v2>v3:1/5 v3>v4:1/5 v4>v5:1/5 v5>u5:1/5 v6>v5:1/5 v7>v6:1/5 v8>v7:1/5 u0>u1:1/5 "
           "u0>u9:1/5 u1>u2:1/5 u2>v2:1/5 u4>u5:1/5 u6>u5:1/5 u8>v8:1/5 u9>u8:1/5"},
};

int c10_vertex(const std::string& name) {
  int i = std::stoi(name.substr(1));
  return 2 * i + (name[0] == 'u' ? 1 : 0);
}

// "a>b:amount" tokens; `vertex` maps a name to an index
template <class F>
MovePlan parse_moves(const std::string& text, F vertex) {
  MovePlan plan;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto gt = tok.find('>'), colon = tok.find(':');
    plan.push_back({vertex(tok.substr(0, gt)), vertex(tok.substr(gt + 1, colon - gt - 1)), parse_rat(tok.substr(colon + 1))});
  }
  return plan;
}

MovePlan map_plan(const MovePlan& plan, const std::function<int(int)>& f) {
  MovePlan out;
  for (const auto& m : plan) out.push_back({f(m.from), f(m.to), m.amount});
  std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
  return out;
}

FDFunction map_state(const FDFunction& w, const std::function<int(int)>& f) {
  FDFunction out = FDFunction::zeros(w.size());
  for (int v = 0; v < w.size(); ++v) out[f(v)] = w[v];
  return out;
}

// Adds the transition and checks the plan lands on a listed state.
void add_transition(const Graph& g, StrategyCertificate& c, int from, MovePlan plan) {
  FDFunction next = apply_move_plan(g, c.states[from], plan);
  auto it = std::find(c.states.begin(), c.states.end(), next);
  if (it == c.states.end()) throw std::logic_error("fixture plan leaves the state family");
  c.transitions.push_back({from, static_cast<int>(it - c.states.begin()), std::move(plan)});
}

StrategyCertificate z8() {
  Graph g = moebius_graph(4);
  StrategyCertificate c;
  c.graph_ref = "moebius(4)";
  c.weight = rat(8, 3);
  c.provenance = "fixture";
  c.pairwise = false;
  FDFunction base = FDFunction::zeros(8);
  base[0] = 1;
  base[4] = rat(1, 3);
  base[2] = base[6] = rat(2, 3);
  for (int k = 0; k < 8; ++k) c.states.push_back(map_state(base, [k](int v) { return (v + k) % 8; }));
  for (int v = 0; v < 8; ++v) c.cover.push_back(v);
  for (int k = 0; k < 8; ++k) {
    for (int a = 1; a < 8; ++a) {
      auto plan = parse_moves(kZ8Plans[a], [](const std::string& s) { return std::stoi(s); });
      add_transition(g, c, k, map_plan(plan, [k](int v) { return (v + k) % 8; }));
    }
  }
  return c;
}

StrategyCertificate c10k2() {
  Graph g = prism_graph(10);
  StrategyCertificate c;
  c.graph_ref = "prism(10)";
  c.weight = rat(28, 5);
  c.provenance = "fixture";
  c.pairwise = false;
  FDFunction base = FDFunction::zeros(20);
  for (int i = 0; i < 10; ++i) {
    base[2 * i] = rat(kC10V[i], 5);
    base[2 * i + 1] = rat(kC10U[i], 5);
  }
  // symmetry (k, s): rotate by k, then swap layers when s = 1
  auto sym = [](int k, int s, bool reflect) {
    return [=](int v) {
      int i = v / 2, j = v % 2;
      if (reflect) i = (10 - i) % 10;
      return 2 * ((i + k) % 10) + (j ^ s);
    };
  };
  // state 2k+s is the base state moved by (k, s); it has weight 1 on vertex 2k+s
  for (int k = 0; k < 10; ++k)
    for (int s = 0; s < 2; ++s) c.states.push_back(map_state(base, sym(k, s, false)));
  for (int v = 0; v < 20; ++v) c.cover.push_back(v);

  std::vector<MovePlan> from_base(20);
  for (const auto& row : kC10Rows) from_base[c10_vertex(row.attack)] = parse_moves(row.moves, c10_vertex);
  for (int i = 6; i < 10; ++i)
    for (int j = 0; j < 2; ++j) from_base[2 * i + j] = map_plan(from_base[2 * (10 - i) + j], sym(0, 0, true));
  for (int k = 0; k < 10; ++k) {
    for (int s = 0; s < 2; ++s) {
      for (int a = 1; a < 20; ++a) add_transition(g, c, 2 * k + s, map_plan(from_base[a], sym(k, s, false)));
    }
  }
  return c;
}

StrategyCertificate kneser_family(int n) {
  Graph g = kneser_graph(n, 2);
  StrategyCertificate c;
  c.graph_ref = n == 5 ? "petersen" : "kneser(" + std::to_string(n) + ",2)";
  c.weight = n == 5 ? Rat(3) : rat(2 * n - 6, n - 4);
  c.provenance = "fixture";
  c.pairwise = true;
  for (int v = 0; v < g.n(); ++v) {
    c.states.push_back(kneser_canonical_state(n, v));
    c.cover.push_back(v);
  }
  return c;
}

int kneser_param(const std::string& name) {
  static const std::regex pat(R"(kneser\(?(\d+)\)?)");
  std::smatch m;
  if (!std::regex_match(name, m, pat)) return -1;
  int n = std::stoi(m[1]);
  return n >= 6 && n <= 9 ? n : -1;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"z8", "c10k2", "petersen", "kneser(6)", "kneser(7)", "kneser(8)", "kneser(9)"};
}

StrategyCertificate load_fixture(const std::string& name) {
  if (name == "z8") return z8();
  if (name == "c10k2") return c10k2();
  if (name == "petersen") return kneser_family(5);
  if (int n = kneser_param(name); n > 0) return kneser_family(n);
  throw Error(ErrorCode::unknown_fixture, "unknown fixture '" + name + "'");
}

Graph fixture_graph(const std::string& name) {
  if (name == "z8") return moebius_graph(4);
  if (name == "c10k2") return prism_graph(10);
  if (name == "petersen") return kneser_graph(5, 2);
  if (int n = kneser_param(name); n > 0) return kneser_graph(n, 2);
  throw Error(ErrorCode::unknown_fixture, "unknown fixture '" + name + "'");
}

}  // namespace fedlab
