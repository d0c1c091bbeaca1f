#include <doctest.h>

#include <random>

#include "fedlab/error.hpp"
#include "fedlab/generators.hpp"
#include "fedlab/reconfig.hpp"
#include "oracles.hpp"

using namespace fedlab;

namespace {

FDFunction fd(std::initializer_list<Rat> w) { return FDFunction{std::vector<Rat>(w)}; }

// conservation at internal nodes and value = source out = sink in
void check_flow(const ReconfigNetwork& net, const FlowResult& f) {
  std::vector<Rat> balance(net.node_count());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& arc = net.arcs[a];
    CHECK(f.arc_flow[a] >= 0);
    CHECK(f.arc_flow[a] <= arc.capacity);
    balance[arc.from] -= f.arc_flow[a];
    balance[arc.to] += f.arc_flow[a];
  }
  for (int v = 1; v + 1 < net.node_count(); ++v) CHECK(balance[v] == 0);
  CHECK(-balance[net.source()] == f.value);
  CHECK(balance[net.sink()] == f.value);
}

}  // namespace

TEST_SUITE("reconfig-flow") {

TEST_CASE("network shape") {
  Graph c4 = cycle_graph(4);
  auto net = build_reconfig_network(c4, fd({1, 0, 0, 0}), fd({0, 1, 0, 0}));
  CHECK(net.node_count() == 10);
  CHECK(net.arcs.size() == 20);
  int unbounded = 0;
  for (const auto& a : net.arcs) unbounded += a.unbounded;
  CHECK(unbounded == 12);
  for (int i = 0; i < 4; ++i) {
    CHECK(net.arcs[i].from == net.source());
    CHECK_FALSE(net.arcs[i].unbounded);
    CHECK(net.arcs[16 + i].to == net.sink());
  }

  auto k1 = build_reconfig_network(complete_graph(1), fd({1}), fd({1}));
  REQUIRE(k1.arcs.size() == 3);
  CHECK(k1.arcs[0].capacity == 1);
  CHECK(k1.arcs[1].unbounded);
  CHECK(k1.arcs[2].capacity == 1);

  auto p3 = build_reconfig_network(path_graph(3), fd({1, 0, 1}), fd({0, 1, 1}));
  bool zero_to_one = false;
  for (const auto& a : p3.arcs) zero_to_one |= a.from == p3.left(0) && a.to == p3.right(1);
  CHECK(zero_to_one);

  CHECK_THROWS_AS(build_reconfig_network(c4, fd({1, 0}), fd({0, 1, 0, 0})), Error);
}

TEST_CASE("max flow examples") {
  Graph c5 = cycle_graph(5);
  FDFunction w = fd({rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 3)});
  auto net = build_reconfig_network(c5, w, w);
  auto f = max_flow(net);
  CHECK(f.value == rat(5, 3));
  check_flow(net, f);

  auto p3 = build_reconfig_network(path_graph(3), fd({1, 0, 1}), fd({0, 1, 1}));
  auto fp = max_flow(p3);
  CHECK(fp.value == 2);
  check_flow(p3, fp);

  Graph two(2, {});
  auto iso = build_reconfig_network(two, fd({1, 0}), fd({0, 1}));
  auto fi = max_flow(iso);
  CHECK(fi.value == 0);
  check_flow(iso, fi);
}

TEST_CASE("can_reconfigure examples") {
  Graph c4 = cycle_graph(4);
  auto id = can_reconfigure(c4, fd({1, rat(1, 2), 0, 0}), fd({1, rat(1, 2), 0, 0}));
  REQUIRE(id);
  CHECK(*id == MovePlan{{0, 0, 1}, {1, 1, rat(1, 2)}});

  auto shift = can_reconfigure(c4, fd({1, 0, 0, 0}), fd({0, 1, 0, 0}));
  REQUIRE(shift);
  CHECK(*shift == MovePlan{{0, 1, 1}});
  CHECK(apply_move_plan(c4, fd({1, 0, 0, 0}), *shift) == fd({0, 1, 0, 0}));

  auto p3 = can_reconfigure(path_graph(3), fd({1, 0, 1}), fd({1, 1, 0}));
  REQUIRE(p3);
  CHECK(*p3 == MovePlan{{0, 0, 1}, {2, 1, 1}});

  CHECK_FALSE(can_reconfigure(path_graph(4), fd({1, 0, 0, 0}), fd({0, 0, 0, 1})));
  CHECK_THROWS_AS(can_reconfigure(c4, fd({1, 0, 0, 0}), fd({1, 1, 0, 0})), Error);
}

TEST_CASE("apply_move_plan legality") {
  Graph c4 = cycle_graph(4);
  CHECK(apply_move_plan(c4, fd({1, 0, 0, 0}), {}) == fd({1, 0, 0, 0}));
  CHECK_THROWS_AS(apply_move_plan(c4, fd({1, 0, 0, 0}), {{0, 1, 2}}), Error);
  CHECK_THROWS_AS(apply_move_plan(c4, fd({1, 0, 0, 0}), {{0, 2, 1}}), Error);
  CHECK_THROWS_AS(apply_move_plan(c4, fd({1, 0, 0, 0}), {{0, 1, 0}}), Error);
}

TEST_CASE("flow decision agrees with Hall and movement-LP oracles for n <= 5") {
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    Graph g = oracle::random_graph(n, 55, seed);
    auto ws = oracle::grid_weights(n, 3, 3);
    for (std::size_t a = 0; a < ws.size(); a += 3) {
      for (std::size_t b = 0; b < ws.size(); b += 5) {
        auto plan = can_reconfigure(g, ws[a], ws[b]);
        bool hall = oracle::hall_reconfigurable(g, ws[a], ws[b]);
        CHECK(plan.has_value() == hall);
        CHECK(oracle::movement_lp_reconfigurable(g, ws[a], ws[b]) == hall);
        if (plan) CHECK(apply_move_plan(g, ws[a], *plan) == ws[b]);
        auto net = build_reconfig_network(g, ws[a], ws[b]);
        check_flow(net, max_flow(net));
        ++instances;
      }
    }
  }
  CHECK(instances > 500);
}

TEST_CASE("symmetry and identity on random instances") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> part(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    Graph g = oracle::random_graph(n, 40, 1000 + trial);
    std::vector<Rat> a(n), b(n);
    Rat ta = 0, tb = 0;
    for (int v = 0; v < n; ++v) {
      a[v] = rat(part(rng), 4);
      b[v] = rat(part(rng), 4);
      ta += a[v];
      tb += b[v];
    }
    if (sgn(tb) == 0) continue;
    for (auto& x : b) x *= ta / tb;  // equal totals
    FDFunction w1{a}, w2{b};
    CHECK(can_reconfigure(g, w1, w2).has_value() == can_reconfigure(g, w2, w1).has_value());
    CHECK(can_reconfigure(g, w1, w1).has_value());
  }
}

}
