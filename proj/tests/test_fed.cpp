#include <doctest.h>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"
#include "fedlab/game.hpp"
#include "fedlab/generators.hpp"
#include "fedlab/graph_algorithms.hpp"
#include "oracles.hpp"

using namespace fedlab;

namespace {

Graph corona_triangle() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

bool inside(const Rat& v, const BoundsReport& r) {
  bool above = r.best_lower_open ? v > r.best_lower : v >= r.best_lower;
  return above && v <= r.best_upper;
}

}  // namespace

TEST_SUITE("fed-engine") {

TEST_CASE("gamma_f and f(v)") {
  CHECK(gamma_f(cycle_graph(5)).value == rat(5, 3));
  auto gtd = gamma_f(gtd_graph(3, 2));
  CHECK(gtd.value == rat(3, 2));
  CHECK(is_fractional_dominating(gtd_graph(3, 2), gtd.witness));
  CHECK(gamma_f(caterpillar(2)).value == 2);
  for (int v = 0; v < 5; ++v) CHECK(f_value(complete_graph(5), v).value == 1);
  CHECK(f_value(kneser_graph(5, 2), 0).value == 3);
  CHECK(f_value(star_graph(3), 1).value == 2);
  auto f = f_value(star_graph(3), 1);
  CHECK(f.witness[1] >= 1);
  CHECK(is_fractional_dominating(star_graph(3), f.witness));
}

TEST_CASE("big_F") {
  auto k7 = big_F(complete_graph(7));
  CHECK(k7.value == 1);
  CHECK(k7.argmax == 0);
  CHECK(big_F(kneser_graph(6, 2)).value == 3);
  CHECK(big_F(star_graph(3)).value == 2);
  CHECK(big_F(star_graph(3)).argmax == 1);
}

TEST_CASE("program A examples") {
  auto k2 = solve_program_a(complete_graph(2));
  CHECK(k2.value == 1);
  REQUIRE(k2.certificate.states.size() == 2);
  CHECK(k2.certificate.states[0] == FDFunction{{1, 0}});
  CHECK(k2.certificate.states[1] == FDFunction{{0, 1}});
  CHECK(solve_program_a(path_graph(3)).value == 2);
  CHECK(solve_program_a(moebius_graph(4)).value == rat(8, 3));
  CHECK_THROWS_AS(solve_program_a(path_graph(13)), Error);
  CHECK_THROWS_AS(solve_program_a(path_graph(6), 5), Error);
  for (int n = 1; n <= 6; ++n) CHECK(solve_program_a(complete_graph(n)).value == 1);
}

TEST_CASE("program A by cuts equals the full arc-flow program for n <= 5") {
  std::vector<Graph> graphs{path_graph(3), path_graph(4), cycle_graph(4), star_graph(3), complete_graph(3),
                            Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), path_graph(5), cycle_graph(5), star_graph(4),
                            Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}), complete_multipartite({2, 3})};
  for (const auto& g : graphs) {
    CAPTURE(g.n());
    CHECK(solve_program_a(g).value == solve_program_a_direct(g));
  }
}

TEST_CASE("program A certificates verify") {
  for (const auto& g : {path_graph(4), cycle_graph(6), gtd_graph(3, 2), hypercube(3)}) {
    auto r = solve_program_a(g);
    CHECK(r.certificate.provenance == "lp_a");
    auto rep = verify_certificate(g, r.certificate);
    CHECK(rep.ok);
    CHECK(static_certificate_violations(g, r.certificate).empty());
  }
}

TEST_CASE("trees") {
  CHECK(med_tree(path_graph(4)) == 2);
  CHECK(med_tree(star_graph(5)) == 2);
  CHECK(med_tree(caterpillar(2)) == 4);
  CHECK(med_tree(complete_graph(1)) == 1);
  CHECK(med_tree(path_graph(2)) == 1);
  CHECK_THROWS_AS(med_tree(cycle_graph(4)), Error);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : oracle::all_trees(n)) CHECK(med_tree(t) == oracle::m_eternal_number(t));
  }
}

TEST_CASE("tree enumeration counts") {
  int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) CHECK(oracle::all_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("split graphs") {
  Graph star = star_graph(3);
  auto s = split_fed(star, SplitPartition{{0}, {1, 2, 3}});
  CHECK(s.value == 2);
  CHECK(s.verified);
  Graph gtd = gtd_graph(3, 2);
  auto g = split_fed(gtd, SplitPartition{{0, 1, 2}, {3, 4, 5, 6, 7, 8}});
  CHECK(g.value == rat(5, 2));
  CHECK(g.verified);
  CHECK(verify_certificate(gtd, g.certificate).ok);
  CHECK(split_fed(complete_graph(5), SplitPartition{{0, 1, 2, 3, 4}, {}}).value == 1);
  CHECK_THROWS_AS(split_fed(cycle_graph(4), SplitPartition{{0, 1}, {2, 3}}), Error);
}

TEST_CASE("full f.d.-criticality") {
  CHECK(is_fully_fd_critical(complete_graph(1), 0));
  CHECK_FALSE(is_fully_fd_critical(complete_graph(2), 0));
  for (int y = 3; y < 9; ++y) CHECK_FALSE(is_fully_fd_critical(gtd_graph(3, 2), y));
  CHECK_FALSE(is_fully_fd_critical(star_graph(3), 1));
  CHECK(is_fully_fd_critical(corona_triangle(), 3));
}

TEST_CASE("split equality check") {
  CHECK_FALSE(split_equality_check(star_graph(3), SplitPartition{{0}, {1, 2, 3}}));
  CHECK_FALSE(split_equality_check(gtd_graph(3, 2), SplitPartition{{0, 1, 2}, {3, 4, 5, 6, 7, 8}}));
  Graph c = corona_triangle();
  SplitPartition p{{0, 1, 2}, {3, 4, 5}};
  CHECK(split_equality_check(c, p));
  CHECK(split_fed(c, p).value == gamma_f(c).value);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph r = random_split(3, 4, seed);
    auto part = split_partition(r);
    REQUIRE(part);
    if (part->independent.empty() || part->clique.empty()) continue;
    bool eq = split_equality_check(r, *part);
    CHECK(eq == (split_fed(r, *part).value == gamma_f(r).value));
  }
}

TEST_CASE("closed forms") {
  auto c9 = closed_form_fed(cycle_graph(9));
  REQUIRE(c9);
  CHECK(c9->exact);
  CHECK(c9->lower == 3);
  auto k7 = closed_form_fed(kneser_graph(7, 2));
  REQUIRE(k7);
  CHECK(k7->lower == rat(8, 3));
  auto p14 = closed_form_fed(prism_graph(14));
  REQUIRE(p14);
  CHECK_FALSE(p14->exact);
  CHECK(p14->lower >= gamma_f(prism_graph(14)).value);
  CHECK(p14->upper == rat(31, 4));
  auto q7 = closed_form_fed(hypercube(7));
  REQUIRE(q7);
  CHECK(q7->exact);
  CHECK(q7->lower == 16);
  auto p6 = closed_form_fed(prism_graph(6));
  REQUIRE(p6);
  CHECK(p6->lower == rat(7, 2));
  CHECK(p6->lower_open);
  CHECK(p6->upper == rat(15, 4));
  auto p22 = closed_form_fed(prism_graph(22));
  REQUIRE(p22);
  CHECK(p22->lower == rat(24 * 26, 54));
  CHECK(closed_form_fed(grid_graph(7, 2))->lower == 5);
  CHECK_FALSE(closed_form_fed(grid_graph(3, 3))->exact);
  CHECK(closed_form_fed(gtd_graph(4, 2))->lower == 3);
  CHECK_FALSE(closed_form_fed(kneser_graph(6, 3)));
  // tags that do not match the edges are ignored
  Graph lying = cycle_graph(6).with_tag(ClassTag{Family::path, {6}});
  CHECK(closed_form_fed(lying)->lower == 2);
  // untagged graphs are classified
  CHECK(closed_form_fed(path_graph(7).with_tag(std::nullopt))->lower == 4);
  CHECK(closed_form_fed(complete_multipartite({2, 3}).with_tag(std::nullopt))->lower == 2);
}

TEST_CASE("bounds examples") {
  auto pet = bounds(kneser_graph(5, 2));
  REQUIRE(pet.exact);
  CHECK(*pet.exact == 3);
  bool has_conn = false;
  for (const auto& e : pet.upper) has_conn |= e.kind == WitnessKind::connectivity && e.value == rat(13, 4);
  CHECK(has_conn);
  auto k9 = bounds(complete_graph(9));
  REQUIRE(k9.exact);
  CHECK(*k9.exact == 1);
  auto c7 = bounds(cycle_graph(7));
  REQUIRE(c7.exact);
  CHECK(*c7.exact == 3);
  bool packing = false;
  for (const auto& e : c7.lower) packing |= e.kind == WitnessKind::two_packing && e.value == 3;
  CHECK(packing);
}

TEST_CASE("bound witnesses recheck and closed forms sit inside the bounds") {
  std::vector<Graph> graphs{cycle_graph(8), path_graph(6), kneser_graph(5, 2), hypercube(3), prism_graph(6),
                            moebius_graph(4), gtd_graph(3, 2), star_graph(5), caterpillar(2), grid_graph(4, 3),
                            complete_multipartite({2, 2, 3}), oracle::random_graph(8, 40, 5)};
  for (const auto& g : graphs) {
    BoundsOptions opt;
    opt.program_a = true;
    auto r = bounds(g, opt);
    CHECK(r.best_lower <= r.best_upper);
    for (const auto& e : r.lower) CHECK(recheck(g, e, true));
    for (const auto& e : r.upper) CHECK(recheck(g, e, false));
    if (auto c = closed_form_fed(g); c) {
      if (c->exact) {
        CHECK(inside(c->lower, r));
      } else {
        CHECK(c->upper >= r.best_lower);
        CHECK(c->lower <= r.best_upper);
      }
    }
  }
}

TEST_CASE("bound chain") {
  std::vector<Graph> graphs{cycle_graph(7), path_graph(8), kneser_graph(5, 2), prism_graph(5), moebius_graph(5),
                            gtd_graph(3, 2), star_graph(4), caterpillar(2), grid_graph(3, 3)};
  for (std::uint64_t s = 0; s < 6; ++s) graphs.push_back(oracle::random_graph(7, 45, 50 + s));
  for (const auto& g : graphs) {
    Rat gf = gamma_f(g).value, F = big_F(g).value, a = solve_program_a(g).value;
    CHECK(gf <= F);
    CHECK(F <= a);
    CHECK(a <= 2 * gf);
  }
}

}
