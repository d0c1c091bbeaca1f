#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"
#include "fedlab/fixtures.hpp"
#include "fedlab/game.hpp"
#include "fedlab/generators.hpp"
#include "fedlab/serialize.hpp"
#include "fedlab/tables.hpp"

using namespace fedlab;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// JSON when the text starts with '{', edge list otherwise
Graph read_graph(const std::string& path) {
  std::string text = read_input(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text));
  return parse_edge_list(text);
}

void emit(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  out << text;
}

Json closed_form_json(const std::optional<ClosedForm>& c) {
  if (!c) return nullptr;
  return {{"exact", c->exact}, {"lower", to_string(c->lower)}, {"upper", to_string(c->upper)},
          {"lower_open", c->lower_open}, {"upper_open", c->upper_open}, {"reason", c->reason}};
}

Graph gen_graph(const std::string& family, const std::vector<long long>& params, std::uint64_t seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw Error(ErrorCode::invalid_params, family + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "caterpillar") {
    need(1);
    return caterpillar(static_cast<int>(params[0]));
  }
  if (family == "random_tree" || family == "tree") {
    need(1);
    return random_tree(static_cast<int>(params[0]), seed);
  }
  if (family == "random_split") {
    need(2);
    return random_split(static_cast<int>(params[0]), static_cast<int>(params[1]), seed);
  }
  auto f = family_from_string(family);
  if (!f || *f == Family::generic) throw Error(ErrorCode::invalid_params, "unknown family '" + family + "'");
  return generate(ClassTag{*f, params});
}

int run_table(int max_d, bool lp_a, std::optional<int> budget) {
  auto rows = hypercube_table(max_d);
  if (!lp_a) {
    std::cout << format_hypercube_table(rows);
    return kOk;
  }
  std::cout << "d\tgamma\tfed\tlp_a\n";
  for (const auto& r : rows) {
    Graph q = hypercube(r.d);
    std::cout << r.d << "\t" << r.domination << "\t" << interval_text(r.fed) << "\t";
    if (q.n() <= budget.value_or(lp_budget())) {
      std::cout << to_string(solve_program_a(q, budget).value) << "\n";
    } else {
      std::cout << "-\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fractional eternal domination toolkit"};
  app.require_subcommand(1);

  std::string graph_path, out_path, cert_path, family, policy = "lp_online", attacker = "random", weight_text, initial_path,
                                                        fixture_name, table_name, script;
  std::vector<long long> params;
  std::uint64_t seed = 1;
  int rounds = 100, max_d = 10, rover = 0;
  std::optional<int> budget;
  bool with_program_a = false, list = false, fixture_as_graph = false, table_lp_a = false;

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path);

  auto* gf = app.add_subcommand("gamma-f", "fractional domination number");
  auto* bf = app.add_subcommand("bigf", "largest f(v) over the vertices");
  auto* sa = app.add_subcommand("solve-a", "program A upper bound and certificate");
  auto* bd = app.add_subcommand("bounds", "all lower and upper bounds with witnesses");
  auto* cf = app.add_subcommand("closed-form", "closed-form value or interval");
  auto* sim = app.add_subcommand("simulate", "play the attack game");
  for (auto* sub : {gf, bf, sa, bd, cf, sim}) {
    sub->add_option("graph", graph_path, "graph file (JSON or edge list, - for stdin)")->required();
    sub->add_option("-o,--output", out_path);
  }
  for (auto* sub : {sa, bd}) sub->add_option("--budget", budget, "largest order program A accepts");
  bd->add_flag("--program-a", with_program_a, "include the program A upper bound");

  sim->add_option("--policy", policy, "lp_online, table, connectivity_uniform, double_gamma_f, kneser_canonical");
  sim->add_option("--attacker", attacker, "random, greedy or scripted");
  sim->add_option("--script", script, "comma separated attack sequence for the scripted attacker");
  sim->add_option("--rounds", rounds);
  sim->add_option("--seed", seed);
  sim->add_option("--weight", weight_text, "total weight p/q for lp_online");
  sim->add_option("--initial", initial_path, "initial weighting JSON");
  sim->add_option("--certificate", cert_path, "certificate for the table policy");
  sim->add_option("--rover", rover, "starting vertex of the rover");

  auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
  ver->add_option("certificate", cert_path, "certificate JSON, - for stdin")->required();
  ver->add_option("graph", graph_path, "graph file")->required();

  auto* fx = app.add_subcommand("fixture", "dump a built-in certificate");
  fx->add_option("name", fixture_name);
  fx->add_flag("--list", list);
  fx->add_flag("--graph", fixture_as_graph, "dump the fixture's graph instead");
  fx->add_option("-o,--output", out_path);

  auto* tb = app.add_subcommand("table", "reproduce a numeric table");
  tb->add_option("name", table_name, "hypercube")->required();
  tb->add_option("--max-d", max_d);
  tb->add_flag("--lp-a", table_lp_a, "add a program A column where the budget allows");
  tb->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      emit(to_json(gen_graph(family, params, seed)), out_path);
      return kOk;
    }
    if (gf->parsed() || bf->parsed()) {
      Graph g = read_graph(graph_path);
      Json j;
      if (gf->parsed()) {
        auto r = gamma_f(g);
        std::cout << to_string(r.value) << "\n";
        j = {{"value", to_string(r.value)}, {"witness", to_json(r.witness)}};
      } else {
        auto r = big_F(g);
        std::cout << to_string(r.value) << " at " << r.argmax << "\n";
        j = {{"value", to_string(r.value)}, {"argmax", r.argmax}, {"witness", to_json(r.witness)}};
      }
      if (!out_path.empty()) emit(j, out_path);
      return kOk;
    }
    if (sa->parsed()) {
      Graph g = read_graph(graph_path);
      auto r = solve_program_a(g, budget);
      if (out_path.empty()) {
        emit(to_json(r.certificate), "-");
      } else {
        std::cout << to_string(r.value) << "\n";
        emit(to_json(r.certificate), out_path);
      }
      return kOk;
    }
    if (bd->parsed()) {
      Graph g = read_graph(graph_path);
      BoundsOptions opt;
      opt.program_a = with_program_a;
      opt.lp_budget = budget;
      auto r = bounds(g, opt);
      for (const auto& e : r.lower)
        std::cout << "lower " << (e.open ? ">" : ">=") << " " << to_string(e.value) << "  " << to_string(e.kind) << ": " << e.detail << "\n";
      for (const auto& e : r.upper)
        std::cout << "upper <= " << to_string(e.value) << "  " << to_string(e.kind) << ": " << e.detail << "\n";
      for (const auto& s : r.notes) std::cout << "note " << s << "\n";
      if (r.exact) {
        std::cout << "exact " << to_string(*r.exact) << "\n";
      } else {
        std::cout << "interval " << (r.best_lower_open ? "(" : "[") << to_string(r.best_lower) << ", "
                  << to_string(r.best_upper) << "]\n";
      }
      if (!out_path.empty()) emit(to_json(r), out_path);
      return kOk;
    }
    if (cf->parsed()) {
      Graph g = read_graph(graph_path);
      auto c = closed_form_fed(g);
      if (c) {
        std::cout << (c->exact ? "exact " : "interval ") << interval_text(*c) << "  " << c->reason << "\n";
      } else {
        std::cout << "none\n";
      }
      if (!out_path.empty()) emit(closed_form_json(c), out_path);
      return kOk;
    }
    if (sim->parsed()) {
      Graph g = read_graph(graph_path);
      std::unique_ptr<Defender> def;
      FDFunction initial;
      if (policy == "lp_online") {
        auto gf_r = gamma_f(g);
        Rat total = weight_text.empty() ? 2 * gf_r.value : parse_rat(weight_text);
        initial = gf_r.witness;
        for (auto& x : initial.weights) x *= total / gf_r.value;
        def = make_lp_online();
      } else if (policy == "table") {
        if (cert_path.empty()) throw Error(ErrorCode::invalid_params, "the table policy needs --certificate");
        auto cert = certificate_from_json(parse_json(read_input(cert_path)));
        initial = cert.states.at(cert.cover.at(0));
        def = make_table_defender(cert);
      } else if (policy == "connectivity_uniform") {
        initial = connectivity_initial(g, rover);
        def = make_connectivity_uniform(g);
      } else if (policy == "double_gamma_f") {
        auto home = gamma_f(g).witness;
        initial = double_initial(home);
        def = make_double_gamma_f(g, home);
      } else if (policy == "kneser_canonical") {
        const auto& tag = g.tag();
        if (!tag || tag->family != Family::kneser || tag->params.at(1) != 2)
          throw Error(ErrorCode::invalid_params, "kneser_canonical needs a graph tagged kneser(n,2)");
        int n = static_cast<int>(tag->params[0]);
        initial = kneser_canonical_state(n, rover);
        def = make_kneser_canonical(n);
      } else {
        throw Error(ErrorCode::invalid_params, "unknown policy '" + policy + "'");
      }
      if (!initial_path.empty()) initial = fd_from_json(parse_json(read_input(initial_path)));

      std::unique_ptr<Attacker> att;
      if (attacker == "random") {
        att = make_random_attacker(seed);
      } else if (attacker == "greedy") {
        att = make_greedy_attacker();
      } else if (attacker == "scripted") {
        std::vector<int> seq;
        std::stringstream ss(script);
        for (std::string tok; std::getline(ss, tok, ',');) seq.push_back(std::stoi(tok));
        if (seq.empty()) throw Error(ErrorCode::invalid_params, "scripted attacker needs --script");
        att = make_scripted_attacker(seq);
      } else {
        throw Error(ErrorCode::invalid_params, "unknown attacker '" + attacker + "'");
      }
      auto t = simulate(g, *def, *att, rounds, initial);
      if (out_path.empty()) {
        emit(to_json(t), "-");
      } else {
        std::cout << t.outcome() << "\n";
        emit(to_json(t), out_path);
      }
      return kOk;
    }
    if (ver->parsed()) {
      Graph g = read_graph(graph_path);
      auto cert = certificate_from_json(parse_json(read_input(cert_path)));
      auto rep = verify_certificate(g, cert);
      for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
      std::cout << (rep.ok ? "ok" : "failed") << " weight " << to_string(cert.weight) << ", " << rep.checked_transitions
                << " transitions checked\n";
      return rep.ok ? kOk : kVerifyFailed;
    }
    if (fx->parsed()) {
      if (list) {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
        return kOk;
      }
      if (fixture_name.empty()) throw Error(ErrorCode::invalid_params, "fixture name required");
      if (fixture_as_graph) {
        emit(to_json(fixture_graph(fixture_name)), out_path);
      } else {
        emit(to_json(load_fixture(fixture_name)), out_path);
      }
      return kOk;
    }
    if (tb->parsed()) {
      if (table_name != "hypercube") throw Error(ErrorCode::invalid_params, "unknown table '" + table_name + "'");
      return run_table(max_d, table_lp_a, budget);
    }
  } catch (const Error& e) {
    Json err = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return e.code() == ErrorCode::size_limit_exceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    Json err = {{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return kUsage;
  }
  return kUsage;
}
