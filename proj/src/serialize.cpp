#include "fedlab/serialize.hpp"

#include <algorithm>
#include <set>

#include "fedlab/error.hpp"

namespace fedlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

template <class T, class F>
std::vector<T> as_list(const Json& j, const char* what, F item) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<T> out;
  for (const auto& x : j) out.push_back(item(x));
  return out;
}

std::optional<WitnessKind> kind_from_string(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(WitnessKind::program_a); ++k) {
    if (s == to_string(static_cast<WitnessKind>(k))) return static_cast<WitnessKind>(k);
  }
  return std::nullopt;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  bad("rational must be a \"p/q\" string");
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json tag = nullptr;
  if (g.tag()) tag = {{"family", to_string(g.tag()->family)}, {"params", g.tag()->params}};
  return {{"n", g.n()}, {"edges", edges}, {"tag", tag}};
}

Graph graph_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  std::set<Edge> seen;
  auto edges = as_list<Edge>(field(j, "edges"), "edges", [&](const Json& e) {
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    Edge ed{as_int(e[0], "endpoint"), as_int(e[1], "endpoint")};
    Edge key = std::minmax(ed.first, ed.second);
    if (!seen.insert(key).second) throw Error(ErrorCode::invalid_graph, "duplicate edge in JSON");
    return ed;
  });
  std::optional<ClassTag> tag;
  if (j.contains("tag") && !j.at("tag").is_null()) {
    const Json& t = j.at("tag");
    const Json& fam = field(t, "family");
    if (!fam.is_string()) bad("tag family must be a string");
    auto f = family_from_string(fam.get<std::string>());
    if (!f) bad("unknown family '" + fam.get<std::string>() + "'");
    ClassTag ct{*f, {}};
    ct.params = as_list<long long>(field(t, "params"), "params", [](const Json& p) {
      if (!p.is_number_integer()) bad("tag parameter must be an integer");
      return p.get<long long>();
    });
    tag = ct;
  }
  return Graph(n, edges, tag);
}

Json to_json(const FDFunction& w) {
  Json ws = Json::array();
  for (const auto& x : w.weights) ws.push_back(to_string(x));
  return {{"weights", ws}};
}

FDFunction fd_from_json(const Json& j) {
  return FDFunction{as_list<Rat>(field(j, "weights"), "weights", rat_from_json)};
}

Json to_json(const MovePlan& plan) {
  Json out = Json::array();
  for (const auto& m : plan) out.push_back({{"from", m.from}, {"to", m.to}, {"amount", to_string(m.amount)}});
  return out;
}

MovePlan plan_from_json(const Json& j) {
  return as_list<Move>(j, "plan", [](const Json& m) {
    return Move{as_int(field(m, "from"), "from"), as_int(field(m, "to"), "to"), rat_from_json(field(m, "amount"))};
  });
}

Json to_json(const StrategyCertificate& c) {
  Json states = Json::array();
  for (const auto& s : c.states) states.push_back(to_json(s));
  Json cover = Json::object();
  for (std::size_t v = 0; v < c.cover.size(); ++v) cover[std::to_string(v)] = c.cover[v];
  Json transitions = "pairwise";
  if (!c.pairwise) {
    transitions = Json::array();
    for (const auto& t : c.transitions) transitions.push_back({{"from", t.from}, {"to", t.to}, {"plan", to_json(t.plan)}});
  }
  Json out = {{"weight", to_string(c.weight)}, {"states", states}, {"cover", cover}, {"transitions", transitions},
              {"provenance", c.provenance}};
  if (!c.graph_ref.empty()) out["graph"] = c.graph_ref;
  return out;
}

StrategyCertificate certificate_from_json(const Json& j) {
  StrategyCertificate c;
  c.weight = rat_from_json(field(j, "weight"));
  c.states = as_list<FDFunction>(field(j, "states"), "states", fd_from_json);
  const Json& cover = field(j, "cover");
  if (!cover.is_object()) bad("cover must be an object");
  c.cover.assign(cover.size(), -1);
  for (const auto& [key, idx] : cover.items()) {
    std::size_t v = 0;
    try {
      v = std::stoul(key);
    } catch (const std::exception&) {
      bad("cover key '" + key + "' is not a vertex");
    }
    if (v >= c.cover.size()) bad("cover keys must be 0..n-1");
    c.cover[v] = as_int(idx, "cover entry");
  }
  if (std::count(c.cover.begin(), c.cover.end(), -1)) bad("cover keys must be 0..n-1");
  const Json& tr = field(j, "transitions");
  if (tr.is_string()) {
    if (tr.get<std::string>() != "pairwise") bad("transitions must be \"pairwise\" or a list");
    c.pairwise = true;
  } else {
    c.pairwise = false;
    c.transitions = as_list<Transition>(tr, "transitions", [](const Json& t) {
      return Transition{as_int(field(t, "from"), "from"), as_int(field(t, "to"), "to"), plan_from_json(field(t, "plan"))};
    });
  }
  if (j.contains("provenance") && j.at("provenance").is_string()) c.provenance = j.at("provenance").get<std::string>();
  if (j.contains("graph") && j.at("graph").is_string()) c.graph_ref = j.at("graph").get<std::string>();
  return c;
}

Json to_json(const BoundEntry& e) {
  Json out = {{"value", to_string(e.value)}, {"kind", to_string(e.kind)}, {"open", e.open}, {"detail", e.detail},
              {"vertices", e.vertices}, {"weights", e.weights ? to_json(*e.weights) : Json(nullptr)},
              {"numbers", e.numbers}};
  return out;
}

BoundEntry bound_entry_from_json(const Json& j) {
  BoundEntry e;
  e.value = rat_from_json(field(j, "value"));
  const Json& k = field(j, "kind");
  auto kind = k.is_string() ? kind_from_string(k.get<std::string>()) : std::nullopt;
  if (!kind) bad("unknown witness kind");
  e.kind = *kind;
  e.open = j.value("open", false);
  e.detail = j.value("detail", std::string());
  if (j.contains("vertices")) e.vertices = as_list<int>(j.at("vertices"), "vertices", [](const Json& v) { return as_int(v, "vertex"); });
  if (j.contains("weights") && !j.at("weights").is_null()) e.weights = fd_from_json(j.at("weights"));
  if (j.contains("numbers")) {
    e.numbers = as_list<long long>(j.at("numbers"), "numbers", [](const Json& v) {
      if (!v.is_number_integer()) bad("numbers must be integers");
      return v.get<long long>();
    });
  }
  return e;
}

Json to_json(const BoundsReport& r) {
  Json lower = Json::array(), upper = Json::array();
  for (const auto& e : r.lower) lower.push_back(to_json(e));
  for (const auto& e : r.upper) upper.push_back(to_json(e));
  return {{"lower", lower},
          {"upper", upper},
          {"best_lower", to_string(r.best_lower)},
          {"best_lower_open", r.best_lower_open},
          {"best_upper", to_string(r.best_upper)},
          {"exact", r.exact ? Json(to_string(*r.exact)) : Json(nullptr)},
          {"notes", r.notes}};
}

BoundsReport bounds_from_json(const Json& j) {
  BoundsReport r;
  r.lower = as_list<BoundEntry>(field(j, "lower"), "lower", bound_entry_from_json);
  r.upper = as_list<BoundEntry>(field(j, "upper"), "upper", bound_entry_from_json);
  r.best_lower = rat_from_json(field(j, "best_lower"));
  r.best_upper = rat_from_json(field(j, "best_upper"));
  r.best_lower_open = j.value("best_lower_open", false);
  if (j.contains("exact") && !j.at("exact").is_null()) r.exact = rat_from_json(j.at("exact"));
  if (j.contains("notes")) {
    r.notes = as_list<std::string>(j.at("notes"), "notes", [](const Json& s) {
      if (!s.is_string()) bad("notes must be strings");
      return s.get<std::string>();
    });
  }
  return r;
}

Json to_json(const Transcript& t) {
  Json events = Json::array();
  for (const auto& e : t.events) {
    events.push_back({{"attack", e.attack}, {"plan", to_json(e.plan)}, {"resulting", to_json(e.resulting)}});
  }
  return {{"initial", to_json(t.initial)}, {"events", events}, {"outcome", t.outcome()}};
}

Transcript transcript_from_json(const Json& j) {
  Transcript t;
  t.initial = fd_from_json(field(j, "initial"));
  t.events = as_list<GameEvent>(field(j, "events"), "events", [](const Json& e) {
    return GameEvent{as_int(field(e, "attack"), "attack"), plan_from_json(field(e, "plan")),
                     fd_from_json(field(e, "resulting"))};
  });
  const Json& o = field(j, "outcome");
  if (!o.is_string()) bad("outcome must be a string");
  std::string s = o.get<std::string>();
  const std::string prefix = "defender_failed_at_round ";
  if (s == "survived") {
    t.survived = true;
  } else if (s.rfind(prefix, 0) == 0) {
    t.survived = false;
    try {
      t.failed_round = std::stoi(s.substr(prefix.size()));
    } catch (const std::exception&) {
      bad("bad outcome '" + s + "'");
    }
  } else {
    bad("bad outcome '" + s + "'");
  }
  return t;
}

}  // namespace fedlab
