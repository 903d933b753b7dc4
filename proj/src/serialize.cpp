#include "chromabound/serialize.hpp"

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json ints(const std::vector<int>& v) { return Json(v); }

int read_int(const Json& j, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidSpec(std::string("missing field \"") + key + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidSpec(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> read_ints(const Json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) throw InvalidSpec(std::string("missing field \"") + key + "\"");
    return {};
  }
  const Json& v = j.at(key);
  if (!v.is_array()) throw InvalidSpec(std::string("field \"") + key + "\" must be an array of integers");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) throw InvalidSpec(std::string("field \"") + key + "\" must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

void require_object(const Json& j) {
  if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

}  // namespace

Json encode(const Rational& r) { return to_fraction_string(r); }

Json encode(const Poly& p) {
  return Json{{"degree", p.degree()}, {"coefficients", to_coefficient_strings(p)}};
}

Json encode(const Graph& g) {
  Json adjacency = Json::array();
  for (int v = 0; v < g.order(); ++v) {
    Json row = Json::array();
    for (VertexSet s = g.neighbors(v); s != 0; s &= s - 1) row.push_back(lowest(s));
    adjacency.push_back(row);
  }
  return Json{{"graph6", to_graph6(g)}, {"order", g.order()}, {"size", g.size()}, {"adjacency", adjacency}};
}

Json encode(const RootInterval& r) {
  return Json{{"lo", encode(r.lo)},
              {"hi", encode(r.hi)},
              {"width", encode(r.width())},
              {"isolating", r.isolating},
              {"approx", r.hi.get_d()}};
}

Json encode(const std::optional<RootInterval>& r) { return r ? encode(*r) : Json(nullptr); }

Json encode(const PositivityVerdict& v) {
  return std::visit(Overloaded{
                        [](const PositiveForAllXGeX0&) { return Json{{"kind", "positive_for_all_x_ge_x0"}}; },
                        [](const IdenticallyZero&) { return Json{{"kind", "identically_zero"}}; },
                        [](const FailsAt& f) {
                          return Json{{"kind", "fails_at"}, {"x", encode(f.x)}, {"touching", encode(f.touching)}};
                        },
                    },
                    v);
}

Json encode(const GapVerdict& v) {
  return std::visit(Overloaded{
                        [](const StrictlyBelow& s) {
                          return Json{{"kind", "strictly_below"},
                                      {"largest_root", encode(s.largest_root)},
                                      {"certified", s.certified}};
                        },
                        [](const EqualityEverywhere&) { return Json{{"kind", "equality_everywhere"}}; },
                        [](const ViolatedAt& a) {
                          return Json{{"kind", "violated_at"}, {"x", a.x.get_str()}, {"deficit", encode(a.deficit)}};
                        },
                    },
                    v);
}

Json encode(const ThetaSpec& s) { return Json{{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}}; }
Json encode(const SK4Spec& s) { return Json{{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}}; }
Json encode(const K3tSpec& s) { return Json{{"t", s.t}, {"a", ints(s.a)}, {"b", ints(s.b)}, {"c", ints(s.c)}}; }
Json encode(const CactusSpec& s) {
  return Json{{"cycles", ints(s.cycles)}, {"bridges", s.bridges}, {"attachment", ints(s.attachment)}};
}
Json encode(const CStarSpec& s) { return Json{{"k", s.k}, {"n", s.n}, {"attachment", ints(s.attachment)}}; }

Json encode(const BoundReport& r) {
  Json params = Json::object();
  for (const auto& [name, values] : r.params) params[name] = values.size() == 1 ? Json(values[0]) : ints(values);
  return Json{{"lemma", r.lemma}, {"params", params}, {"x", encode(r.x)}, {"lhs", encode(r.lhs)},
              {"rhs", encode(r.rhs)}, {"strict", r.strict}, {"holds", r.holds}};
}

Json encode(const RootCertificate& c) {
  return Json{{"name", c.name},
              {"parameter", c.parameter},
              {"polynomial", encode(c.polynomial)},
              {"leading_positive", c.leading_positive},
              {"largest_root", encode(c.largest_root)},
              {"threshold", encode(c.threshold)},
              {"beyond", encode(c.beyond)},
              {"sturm_signs_at_threshold", ints(c.signs_at_threshold)},
              {"sturm_signs_at_infinity", ints(c.signs_at_infinity)},
              {"cauchy_bound", encode(c.cauchy)},
              {"roots_above_threshold", c.roots_above_threshold},
              {"certified", c.certified()}};
}

Json encode(const ConjectureReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"graph6", v.graph6}, {"x", v.x.get_str()}, {"deficit", encode(v.deficit)}});
  }
  return Json{{"check", r.check},
              {"order", r.order},
              {"k", r.k},
              {"checked", r.checked},
              {"grid", ints(r.grid)},
              {"violations", violations},
              {"uncertified", strings(r.uncertified)},
              {"extremal", strings(r.extremal)},
              {"expected_extremal", strings(r.expected_extremal)},
              {"expected_extremal_count", r.expected_extremal.size()},
              {"extremal_matches", r.extremal_matches()},
              {"passed", r.passed()}};
}

Json encode(const Sk4Remark& r) {
  Json at = Json::array();
  for (const auto& [x, value] : r.difference_at) at.push_back(Json{{"x", x}, {"value", encode(value)}});
  return Json{{"graph", encode(r.graph)},
              {"chromatic", encode(r.chromatic)},
              {"bound", encode(r.bound)},
              {"difference", encode(r.difference)},
              {"difference_at", at},
              {"difference_largest_root", encode(r.largest_root)},
              {"verdict", encode(r.verdict)},
              {"passed", r.passed}};
}

Json encode(const K33Exploration& e) {
  Json samples = Json::array();
  for (const auto& s : e.samples) {
    samples.push_back(Json{{"spec", encode(s.spec)},
                           {"order", s.order},
                           {"signs", ints(s.signs)},
                           {"largest_root", encode(s.largest_root)},
                           {"first_holding_x", s.first_holding_x ? Json(*s.first_holding_x) : Json(nullptr)}});
  }
  return Json{{"max_size", e.max_size},
              {"grid", ints(e.grid)},
              {"samples", samples},
              {"max_root", e.max_root ? encode(*e.max_root) : Json(nullptr)},
              {"max_root_approx", e.max_root ? Json(e.max_root->get_d()) : Json(nullptr)},
              {"max_root_spec", e.max_root_sample ? encode(e.samples[*e.max_root_sample].spec) : Json(nullptr)},
              {"reference", encode(e.reference)}};
}

Json encode(const CandidateReport& r) {
  Json list = Json::array();
  for (const auto& c : r.candidates) {
    list.push_back(Json{{"graph6", c.graph6}, {"order", c.order}, {"verdict", encode(c.verdict)}});
  }
  return Json{{"max_order", r.max_order},
              {"count", r.candidates.size()},
              {"candidates", list},
              {"all_strictly_below", r.all_strictly_below()}};
}

ThetaSpec decode_theta(const Json& j) {
  require_object(j);
  ThetaSpec s{read_int(j, "s1"), read_int(j, "s2"), read_int(j, "s3")};
  validate(s);
  return s;
}

SK4Spec decode_sk4(const Json& j) {
  require_object(j);
  SK4Spec s{read_int(j, "s1"), read_int(j, "s2"), read_int(j, "s3")};
  validate(s);
  return s;
}

K3tSpec decode_k3t(const Json& j) {
  require_object(j);
  K3tSpec s;
  s.a = read_ints(j, "a", true);
  s.b = read_ints(j, "b", true);
  s.c = read_ints(j, "c", true);
  s.t = read_int(j, "t", static_cast<int>(s.a.size()));
  validate(s);
  return s;
}

CactusSpec decode_cactus(const Json& j) {
  require_object(j);
  CactusSpec s;
  s.cycles = read_ints(j, "cycles", false);
  s.bridges = read_int(j, "bridges", 0);
  s.attachment = read_ints(j, "attachment", false);
  validate(s);
  if (s.cycles.empty() && s.bridges == 0) throw InvalidSpec("cactus needs at least one block");
  return s;
}

CStarSpec decode_cstar(const Json& j) {
  require_object(j);
  CStarSpec s;
  s.k = read_int(j, "k", 4);
  s.n = read_int(j, "n");
  s.attachment = read_ints(j, "attachment", false);
  validate(s);
  return s;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidSpec(std::string("malformed JSON: ") + e.what());
  }
}

Json envelope(const std::string& key, Json payload) {
  return Json{{"schema", kSchemaVersion}, {key, std::move(payload)}};
}

}  // namespace chromabound
