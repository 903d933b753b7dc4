#include "chromabound/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chromabound/bounds.hpp"
#include "chromabound/chroma.hpp"
#include "chromabound/conjecture.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/families.hpp"
#include "chromabound/serialize.hpp"

namespace chromabound::cli {

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool json = false;
};

void emit(Io& io, const Json& j) { io.out << j.dump(2) << "\n"; }

std::string approx(const Rational& r, int digits = 8) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << r.get_d();
  return s.str();
}

std::string read_stream(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "@path" reads the JSON from a file.
Json load_json_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw InvalidSpec("cannot read " + text.substr(1));
    return parse_json(read_stream(f));
  }
  return parse_json(text);
}

// ---- chromatic ---------------------------------------------------------

std::vector<std::string> graph_lines(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    text = read_stream(in);
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    text = read_stream(f);
  } else {
    return {arg};
  }
  std::vector<std::string> lines;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw MalformedGraph6("no graph6 input");
  return lines;
}

int cmd_chromatic(Io& io, const std::string& arg) {
  Json results = Json::array();
  for (const std::string& line : graph_lines(arg, io.in)) {
    const Graph g = from_graph6(line);
    const Poly p = chromatic_polynomial(g);
    if (io.json) {
      results.push_back(Json{{"graph", encode(g)}, {"chromatic", encode(p)}});
    } else {
      io.out << to_graph6(g) << "  n=" << g.order() << " m=" << g.size() << "  " << pretty(p) << "\n";
    }
  }
  if (io.json) emit(io, envelope("results", results));
  return kExitOk;
}

// ---- family ------------------------------------------------------------

int cmd_family(Io& io, const std::string& kind, const std::string& spec_text) {
  const Json spec = load_json_arg(spec_text);
  Graph g;
  std::optional<Poly> closed;
  Json spec_out;
  if (kind == "theta") {
    auto s = decode_theta(spec);
    g = build_theta(s);
    closed = theta_poly(s);
    spec_out = encode(s);
  } else if (kind == "sk4") {
    auto s = decode_sk4(spec);
    g = build_sk4(s);
    closed = sk4_poly(s);
    spec_out = encode(s);
  } else if (kind == "k3t") {
    auto s = decode_k3t(spec);
    g = build_k3t(s);
    closed = k3t_poly(s);
    spec_out = encode(s);
  } else if (kind == "cactus") {
    auto s = decode_cactus(spec);
    g = build_cactus(s);
    closed = cactus_poly(s);
    spec_out = encode(s);
  } else if (kind == "cstar") {
    auto s = decode_cstar(spec);
    g = build_cstar(s);
    closed = cstar_poly(s);
    spec_out = encode(s);
  } else {
    if (!spec.is_object() || !spec.contains("t") || !spec.at("t").is_number_integer()) {
      throw InvalidSpec(kind + " spec needs an integer \"t\"");
    }
    const int t = spec.at("t").get<int>();
    if (kind == "wheel") {
      g = build_wheel(t);
      closed = wheel_poly(t);
    } else {
      g = build_vt(t);
    }
    spec_out = Json{{"t", t}};
  }
  const Poly engine = chromatic_polynomial(g);
  const bool matches = !closed || *closed == engine;
  if (io.json) {
    emit(io, envelope("family", Json{{"kind", kind},
                                     {"spec", spec_out},
                                     {"graph", encode(g)},
                                     {"closed_form", closed ? encode(*closed) : Json(nullptr)},
                                     {"engine", encode(engine)},
                                     {"matches", closed ? Json(matches) : Json(nullptr)}}));
  } else {
    io.out << kind << " " << spec_out.dump() << "\n";
    io.out << "graph6:      " << to_graph6(g) << "  (n=" << g.order() << ", m=" << g.size() << ")\n";
    io.out << "engine:      " << pretty(engine) << "\n";
    if (closed) {
      io.out << "closed form: " << pretty(*closed) << "\n";
      io.out << "agree:       " << (matches ? "yes" : "NO") << "\n";
    } else {
      io.out << "closed form: none\n";
    }
  }
  return matches ? kExitOk : kExitCheckFailed;
}

// ---- bounds ------------------------------------------------------------

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<Rational> grid_xs(const Json& grid, std::vector<Rational> fallback) {
  if (!grid.contains("x")) return fallback;
  const Json& xs = grid.at("x");
  if (!xs.is_array() || xs.empty()) throw InvalidSpec("grid \"x\" must be a non-empty array");
  std::vector<Rational> out;
  for (const Json& x : xs) {
    if (x.is_string()) {
      out.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(x.get<long>());
    } else if (x.is_number()) {
      out.push_back(parse_rational(x.dump()));
    } else {
      throw InvalidSpec("grid x values must be numbers or \"p/q\" strings");
    }
  }
  return out;
}

int grid_int(const Json& grid, const char* key, int fallback) {
  if (!grid.contains(key)) return fallback;
  if (!grid.at(key).is_number_integer()) throw InvalidSpec(std::string("grid \"") + key + "\" must be an integer");
  return grid.at(key).get<int>();
}

std::vector<int> grid_ints(const Json& grid, const char* key, std::vector<int> fallback) {
  if (!grid.contains(key)) return fallback;
  const Json& v = grid.at(key);
  if (!v.is_array()) throw InvalidSpec(std::string("grid \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) throw InvalidSpec(std::string("grid \"") + key + "\" must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// Non-decreasing sequences of the given length drawn from `values`.
void multisets(const std::vector<int>& values, int length, std::vector<std::vector<int>>& out,
               std::vector<int> prefix = {}, std::size_t from = 0) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < values.size(); ++i) {
    prefix.push_back(values[i]);
    multisets(values, length, out, prefix, i);
    prefix.pop_back();
  }
}

std::vector<std::array<int, 3>> triples(const Json& grid, int max_s, bool need_long_path) {
  std::vector<std::array<int, 3>> out;
  if (grid.contains("specs")) {
    for (const Json& s : grid.at("specs")) {
      const auto v = s.get<std::vector<int>>();
      if (v.size() != 3) throw InvalidSpec("each spec needs three path sizes");
      out.push_back({v[0], v[1], v[2]});
    }
    return out;
  }
  for (int a = 1; a <= max_s; ++a) {
    for (int b = 1; b <= max_s; ++b) {
      for (int c = 1; c <= max_s; ++c) {
        if (need_long_path && std::max({a, b, c}) < 2) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<BoundReport> run_bounds(const std::string& lemma, const Json& grid) {
  const auto standard = rationals({"1", "3/2", "2", "5/2", "3", "4", "10"});
  std::vector<BoundReport> reports;
  if (lemma == "theta" || lemma == "theta-uniform") {
    const bool uniform = lemma == "theta-uniform";
    const auto xs = grid_xs(grid, uniform ? rationals({"14143/10000", "3/2", "2", "5/2", "3", "4", "10"}) : standard);
    for (const auto& [a, b, c] : triples(grid, grid_int(grid, "max_s", 4), uniform)) {
      for (const auto& x : xs) {
        reports.push_back(uniform ? check_theta_uniform_bound(a, b, c, x) : check_theta_bound(a, b, c, x));
      }
    }
  } else if (lemma == "sk4") {
    const auto xs = grid_xs(grid, rationals({"2", "5/2", "3", "4", "10"}));
    for (const auto& [a, b, c] : triples(grid, grid_int(grid, "max_s", 4), false)) {
      for (const auto& x : xs) reports.push_back(check_sk4_bound({a, b, c}, x));
    }
  } else if (lemma == "k3t") {
    const auto xs = grid_xs(grid, rationals({"2", "5/2", "3", "4", "5", "10"}));
    std::vector<K3tSpec> specs;
    if (grid.contains("specs")) {
      for (const Json& s : grid.at("specs")) specs.push_back(decode_k3t(s));
    } else {
      const int max_size = grid_int(grid, "max_size", 3);
      std::vector<int> codes;
      for (int i = 0; i < max_size * max_size * max_size; ++i) codes.push_back(i);
      for (int t = 1; t <= grid_int(grid, "max_t", 3); ++t) {
        std::vector<std::vector<int>> picks;
        multisets(codes, t, picks);
        for (const auto& pick : picks) {
          K3tSpec s;
          s.t = t;
          for (int code : pick) {
            s.a.push_back(1 + code / (max_size * max_size));
            s.b.push_back(1 + (code / max_size) % max_size);
            s.c.push_back(1 + code % max_size);
          }
          specs.push_back(std::move(s));
        }
      }
    }
    for (const auto& s : specs) {
      for (const auto& x : xs) reports.push_back(check_k3t_bound(s, x));
    }
  } else if (lemma == "product") {
    const auto xs = grid_xs(grid, standard);
    std::vector<std::vector<int>> specs;
    if (grid.contains("specs")) {
      for (const Json& s : grid.at("specs")) specs.push_back(s.get<std::vector<int>>());
    } else {
      const auto sizes = grid_ints(grid, "sizes", {3, 4, 5, 6});
      for (int p = 1; p <= grid_int(grid, "max_p", 6); ++p) multisets(sizes, p, specs);
    }
    for (const auto& s : specs) {
      for (const auto& x : xs) reports.push_back(check_product_bound(s, x));
    }
  } else {
    const auto xs = grid_xs(grid, standard);
    std::vector<CactusSpec> specs;
    if (grid.contains("specs")) {
      for (const Json& s : grid.at("specs")) specs.push_back(decode_cactus(s));
    } else {
      const auto lengths = grid_ints(grid, "lengths", {3, 4, 5, 6});
      const int max_bridges = grid_int(grid, "max_bridges", 3);
      for (int p = 0; p <= grid_int(grid, "max_p", 6); ++p) {
        std::vector<std::vector<int>> cycles;
        multisets(lengths, p, cycles);
        for (const auto& c : cycles) {
          for (int b = p == 0 ? 1 : 0; b <= max_bridges; ++b) specs.push_back(CactusSpec{c, b, {}});
        }
      }
      // The six-triangle shape behind the cactus root certificate.
      specs.push_back(CactusSpec{{3, 3, 3, 3, 3, 3}, 5, {}});
    }
    for (const auto& s : specs) {
      for (const auto& x : xs) reports.push_back(check_cactus_bound(s, x));
    }
  }
  return reports;
}

std::string describe(const BoundReport& r) {
  std::ostringstream s;
  s << r.lemma;
  for (const auto& [name, values] : r.params) {
    s << " " << name << "=";
    for (std::size_t i = 0; i < values.size(); ++i) s << (i ? "," : "") << values[i];
  }
  s << " x=" << to_fraction_string(r.x) << ": lhs " << approx(r.lhs, 6) << " rhs " << approx(r.rhs, 6);
  return s.str();
}

int cmd_bounds(Io& io, const std::string& lemma, const std::string& grid_text) {
  const Json grid = grid_text.empty() ? Json::object() : load_json_arg(grid_text);
  if (!grid.is_object()) throw InvalidSpec("grid must be a JSON object");
  const auto reports = run_bounds(lemma, grid);
  long failed = 0;
  for (const auto& r : reports) failed += r.holds ? 0 : 1;
  if (io.json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(encode(r));
    emit(io, envelope("bounds", Json{{"lemma", lemma},
                                     {"checked", reports.size()},
                                     {"failed", failed},
                                     {"holds", failed == 0},
                                     {"reports", list}}));
  } else {
    io.out << lemma << ": " << reports.size() << " checks, " << failed << " failed\n";
    for (const auto& r : reports) {
      if (!r.holds) io.out << "  FAIL " << describe(r) << "\n";
    }
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ---- certify -----------------------------------------------------------

std::string verdict_text(const PositivityVerdict& v) {
  if (std::holds_alternative<PositiveForAllXGeX0>(v)) return "positive beyond threshold";
  if (std::holds_alternative<IdenticallyZero>(v)) return "identically zero";
  return "fails at x = " + to_fraction_string(std::get<FailsAt>(v).x);
}

int cmd_certify(Io& io, const std::string& which, std::optional<int> parameter, const std::string& threshold,
                const std::string& width) {
  const bool k33 = which == "k33son";
  const Rational w = width.empty() ? ratio(1, 1000000) : parse_rational(width);
  const Rational th = threshold.empty() ? (k33 ? ratio(295, 100) : ratio(2998, 1000)) : parse_rational(threshold);
  const RootCertificate c =
      k33 ? k33son_certificate(parameter.value_or(10), th, w) : cactusson_certificate(parameter.value_or(6), th, w);
  if (io.json) {
    emit(io, envelope("certificate", encode(c)));
  } else {
    io.out << c.name << " (" << (k33 ? "t" : "p") << " = " << c.parameter << "), degree " << c.polynomial.degree()
           << "\n";
    io.out << "leading coefficient positive: " << (c.leading_positive ? "yes" : "no") << "\n";
    if (c.largest_root) {
      io.out << "largest real root in [" << to_fraction_string(c.largest_root->lo) << ", "
             << to_fraction_string(c.largest_root->hi) << "] ~ " << approx(c.largest_root->hi) << "\n";
    } else {
      io.out << "no real root\n";
    }
    io.out << "x >= " << approx(c.threshold, 4) << ": " << verdict_text(c.beyond) << "\n";
    io.out << "real roots in (threshold, " << approx(c.cauchy, 2) << "]: " << c.roots_above_threshold << "\n";
    io.out << (c.certified() ? "certified" : "NOT certified") << "\n";
  }
  return c.certified() ? kExitOk : kExitCheckFailed;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(Io& io, const std::string& which, int order, std::optional<int> k, const EnumerationOptions& options,
               bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Json payload;
  bool passed = false;
  std::ostringstream human;
  if (which == "candidates") {
    const auto report = finite_family_candidates(order, options);
    payload = encode(report);
    passed = report.all_strictly_below();
    human << "3-connected nonplanar 4-chromatic graphs up to order " << order << ": " << report.candidates.size()
          << ", all strictly below: " << (passed ? "yes" : "NO") << "\n";
    for (const auto& c : report.candidates) {
      human << "  " << c.graph6 << (std::holds_alternative<StrictlyBelow>(c.verdict) ? "" : "  not strictly below")
            << "\n";
    }
  } else {
    ConjectureReport report;
    if (which == "conjecture") {
      report = verify_conjecture(order, options);
    } else if (which == "tomescu3") {
      report = verify_tomescu3(order, options);
    } else {
      report = verify_clique_bound(order, k.value_or(4), options);
    }
    payload = encode(report);
    passed = report.passed();
    human << report.check << " n=" << report.order << " k=" << report.k << ": " << report.checked << " graphs, "
          << report.violations.size() << " violations, " << report.extremal.size() << " extremal (expected "
          << report.expected_extremal.size() << ")";
    if (!report.uncertified.empty()) human << ", " << report.uncertified.size() << " uncertified";
    human << ": " << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& v : report.violations) {
      human << "  violation " << v.graph6 << " at x=" << v.x.get_str() << " by " << to_fraction_string(v.deficit)
            << "\n";
    }
    for (const auto& g : report.extremal) human << "  extremal " << g << "\n";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (io.json) {
    if (timing) payload["runtime_seconds"] = seconds;
    emit(io, envelope("report", payload));
  } else {
    io.out << human.str();
    if (timing) io.out << "runtime " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

// ---- remark / explore --------------------------------------------------

int cmd_remark(Io& io) {
  const Sk4Remark r = sk4_remark_report();
  if (io.json) {
    emit(io, envelope("remark", encode(r)));
  } else {
    io.out << "SK4^{3,4,4}: n=" << r.graph.order() << " m=" << r.graph.size() << " graph6 " << to_graph6(r.graph)
           << "\n";
    io.out << std::setw(6) << "deg" << std::setw(14) << "pi" << std::setw(14) << "bound" << std::setw(14) << "pi-bound"
           << "\n";
    for (int d = r.chromatic.degree(); d >= 0; --d) {
      const auto i = static_cast<std::size_t>(d);
      io.out << std::setw(6) << d << std::setw(14) << r.chromatic.coeff(i).get_str() << std::setw(14)
             << r.bound.coeff(i).get_str() << std::setw(14) << Rational(r.chromatic.coeff(i) - r.bound.coeff(i)).get_str()
             << "\n";
    }
    for (const auto& [x, value] : r.difference_at) io.out << "pi - bound at " << x << ": " << value.get_str() << "\n";
    if (r.largest_root) {
      io.out << "largest root of pi - bound ~ " << approx(r.largest_root->hi) << "\n";
    }
    io.out << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? kExitOk : kExitCheckFailed;
}

int cmd_explore(Io& io, int max_size, const std::vector<int>& grid) {
  const K33Exploration e = grid.empty() ? k33_threshold_explore(max_size) : k33_threshold_explore(max_size, grid);
  if (io.json) {
    emit(io, envelope("exploration", encode(e)));
  } else {
    for (const auto& s : e.samples) {
      io.out << "a=" << Json(s.spec.a).dump() << " b=" << Json(s.spec.b).dump() << " c=" << Json(s.spec.c).dump()
             << " n=" << s.order << " signs=";
      for (int sign : s.signs) io.out << (sign > 0 ? '+' : sign < 0 ? '-' : '0');
      if (s.largest_root) io.out << " root~" << approx(s.largest_root->hi, 5);
      if (s.first_holding_x) io.out << " holds from " << *s.first_holding_x;
      io.out << "\n";
    }
    if (e.max_root) {
      io.out << "max root over " << e.samples.size() << " subdivisions ~ " << approx(*e.max_root, 5)
             << " (reference " << approx(e.reference, 3) << ")\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact chromatic polynomial bounds toolkit", "chromabound"};
  app.require_subcommand(1);
  app.fallthrough();
  Io io{out, err, in};
  bool timing = false;
  app.add_flag("--json", io.json, "Emit JSON");

  std::string graph_arg;
  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of graph6 input");
  chromatic->add_option("graph", graph_arg, "graph6 string, file of graph6 lines, or - for stdin")->required();

  std::string family_kind, spec_text;
  auto* family = app.add_subcommand("family", "Build a family member and compare closed form with the engine");
  family->add_option("kind", family_kind)
      ->required()
      ->check(CLI::IsMember({"theta", "sk4", "k3t", "cactus", "cstar", "wheel", "vt"}));
  family->add_option("--spec", spec_text, "JSON spec or @file")->required();

  std::string lemma, grid_text;
  auto* bounds = app.add_subcommand("bounds", "Check a bound over a parameter grid");
  bounds->add_option("lemma", lemma)
      ->required()
      ->check(CLI::IsMember({"theta", "theta-uniform", "sk4", "k3t", "product", "cactus"}));
  bounds->add_option("--grid", grid_text, "JSON grid or @file");

  std::string which_cert, threshold, width;
  std::optional<int> cert_parameter;
  auto* certify = app.add_subcommand("certify", "Exact root certificates");
  certify->add_option("which", which_cert)->required()->check(CLI::IsMember({"k33son", "cactusson"}));
  certify->add_option("--parameter", cert_parameter, "t for k33son, p for cactusson")->check(CLI::Range(1, 64));
  certify->add_option("--threshold", threshold, "Positivity threshold as p/q or decimal");
  certify->add_option("--width", width, "Isolation width");

  std::string which_verify;
  int order = 0;
  std::optional<int> k;
  EnumerationOptions options;
  auto* verify = app.add_subcommand("verify", "Exhaustive checks over connected graphs");
  verify->add_option("which", which_verify)
      ->required()
      ->check(CLI::IsMember({"conjecture", "tomescu3", "cliquebound", "candidates"}));
  verify->add_option("--order", order, "Graph order (largest order for candidates)")->required();
  verify->add_option("--k", k, "Clique size for cliquebound")->check(CLI::Range(2, 9));
  verify->add_option("--workers", options.workers, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--max-order", options.max_order, "Enumeration order cap")->check(CLI::Range(1, 12));
  verify->add_flag("--timing", timing, "Report wall-clock time");

  std::string remark_what;
  auto* remark = app.add_subcommand("remark", "Coefficient comparison for SK4^{3,4,4}");
  remark->add_option("what", remark_what)->required()->check(CLI::IsMember({"sk4"}));

  std::string explore_what;
  int max_size = 2;
  std::vector<int> explore_grid;
  auto* explore = app.add_subcommand("explore", "Threshold exploration over K_{3,3} subdivisions");
  explore->add_option("what", explore_what)->required()->check(CLI::IsMember({"k33"}));
  explore->add_option("--max-size", max_size, "Largest path size")->check(CLI::Range(1, 4));
  explore->add_option("--grid", explore_grid, "Integer x grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*chromatic) return cmd_chromatic(io, graph_arg);
    if (*family) return cmd_family(io, family_kind, spec_text);
    if (*bounds) return cmd_bounds(io, lemma, grid_text);
    if (*certify) return cmd_certify(io, which_cert, cert_parameter, threshold, width);
    if (*verify) return cmd_verify(io, which_verify, order, k, options, timing);
    if (*remark) return cmd_remark(io);
    return cmd_explore(io, max_size, explore_grid);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace chromabound::cli
