#include "chromabound/conjecture.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "chromabound/chroma.hpp"
#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

const Rational kRootWidth(1, 1000000);

// Applies fn to 0..count-1 on up to `workers` threads; results keep index
// order so the output does not depend on scheduling.
template <typename Fn>
auto parallel_map(std::size_t count, int workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(count);
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += w) out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::vector<std::string> extend_level(const std::vector<std::string>& parents, int n, int workers) {
  const VertexSet subsets = prefix_mask(n - 1);
  const std::size_t w = static_cast<std::size_t>(std::max(workers, 1));
  auto partial = parallel_map(w, workers, [&](std::size_t t) {
    std::set<std::string> found;
    for (std::size_t i = t; i < parents.size(); i += w) {
      const Graph parent = from_graph6(parents[i]);
      for (VertexSet s = 1; s <= subsets; ++s) found.insert(canonical_form(parent.with_vertex(s)));
    }
    return found;
  });
  std::set<std::string> merged;
  for (auto& part : partial) merged.merge(part);
  return {merged.begin(), merged.end()};
}

// Canonical graph6 codes of all connected graphs of order n, built one vertex
// at a time and kept for the life of the process.
std::vector<std::string> connected_codes(int n, int workers) {
  static std::mutex mu;
  static std::map<int, std::vector<std::string>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) levels[1] = {canonical_form(Graph(1))};
  int have = levels.rbegin()->first;
  while (have < n) {
    levels[have + 1] = extend_level(levels[have], have + 1, workers);
    ++have;
  }
  return levels[n];
}

void check_order(int n, int cap, const EnumerationOptions& options) {
  const int limit = std::min(cap, options.max_order);
  if (n > limit) {
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
}

long binomial2(int k) { return static_cast<long>(k) * (k - 1) / 2; }

struct GridOutcome {
  std::string code;
  std::optional<Violation> violation;
  bool equal_everywhere = false;
  bool expected = false;
};

// Shared driver for the two integer-grid checks.
ConjectureReport grid_check(std::string name, int n, int k, const std::vector<Graph>& graphs, const Poly& bound,
                            std::vector<int> grid, const std::function<bool(const Graph&)>& expected,
                            const EnumerationOptions& options) {
  ConjectureReport report;
  report.check = std::move(name);
  report.order = n;
  report.k = k;
  report.checked = static_cast<long>(graphs.size());
  report.grid = std::move(grid);
  auto outcomes = parallel_map(graphs.size(), options.workers, [&](std::size_t i) {
    const Graph& g = graphs[i];
    GridOutcome out;
    out.code = to_graph6(g);
    out.expected = expected(g);
    const Poly pi = chromatic_polynomial(g);
    out.equal_everywhere = true;
    for (int x : report.grid) {
      const Rational gap = bound(Rational(x)) - pi(Rational(x));
      if (gap != 0) out.equal_everywhere = false;
      if (gap < 0 && !out.violation) out.violation = Violation{out.code, Integer(x), -gap};
    }
    return out;
  });
  for (auto& o : outcomes) {
    if (o.violation) report.violations.push_back(*o.violation);
    if (o.equal_everywhere) report.extremal.push_back(o.code);
    if (o.expected) report.expected_extremal.push_back(o.code);
  }
  return report;
}

}  // namespace

Poly conjectured_bound(int n, int k) {
  if (k < 1) throw InvalidSpec("k must be positive, got " + std::to_string(k));
  if (n < k) throw InvalidOrder("order " + std::to_string(n) + " is below k = " + std::to_string(k));
  return falling_factorial(static_cast<unsigned>(k)) *
         pow(Poly::linear_factor(1), static_cast<unsigned>(n - k));
}

GapVerdict classify_gap(const Poly& gap, int k) {
  if (gap.is_zero()) return EqualityEverywhere{};
  const Rational from(k);
  if (is_positive_beyond(positive_beyond(gap, from))) {
    return StrictlyBelow{largest_real_root(gap, kRootWidth), true};
  }
  // The sign beyond the Cauchy bound is the leading sign, so a negative
  // leading coefficient always yields a witness here.
  Integer last = ceil_of(cauchy_bound(gap)) + 1;
  if (last < k) last = k;
  for (Integer x = k; x <= last; ++x) {
    const Rational value = gap(Rational(x));
    if (value < 0) return ViolatedAt{x, -value};
  }
  return StrictlyBelow{largest_real_root(gap, kRootWidth), false};
}

GapVerdict gap_verdict_relaxed(const Graph& g, int k) {
  if (!is_connected(g)) throw Disconnected("gap verdict needs a connected graph");
  return classify_gap(conjectured_bound(g.order(), k) - chromatic_polynomial(g), k);
}

GapVerdict gap_verdict(const Graph& g, int k) {
  if (!is_connected(g)) throw Disconnected("gap verdict needs a connected graph");
  const int chi = chromatic_number(g);
  if (chi != k) {
    throw WrongChromaticNumber("graph is " + std::to_string(chi) + "-chromatic, expected " + std::to_string(k));
  }
  return gap_verdict_relaxed(g, k);
}

std::vector<Graph> enumerate_connected(int n, const GraphPredicate& keep, const EnumerationOptions& options) {
  if (n < 1) throw InvalidOrder("order must be positive, got " + std::to_string(n));
  check_order(n, options.max_order, options);
  const std::vector<std::string> codes = connected_codes(n, options.workers);
  auto graphs = parallel_map(codes.size(), options.workers, [&](std::size_t i) -> std::optional<Graph> {
    Graph g = from_graph6(codes[i]);
    if (keep && !keep(g)) return std::nullopt;
    return g;
  });
  std::vector<Graph> out;
  for (auto& g : graphs) {
    if (g) out.push_back(std::move(*g));
  }
  return out;
}

ConjectureReport verify_conjecture(int n, const EnumerationOptions& options) {
  if (n < 4) throw InvalidOrder("conjecture check needs order >= 4, got " + std::to_string(n));
  check_order(n, kDefaultMaxOrder, options);
  const auto graphs = enumerate_connected(n, [](const Graph& g) { return chromatic_number(g) == 4; }, options);
  const Poly bound = conjectured_bound(n, 4);

  struct Outcome {
    std::string code;
    GapVerdict verdict;
    std::optional<Violation> sampled;
    bool expected = false;
  };
  auto outcomes = parallel_map(graphs.size(), options.workers, [&](std::size_t i) {
    const Graph& g = graphs[i];
    Outcome out;
    out.code = to_graph6(g);
    out.expected = clique_number(g) == 4 && g.size() == n + 2;
    const Poly gap = bound - chromatic_polynomial(g);
    out.verdict = classify_gap(gap, 4);
    for (int x = 4; x <= 12; ++x) {
      const Rational value = gap(Rational(x));
      if (value < 0) {
        out.sampled = Violation{out.code, Integer(x), -value};
        break;
      }
    }
    return out;
  });

  ConjectureReport report;
  report.check = "conjecture";
  report.order = n;
  report.k = 4;
  report.checked = static_cast<long>(graphs.size());
  for (auto& o : outcomes) {
    if (const auto* v = std::get_if<ViolatedAt>(&o.verdict)) {
      report.violations.push_back({o.code, v->x, v->deficit});
    } else if (o.sampled) {
      report.violations.push_back(*o.sampled);
    }
    if (std::holds_alternative<EqualityEverywhere>(o.verdict)) report.extremal.push_back(o.code);
    if (const auto* s = std::get_if<StrictlyBelow>(&o.verdict); s && !s->certified) {
      report.uncertified.push_back(o.code);
    }
    if (o.expected) report.expected_extremal.push_back(o.code);
  }
  return report;
}

ConjectureReport verify_tomescu3(int n, const EnumerationOptions& options) {
  if (n < 3) throw InvalidOrder("3-chromatic check needs order >= 3, got " + std::to_string(n));
  check_order(n, 8, options);
  const auto graphs = enumerate_connected(n, [](const Graph& g) { return chromatic_number(g) == 3; }, options);
  const Poly xm1 = Poly::linear_factor(1);
  const Poly bound = pow(xm1, static_cast<unsigned>(n)) - (n % 2 == 1 ? xm1 : pow(xm1, 2));
  const std::string extremal_code =
      n % 2 == 1 ? canonical_form(build_cycle(n)) : canonical_form(build_cycle(n - 1).with_vertex(singleton(0)));
  return grid_check("tomescu3", n, 3, graphs, bound, {3, 4, 5, 6, 7, 8},
                    [&](const Graph& g) { return to_graph6(g) == extremal_code; }, options);
}

ConjectureReport verify_clique_bound(int n, int k, const EnumerationOptions& options) {
  if (k < 2) throw InvalidSpec("clique bound check needs k >= 2, got " + std::to_string(k));
  if (n < k) throw InvalidOrder("order " + std::to_string(n) + " is below k = " + std::to_string(k));
  check_order(n, 8, options);
  const auto graphs = enumerate_connected(
      n, [k](const Graph& g) { return clique_number(g) == k && chromatic_number(g) == k; }, options);
  std::vector<int> grid;
  for (int x = k; x <= k + 4; ++x) grid.push_back(x);
  const long edges = binomial2(k) + n - k;
  return grid_check("cliquebound", n, k, graphs, conjectured_bound(n, k), grid,
                    [edges](const Graph& g) { return g.size() == edges; }, options);
}

Sk4Remark sk4_remark_report() {
  Sk4Remark r;
  const SK4Spec spec{3, 4, 4};
  r.graph = build_sk4(spec);
  r.chromatic = chromatic_polynomial(r.graph);
  r.bound = conjectured_bound(r.graph.order(), 4);
  r.difference = r.chromatic - r.bound;
  bool positive = true;
  for (int x : {3, 4, 5, 10}) {
    const Rational value = r.difference(Rational(x));
    r.difference_at.emplace_back(x, value);
    positive = positive && value > 0;
  }
  r.largest_root = largest_real_root(r.difference, kRootWidth);
  r.verdict = gap_verdict_relaxed(r.graph, 4);

  auto top_matches = [](const Poly& p, std::initializer_list<long> expected) {
    if (p.degree() != 12) return false;
    std::size_t d = 12;
    for (long c : expected) {
      if (p.coeff(d--) != c) return false;
    }
    return true;
  };
  r.passed = r.graph.order() == 12 && r.chromatic == sk4_poly(spec) &&
             top_matches(r.chromatic, {1, -14, 90, -352, 935}) && top_matches(r.bound, {1, -14, 87, -318, 762}) &&
             positive && r.largest_root && r.largest_root->hi <= 2 + kRootWidth &&
             std::holds_alternative<ViolatedAt>(r.verdict);
  return r;
}

K33Exploration k33_threshold_explore(int max_size, const std::vector<int>& grid) {
  if (max_size < 1) throw InvalidSpec("max size must be positive, got " + std::to_string(max_size));
  K33Exploration out;
  out.max_size = max_size;
  out.grid = grid;
  std::sort(out.grid.begin(), out.grid.end());

  std::vector<std::array<int, 3>> triples;
  for (int a = 1; a <= max_size; ++a) {
    for (int b = 1; b <= max_size; ++b) {
      for (int c = 1; c <= max_size; ++c) triples.push_back({a, b, c});
    }
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i; j < triples.size(); ++j) {
      for (std::size_t l = j; l < triples.size(); ++l) {
        K33Sample s;
        for (std::size_t idx : {i, j, l}) {
          s.spec.a.push_back(triples[idx][0]);
          s.spec.b.push_back(triples[idx][1]);
          s.spec.c.push_back(triples[idx][2]);
        }
        s.spec.t = 3;
        s.order = k3t_order(s.spec);
        const Poly gap = conjectured_bound(s.order, 4) - k3t_poly(s.spec);
        for (int x : out.grid) s.signs.push_back(sgn(gap(Rational(x))));
        s.largest_root = largest_real_root(gap, kRootWidth);
        for (std::size_t g = out.grid.size(); g-- > 0;) {
          if (s.signs[g] < 0) break;
          s.first_holding_x = out.grid[g];
        }
        if (s.largest_root && (!out.max_root || s.largest_root->hi > *out.max_root)) {
          out.max_root = s.largest_root->hi;
          out.max_root_sample = out.samples.size();
        }
        out.samples.push_back(std::move(s));
      }
    }
  }
  return out;
}

bool CandidateReport::all_strictly_below() const {
  return std::all_of(candidates.begin(), candidates.end(), [](const Candidate& c) {
    const auto* s = std::get_if<StrictlyBelow>(&c.verdict);
    return s != nullptr && s->certified;
  });
}

CandidateReport finite_family_candidates(int n_max, const EnumerationOptions& options) {
  check_order(n_max, kDefaultMaxOrder, options);
  CandidateReport report;
  report.max_order = n_max;
  for (int n = 4; n <= n_max; ++n) {
    const auto graphs = enumerate_connected(
        n, [](const Graph& g) { return is_k_connected(g, 3) && !is_planar(g) && chromatic_number(g) == 4; }, options);
    auto verdicts = parallel_map(graphs.size(), options.workers,
                                 [&](std::size_t i) { return gap_verdict(graphs[i], 4); });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      report.candidates.push_back({to_graph6(graphs[i]), n, std::move(verdicts[i])});
    }
  }
  return report;
}

}  // namespace chromabound
