#pragma once

// Structural property suites. Each returns how many cases ran and a note for
// the first failure, so the unit tests and the acceptance binary share them.

#include <algorithm>
#include <cstdlib>
#include <string>

#include "chromabound/chroma.hpp"
#include "chromabound/families.hpp"
#include "oracles.hpp"

namespace oracle {

struct SuiteResult {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }
  void fail(const std::string& note) {
    if (failed++ == 0) first_failure = note;
  }
};

inline Graph identify(const Graph& g, Edge e) { return g.with_edge(e).contract(e); }

/// pi(g) = pi(g + e) + pi(g / e) for random graphs and non-edges e.
inline SuiteResult addition_contraction_suite(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(3, 9);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  SuiteResult r;
  while (r.checked < count) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    const auto e = random_non_edge(rng, g);
    if (!e) continue;
    ++r.checked;
    if (chromatic_polynomial(g) != chromatic_polynomial(g.with_edge(*e)) + chromatic_polynomial(identify(g, *e))) {
      r.fail(to_graph6(g));
    }
  }
  return r;
}

/// chi(g) = min(chi(g+e), chi(g/e)) and |chi(g+e) - chi(g/e)| <= 1.
inline SuiteResult chromatic_relation_suite(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(3, 10);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  SuiteResult r;
  while (r.checked < count) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    const auto e = random_non_edge(rng, g);
    if (!e) continue;
    ++r.checked;
    const int plus = chromatic_number(g.with_edge(*e));
    const int merged = chromatic_number(identify(g, *e));
    if (chromatic_number(g) != std::min(plus, merged) || std::abs(plus - merged) > 1) r.fail(to_graph6(g));
  }
  return r;
}

/// pi(G, x) <= pi(H, x) (x-1)^{|G|-|H|} for connected H inside connected G.
inline SuiteResult subgraph_suite(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(2, 9);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  SuiteResult r;
  for (; r.checked < count; ++r.checked) {
    const Graph g = random_connected(rng, order(rng), density(rng));
    const Graph h = random_connected_subgraph(rng, g);
    const Poly pg = chromatic_polynomial(g);
    const Poly ph = chromatic_polynomial(h);
    for (int x = 2; x <= 8; ++x) {
      Rational scale(1);
      for (int i = 0; i < g.order() - h.order(); ++i) scale *= x - 1;
      if (pg(Rational(x)) > ph(Rational(x)) * scale) {
        r.fail(to_graph6(g) + " / " + to_graph6(h) + " at x=" + std::to_string(x));
        break;
      }
    }
  }
  return r;
}

/// shift(theta_poly(s), 1) equals the shifted closed form for s_i <= max_s.
inline SuiteResult theta_shift_suite(int max_s) {
  SuiteResult r;
  for (int a = 1; a <= max_s; ++a) {
    for (int b = 1; b <= max_s; ++b) {
      for (int c = 1; c <= max_s; ++c, ++r.checked) {
        const ThetaSpec s{a, b, c};
        if (shift(theta_poly(s), 1) != theta_poly_shifted(s)) {
          r.fail(std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
  }
  return r;
}

/// The witness is a cactus with t/2 cycles, its cycle sizes are as listed,
/// and the vertex map embeds it in the host.
inline bool witness_ok(CactusHost host, int t, std::vector<int> expected_cycles, std::string* note = nullptr) {
  const CactusWitness w = cactus_witness(host, t);
  const Graph host_graph = host == CactusHost::Wheel ? build_wheel(t) : build_vt(t);
  std::vector<int> cycles = w.spec.cycles;
  std::sort(cycles.begin(), cycles.end());
  std::sort(expected_cycles.begin(), expected_cycles.end());
  auto complain = [&](const char* what) {
    if (note) *note = what;
    return false;
  };
  if (!is_cactus(w.cactus)) return complain("not a cactus");
  if (cycles != expected_cycles) return complain("unexpected cycle sizes");
  if (w.cactus.order() != cactus_order(w.spec)) return complain("order disagrees with spec");
  // A connected graph with p independent cycles has m = n - 1 + p.
  if (w.cactus.size() != w.cactus.order() - 1 + static_cast<int>(cycles.size())) return complain("cycle count");
  if (!is_subgraph_embedding(w.cactus, host_graph, w.embedding)) return complain("embedding fails");
  if (chromatic_polynomial(w.cactus) != cactus_poly(w.spec)) return complain("polynomial disagrees");
  return true;
}

}  // namespace oracle
