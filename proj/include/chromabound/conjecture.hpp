#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chromabound/families.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/poly.hpp"
#include "chromabound/roots.hpp"

namespace chromabound {

inline constexpr int kDefaultMaxOrder = 9;

/// bound - pi > 0 for every real x >= k, unless `certified` is false: then
/// the gap has a real zero at or beyond k but no integer x >= k violates it.
struct StrictlyBelow {
  std::optional<RootInterval> largest_root;
  bool certified = true;
};
struct EqualityEverywhere {};
/// pi(g, x) exceeds the bound at the integer x by `deficit`.
struct ViolatedAt {
  Integer x;
  Rational deficit;
};
using GapVerdict = std::variant<StrictlyBelow, EqualityEverywhere, ViolatedAt>;

/// (x)_k (x-1)^(n-k). Throws InvalidOrder when n < k.
Poly conjectured_bound(int n, int k);

/// Compares pi(g) with conjectured_bound(n, k) on x >= k. Throws Disconnected
/// and WrongChromaticNumber.
GapVerdict gap_verdict(const Graph& g, int k = 4);
/// As gap_verdict without the chromatic number precondition.
GapVerdict gap_verdict_relaxed(const Graph& g, int k);
/// Verdict for a precomputed gap polynomial bound - pi.
GapVerdict classify_gap(const Poly& gap, int k);

struct EnumerationOptions {
  int max_order = kDefaultMaxOrder;
  int workers = 1;
};

using GraphPredicate = std::function<bool(const Graph&)>;

/// One canonically labelled representative per isomorphism class of connected
/// graphs of order n that satisfy `keep`, sorted by canonical form. Throws
/// OrderTooLarge above options.max_order.
std::vector<Graph> enumerate_connected(int n, const GraphPredicate& keep = {},
                                       const EnumerationOptions& options = {});

struct Violation {
  std::string graph6;
  Integer x;
  Rational deficit;
};

/// Outcome of an exhaustive check at one order. Graph lists hold canonical
/// graph6 codes in sorted order.
struct ConjectureReport {
  std::string check;
  int order = 0;
  int k = 0;
  long checked = 0;
  /// Integer grid for the sampled checks; empty when verdicts are certified
  /// over the reals.
  std::vector<int> grid;
  std::vector<Violation> violations;
  /// Gaps with a real zero beyond k that no integer violates.
  std::vector<std::string> uncertified;
  std::vector<std::string> extremal;
  std::vector<std::string> expected_extremal;

  bool extremal_matches() const { return extremal == expected_extremal; }
  bool passed() const { return violations.empty() && uncertified.empty() && extremal_matches(); }
};

/// Every connected 4-chromatic graph of order n against the k = 4 bound; the
/// equality set must be the graphs with clique number 4 and n + 2 edges.
ConjectureReport verify_conjecture(int n, const EnumerationOptions& options = {});
/// Connected 3-chromatic graphs of order n (3 <= n <= 8) at x = 3..8 against
/// (x-1)^n - (x-1) for odd n and (x-1)^n - (x-1)^2 for even n.
ConjectureReport verify_tomescu3(int n, const EnumerationOptions& options = {});
/// Connected graphs with chi = omega = k (n <= 8) at x = k..k+4 against the
/// conjectured bound; equality exactly on the graphs with C(k,2) + n - k edges.
ConjectureReport verify_clique_bound(int n, int k, const EnumerationOptions& options = {});

struct Sk4Remark {
  Graph graph;
  Poly chromatic;
  Poly bound;
  /// chromatic - bound.
  Poly difference;
  std::vector<std::pair<int, Rational>> difference_at;
  std::optional<RootInterval> largest_root;
  GapVerdict verdict;
  bool passed = false;
};

/// SK4^{3,4,4} against (x)_4 (x-1)^8.
Sk4Remark sk4_remark_report();

struct K33Sample {
  K3tSpec spec;
  int order = 0;
  /// Sign of bound - pi at each grid point.
  std::vector<int> signs;
  std::optional<RootInterval> largest_root;
  /// Smallest grid x from which the bound holds at every later grid point.
  std::optional<int> first_holding_x;
};

struct K33Exploration {
  int max_size = 0;
  std::vector<int> grid;
  std::vector<K33Sample> samples;
  /// Largest upper end among the samples' largest roots, and where it occurs.
  std::optional<Rational> max_root;
  std::optional<std::size_t> max_root_sample;
  Rational reference = ratio(7405, 1000);
};

/// Every subdivision of K_{3,3} with path sizes in 1..max_size, one per
/// multiset of (a_i, b_i, c_i) triples.
K33Exploration k33_threshold_explore(int max_size, const std::vector<int>& grid = {4, 5, 6, 7, 8, 9, 10});

struct Candidate {
  std::string graph6;
  int order = 0;
  GapVerdict verdict;
};

struct CandidateReport {
  int max_order = 0;
  std::vector<Candidate> candidates;
  bool all_strictly_below() const;
};

/// 3-connected nonplanar 4-chromatic graphs of order 4..n_max with verdicts.
CandidateReport finite_family_candidates(int n_max, const EnumerationOptions& options = {});

}  // namespace chromabound
