#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromabound/graph.hpp"
#include "chromabound/poly.hpp"

namespace chromabound {

/// Exact chromatic polynomials by component/block splitting, recognition of
/// trees, cycles and complete blocks, and memoised deletion-contraction
/// (sparse blocks) or addition-contraction (dense blocks). The memo is keyed
/// on canonical forms and owned by the engine, so each worker thread should
/// hold its own engine.
class ChromaticEngine {
 public:
  Poly polynomial(const Graph& g);

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

  /// Coefficients of chromatic polynomials stay inside 128 bits when n <= 33
  /// (|a_i| <= n!) or |E| <= 126 (|a_i| <= 2^|E|).
  static bool within_limits(const Graph& g);

 private:
  using Coeffs = std::vector<__int128>;
  Coeffs solve(const Graph& g);
  Coeffs solve_connected(const Graph& g);
  Coeffs solve_block(const Graph& g);

  std::unordered_map<std::string, Coeffs> memo_;
};

/// pi(G, x) using a per-thread engine.
Poly chromatic_polynomial(const Graph& g);

/// Number of proper colourings with `colors` colours by exhaustive
/// backtracking; independent of the polynomial engine.
Integer count_colorings(const Graph& g, unsigned colors);

/// prod(parts) / ((x)_r)^(count-1). `count` must equal parts.size().
/// Throws InexactDivision when the parts do not share an r-clique.
Poly clique_sum_polynomial(std::span<const Poly> parts, unsigned r, std::size_t count);

/// (x-1)^n + (-1)^n (x-1).
Poly cycle_polynomial(unsigned n);

}  // namespace chromabound
