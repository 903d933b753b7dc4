#include "chromabound/chroma.hpp"

#include <algorithm>
#include <functional>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

using Coeffs = std::vector<__int128>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs combine(Coeffs a, const Coeffs& b, int sign) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  trim(a);
  return a;
}

// Divides by x^k; the low coefficients must vanish.
Coeffs divide_by_x_power(Coeffs p, std::size_t k) {
  for (std::size_t i = 0; i < k && i < p.size(); ++i) {
    if (p[i] != 0) throw InexactDivision("block product not divisible by x^" + std::to_string(k));
  }
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::min(k, p.size())));
  return p;
}

Coeffs falling(int k) {
  Coeffs p{1};
  for (int i = 0; i < k; ++i) p = multiply(p, Coeffs{-static_cast<__int128>(i), 1});
  return p;
}

Coeffs cycle(int n) {
  // (x-1)^n + (-1)^n (x-1)
  Coeffs p{1};
  for (int i = 0; i < n; ++i) p = multiply(p, Coeffs{-1, 1});
  const __int128 s = (n % 2 == 0) ? 1 : -1;
  p[0] += -s;
  p[1] += s;
  trim(p);
  return p;
}

Integer to_integer(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

Poly to_poly(const Coeffs& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (__int128 c : p) v.emplace_back(to_integer(c));
  return Poly(std::move(v));
}

}  // namespace

bool ChromaticEngine::within_limits(const Graph& g) { return g.order() <= 33 || g.size() <= 126; }

Poly ChromaticEngine::polynomial(const Graph& g) {
  if (!within_limits(g)) {
    throw InvalidSpec("graph with " + std::to_string(g.order()) + " vertices and " + std::to_string(g.size()) +
                      " edges exceeds the engine's coefficient range");
  }
  return to_poly(solve(g));
}

ChromaticEngine::Coeffs ChromaticEngine::solve(const Graph& g) {
  if (g.order() == 0) return {1};
  const auto comps = components(g);
  if (comps.size() == 1) return solve_connected(g);
  Coeffs acc{1};
  for (VertexSet c : comps) acc = multiply(acc, solve_connected(g.induced(c)));
  return acc;
}

ChromaticEngine::Coeffs ChromaticEngine::solve_connected(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {0, 1};
  if (g.size() == n - 1) {
    // Tree: x (x-1)^(n-1)
    Coeffs p{0, 1};
    for (int i = 1; i < n; ++i) p = multiply(p, Coeffs{-1, 1});
    return p;
  }
  const auto decomposition = blocks(g);
  if (decomposition.blocks.size() == 1) return solve_block(g);
  Coeffs acc{1};
  for (VertexSet b : decomposition.blocks) acc = multiply(acc, solve_block(g.induced(b)));
  return divide_by_x_power(std::move(acc), decomposition.blocks.size() - 1);
}

ChromaticEngine::Coeffs ChromaticEngine::solve_block(const Graph& g) {
  const int n = g.order();
  const long m = g.size();
  if (n == 2) return {0, -1, 1};
  if (m == complete_size(n)) return falling(n);
  if (m == n) return cycle(n);

  std::string key = canonical_form(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Coeffs result;
  if (4 * m <= static_cast<long>(n) * (n - 1)) {
    // Deletion-contraction on an edge at a minimum-degree vertex.
    int u = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) < g.degree(u)) u = v;
    }
    int w = -1;
    for (VertexSet s = g.neighbors(u); s != 0; s &= s - 1) {
      const int c = lowest(s);
      if (w == -1 || g.degree(c) < g.degree(w)) w = c;
    }
    const Edge e(u, w);
    result = combine(solve(g.without_edge(e)), solve(g.contract(e)), -1);
  } else {
    // Addition-contraction on the non-edge between the densest pair.
    int bu = -1, bv = -1, best = -1;
    for (int a = 0; a < n; ++a) {
      VertexSet non = ~g.neighbors(a) & g.vertices() & ~prefix_mask(a + 1);
      for (; non != 0; non &= non - 1) {
        const int b = lowest(non);
        const int score = g.degree(a) + g.degree(b);
        if (score > best) {
          best = score;
          bu = a;
          bv = b;
        }
      }
    }
    const Edge e(bu, bv);
    const Graph added = g.with_edge(e);
    result = combine(solve(added), solve(added.contract(e)), +1);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Poly chromatic_polynomial(const Graph& g) {
  thread_local ChromaticEngine engine;
  // Keep the per-thread memo bounded during long enumerations.
  if (engine.cache_size() > 2'000'000) engine.clear_cache();
  return engine.polynomial(g);
}

Integer count_colorings(const Graph& g, unsigned colors) {
  const int n = g.order();
  if (n == 0) return 1;
  if (colors == 0) return 0;
  // Visit vertices so that each one after the first of its component has an
  // already-coloured neighbour where possible.
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int start = lowest(g.vertices() & ~placed);
    std::vector<int> queue{start};
    placed |= singleton(start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (VertexSet s = g.neighbors(queue[i]) & ~placed; s != 0; s &= s - 1) {
        queue.push_back(lowest(s));
        placed |= singleton(lowest(s));
      }
    }
  }
  std::vector<unsigned> colour(static_cast<std::size_t>(n), 0);
  Integer total = 0;
  std::function<void(std::size_t)> go = [&](std::size_t depth) {
    const int v = order[depth];
    std::vector<bool> blocked(colors, false);
    unsigned free_count = colors;
    for (std::size_t d = 0; d < depth; ++d) {
      const int u = order[d];
      if (g.has_edge(u, v) && !blocked[colour[static_cast<std::size_t>(u)]]) {
        blocked[colour[static_cast<std::size_t>(u)]] = true;
        --free_count;
      }
    }
    if (depth + 1 == order.size()) {
      total += free_count;
      return;
    }
    for (unsigned c = 0; c < colors; ++c) {
      if (blocked[c]) continue;
      colour[static_cast<std::size_t>(v)] = c;
      go(depth + 1);
    }
  };
  go(0);
  return total;
}

Poly clique_sum_polynomial(std::span<const Poly> parts, unsigned r, std::size_t count) {
  if (count != parts.size()) {
    throw InvalidSpec("clique sum count " + std::to_string(count) + " but " + std::to_string(parts.size()) + " parts");
  }
  if (parts.empty()) throw InvalidSpec("clique sum of no parts");
  Poly product = Poly::constant(1);
  for (const Poly& p : parts) product *= p;
  return exact_div(product, pow(falling_factorial(r), static_cast<unsigned>(count - 1)));
}

Poly cycle_polynomial(unsigned n) {
  const Poly xm1 = Poly::linear_factor(1);
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  return pow(xm1, n) + sign * xm1;
}

}  // namespace chromabound
