#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

namespace {

// Colours are cell start positions in the ordered partition, so a cell of
// size s with colour c owns positions c..c+s-1.
using Colouring = std::vector<int>;

int distinct_colours(const Colouring& c) {
  std::vector<int> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Coarsest equitable refinement of `colour`.
void refine(const Graph& g, Colouring& colour) {
  const int n = g.order();
  int cells = distinct_colours(colour);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> key(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n) + 1));
  while (cells < n) {
    for (int v = 0; v < n; ++v) {
      auto& k = key[static_cast<std::size_t>(v)];
      std::fill(k.begin(), k.end(), 0);
      k[0] = colour[static_cast<std::size_t>(v)];
      for (VertexSet s = g.neighbors(v); s != 0; s &= s - 1) {
        ++k[static_cast<std::size_t>(colour[static_cast<std::size_t>(lowest(s))]) + 1];
      }
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
    Colouring next(static_cast<std::size_t>(n));
    int start = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] != key[static_cast<std::size_t>(idx[static_cast<std::size_t>(i - 1)])]) start = i;
      next[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = start;
    }
    const int next_cells = distinct_colours(next);
    colour = std::move(next);
    if (next_cells == cells) break;
    cells = next_cells;
  }
}

bool twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~singleton(v)) == (g.neighbors(v) & ~singleton(u));
}

struct Search {
  const Graph& g;
  std::string best_code;
  std::vector<int> best_perm;

  void leaf(const Colouring& colour) {
    std::string code = to_graph6(g.relabeled(colour));
    if (best_perm.empty() || code < best_code) {
      best_code = std::move(code);
      best_perm = colour;
    }
  }

  void descend(Colouring colour) {
    refine(g, colour);
    const int n = g.order();
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 && (target == -1 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) target = c;
    }
    if (target == -1) {
      leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colour[static_cast<std::size_t>(v)] != target) continue;
      // Swapping twins is an automorphism fixing the current colouring.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Colouring child = colour;
      for (int w = 0; w < n; ++w) {
        if (w != v && colour[static_cast<std::size_t>(w)] == target) child[static_cast<std::size_t>(w)] = target + 1;
      }
      descend(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  Search search{g, {}, {}};
  search.descend(Colouring(static_cast<std::size_t>(g.order()), 0));
  return search.best_perm;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return to_graph6(g);
  Search search{g, {}, {}};
  search.descend(Colouring(static_cast<std::size_t>(g.order()), 0));
  return search.best_code;
}

}  // namespace chromabound
