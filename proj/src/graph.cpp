#include "chromabound/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

std::string edge_text(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidSpec("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) link(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  check_order(static_cast<int>(rows.size()));
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

void Graph::link(int u, int v) {
  if (u == v) throw InvalidEdge("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw InvalidEdge("edge " + edge_text(Edge(u, v)) + " outside 0.." + std::to_string(order() - 1));
  }
  adj_[static_cast<std::size_t>(u)] |= singleton(v);
  adj_[static_cast<std::size_t>(v)] |= singleton(u);
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  return (adj_[static_cast<std::size_t>(u)] & singleton(v)) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    VertexSet higher = neighbors(u) & ~prefix_mask(u + 1);
    for (; higher != 0; higher &= higher - 1) out.emplace_back(u, lowest(higher));
  }
  return out;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u == e.v || e.v >= order() || e.u < 0) throw InvalidEdge("cannot add " + edge_text(e));
  if (has_edge(e.u, e.v)) throw InvalidEdge("edge " + edge_text(e) + " already present");
  Graph g = *this;
  g.link(e.u, e.v);
  return g;
}

Graph Graph::without_edge(Edge e) const {
  if (!has_edge(e.u, e.v)) throw InvalidEdge("edge " + edge_text(e) + " not present");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(e.u)] &= ~singleton(e.v);
  g.adj_[static_cast<std::size_t>(e.v)] &= ~singleton(e.u);
  return g;
}

Graph Graph::contract(Edge e) const {
  if (!has_edge(e.u, e.v)) throw InvalidEdge("edge " + edge_text(e) + " not present");
  const int n = order();
  const int gone = e.v;
  // Squeeze bit `gone` out of a set.
  auto squeeze = [gone](VertexSet s) {
    VertexSet low = s & prefix_mask(gone);
    VertexSet high = (s >> 1) & ~prefix_mask(gone);
    return low | high;
  };
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(n - 1));
  const VertexSet merged = (neighbors(e.u) | neighbors(e.v)) & ~singleton(e.u) & ~singleton(e.v);
  for (int w = 0; w < n; ++w) {
    if (w == gone) continue;
    VertexSet row = neighbors(w);
    if (w == e.u) {
      row = merged;
    } else if (row & singleton(gone)) {
      row = (row & ~singleton(gone)) | singleton(e.u);
    }
    rows.push_back(squeeze(row));
  }
  return from_adjacency(std::move(rows));
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  const int n = order();
  if (n + 1 > kMaxVertices) throw InvalidSpec("graph order would exceed " + std::to_string(kMaxVertices));
  if (nbrs & ~prefix_mask(n)) throw InvalidEdge("neighbour outside the graph");
  std::vector<VertexSet> rows = adj_;
  for (VertexSet s = nbrs; s != 0; s &= s - 1) rows[static_cast<std::size_t>(lowest(s))] |= singleton(n);
  rows.push_back(nbrs);
  return from_adjacency(std::move(rows));
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  int next = 0;
  for (VertexSet s = keep; s != 0; s &= s - 1) index[static_cast<std::size_t>(lowest(s))] = next++;
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(next));
  for (VertexSet s = keep; s != 0; s &= s - 1) {
    VertexSet row = 0;
    for (VertexSet t = neighbors(lowest(s)) & keep; t != 0; t &= t - 1) {
      row |= singleton(index[static_cast<std::size_t>(lowest(t))]);
    }
    rows.push_back(row);
  }
  return from_adjacency(std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw InvalidSpec("permutation size mismatch");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    VertexSet row = 0;
    for (VertexSet t = neighbors(u); t != 0; t &= t - 1) row |= singleton(perm[static_cast<std::size_t>(lowest(t))]);
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = row;
  }
  return from_adjacency(std::move(rows));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    VertexSet comp = singleton(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

BlockDecomposition blocks(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("block decomposition needs a connected graph");
  BlockDecomposition out;
  const int n = g.order();
  if (n <= 1) return out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int time = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = time++;
    int children = 0;
    for (VertexSet s = g.neighbors(u); s != 0; s &= s - 1) {
      const int w = lowest(s);
      if (disc[static_cast<std::size_t>(w)] == -1) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
          if (parent != -1 || children > 1) out.cut_vertices |= singleton(u);
          VertexSet block = 0;
          const Edge top(u, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block |= singleton(e.u) | singleton(e.v);
            if (e == top) break;
          }
          out.blocks.push_back(block);
        }
      } else if (w != parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, w);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
      }
    }
    // The root is a cut vertex only with more than one DFS child.
    if (parent == -1 && children <= 1) out.cut_vertices &= ~singleton(u);
  };
  dfs(0, -1);
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw InvalidSpec("connectivity level must be >= 1");
  if (!is_connected(g)) return false;
  const int n = g.order();
  const int removed = k - 1;
  if (removed == 0 || n - removed <= 1) return true;
  // Enumerate all (k-1)-subsets in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(removed));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    VertexSet cut = 0;
    for (int v : pick) cut |= singleton(v);
    if (!is_connected(g.induced(g.vertices() & ~cut))) return false;
    int i = removed - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - removed + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < removed; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int colors;
  std::vector<int> color;
  std::vector<VertexSet> classes;

  bool run(int remaining, int used) {
    if (remaining == 0) return true;
    // Most saturated uncoloured vertex, ties broken by degree.
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[static_cast<std::size_t>(v)] != -1) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (classes[static_cast<std::size_t>(c)] & g.neighbors(v)) ? 1 : 0;
      const int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes[static_cast<std::size_t>(c)] & g.neighbors(best)) continue;
      color[static_cast<std::size_t>(best)] = c;
      classes[static_cast<std::size_t>(c)] |= singleton(best);
      if (run(remaining - 1, std::max(used, c + 1))) return true;
      classes[static_cast<std::size_t>(c)] &= ~singleton(best);
      color[static_cast<std::size_t>(best)] = -1;
    }
    return false;
  }
};

int greedy_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<VertexSet> classes;
  for (int v : order) {
    bool placed = false;
    for (auto& cls : classes) {
      if (!(cls & g.neighbors(v))) {
        cls |= singleton(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(singleton(v));
  }
  return static_cast<int>(classes.size());
}

void max_clique(const Graph& g, VertexSet candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + popcount(candidates) <= best) return;
    const int v = lowest(candidates);
    candidates &= ~singleton(v);
    max_clique(g, candidates & g.neighbors(v), size + 1, best);
  }
}

}  // namespace

bool is_colorable(const Graph& g, int colors) {
  if (g.order() == 0) return true;
  if (colors <= 0) return false;
  ColoringSearch search{g, colors, std::vector<int>(static_cast<std::size_t>(g.order()), -1),
                        std::vector<VertexSet>(static_cast<std::size_t>(colors), 0)};
  return search.run(g.order(), 0);
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lower = clique_number(g);
  const int upper = greedy_colors(g);
  for (int k = lower; k < upper; ++k) {
    if (is_colorable(g, k)) return k;
  }
  return upper;
}

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = 1;
  max_clique(g, g.vertices(), 0, best);
  return best;
}

bool is_cactus(const Graph& g) {
  if (!is_connected(g) || g.order() == 0) return false;
  for (VertexSet b : blocks(g).blocks) {
    const Graph block = g.induced(b);
    const int nv = block.order();
    const int ne = block.size();
    if (!(ne == nv - 1 && nv == 2) && ne != nv) return false;
  }
  return true;
}

bool is_subgraph_embedding(const Graph& sub, const Graph& host, std::span<const int> map) {
  if (static_cast<int>(map.size()) != sub.order()) return false;
  VertexSet used = 0;
  for (int image : map) {
    if (image < 0 || image >= host.order() || (used & singleton(image))) return false;
    used |= singleton(image);
  }
  for (const Edge& e : sub.edges()) {
    if (!host.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return false;
  }
  return true;
}

}  // namespace chromabound
