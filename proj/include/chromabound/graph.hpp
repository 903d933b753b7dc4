#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chromabound {

/// Vertex subsets of graphs with at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet prefix_mask(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Parallel edges collapse on
/// construction; loops and out-of-range endpoints throw InvalidEdge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Rows must be symmetric with a zero diagonal.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  VertexSet vertices() const { return prefix_mask(order()); }
  std::vector<Edge> edges() const;
  std::span<const VertexSet> adjacency() const { return adj_; }

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;
  /// Merges e.v into e.u, drops the contracted edge, collapses parallel edges
  /// and relabels the survivors to 0..n-2 in order.
  Graph contract(Edge e) const;
  /// Adds one vertex (label n) adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  /// Induced subgraph on `keep`, relabelled in increasing order.
  Graph induced(VertexSet keep) const;
  /// Vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void link(int u, int v);
  std::vector<VertexSet> adj_;
};

/// Edges of K_n.
inline long complete_size(int n) { return static_cast<long>(n) * (n - 1) / 2; }

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

struct BlockDecomposition {
  /// Vertex sets of the blocks; each induces a maximal 2-connected subgraph
  /// or a bridge.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
};

/// Throws Disconnected for a disconnected graph. A single vertex has no blocks.
BlockDecomposition blocks(const Graph& g);

/// Connected and no k-1 vertices whose removal disconnects the rest.
bool is_k_connected(const Graph& g, int k);
inline bool connectivity_class(const Graph& g, int k) { return is_k_connected(g, k); }

int chromatic_number(const Graph& g);
bool is_colorable(const Graph& g, int colors);
int clique_number(const Graph& g);
bool is_planar(const Graph& g);

/// Connected with every block an edge or a cycle.
bool is_cactus(const Graph& g);

/// `map[i]` is the host vertex for vertex i of `sub`; checks injectivity and
/// that every edge of `sub` lands on an edge of `host`.
bool is_subgraph_embedding(const Graph& sub, const Graph& host, std::span<const int> map);

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header. Throws MalformedGraph6.
Graph from_graph6(std::string_view text);

/// Equal strings iff the graphs are isomorphic. The string is the graph6 code
/// of the canonically relabelled graph.
std::string canonical_form(const Graph& g);
/// perm[v] is v's canonical label.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);

}  // namespace chromabound
