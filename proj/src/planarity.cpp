#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "chromabound/graph.hpp"

namespace chromabound {

bool is_planar(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace chromabound
