#ifndef PERMGRAPH_GRAPH_HPP
#define PERMGRAPH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permgraph/bigint.hpp"

namespace permgraph {

// Explicit simple graph on vertices 0..n-1. Immutable after construction;
// adjacency is kept as one 64-bit mask per vertex, which caps n at 64 --
// every explicit graph this library touches is far below that, and the
// exhaustive counting paths rely on mask arithmetic being a single word.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() : n_(0) {}
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint64_t adj(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  // Complete graph on s vertices.
  static Graph complete(int s);

 private:
  void add_edge(int u, int v);

  int n_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::uint64_t> adj_;
};

// Text format: first line is the vertex count, each following nonempty line
// is "u v". Lines starting with '#' are comments. Duplicate edges, loops and
// out-of-range endpoints are errors.
Graph parse_graph(const std::string& text);

// Inverse of parse_graph (edges in sorted order).
std::string graph_to_string(const Graph& g);

Graph complement(const Graph& g);

// Blocks are laid out in list order; vertex v of gs[i] becomes offset_i + v.
Graph disjoint_union(const std::vector<Graph>& gs);

// disjoint_union plus all edges between distinct blocks.
Graph mutual_join(const std::vector<Graph>& gs);

}  // namespace permgraph

#endif
