#include "permgraph/graph.hpp"

#include <algorithm>
#include <sstream>

namespace permgraph {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  if (n > kMaxVertices)
    throw DomainError("vertex count " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
  std::sort(edges_.begin(), edges_.end());
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_)
    throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " +
                      std::to_string(v));
  if (adj_[u] >> v & 1)
    throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  edges_.emplace_back(u, v);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return adj_[u] >> v & 1;
}

Graph Graph::complete(int s) {
  Graph g(s);
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0)
        throw DomainError("line " + std::to_string(lineno) + ": bad vertex count");
    } else {
      int u, v;
      if (!(fields >> u >> v))
        throw DomainError("line " + std::to_string(lineno) + ": expected 'u v'");
      edges.emplace_back(u, v);
    }
    std::string rest;
    if (fields >> rest)
      throw DomainError("line " + std::to_string(lineno) + ": trailing junk '" + rest + "'");
  }
  if (n < 0) throw DomainError("empty graph file");
  return Graph(n, edges);
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges);
}

Graph disjoint_union(const std::vector<Graph>& gs) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const Graph& g : gs) {
    for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
    n += g.n();
  }
  return Graph(n, edges);
}

Graph mutual_join(const std::vector<Graph>& gs) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> offsets;
  for (const Graph& g : gs) {
    offsets.push_back(n);
    for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
    n += g.n();
  }
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      for (int u = 0; u < gs[i].n(); ++u)
        for (int v = 0; v < gs[j].n(); ++v)
          edges.emplace_back(offsets[i] + u, offsets[j] + v);
  return Graph(n, edges);
}

}  // namespace permgraph
