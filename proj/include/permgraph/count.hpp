#ifndef PERMGRAPH_COUNT_HPP
#define PERMGRAPH_COUNT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/sequence.hpp"

namespace permgraph {

struct CountOptions {
  int vertex_cap = 64;              // refuse recursion above this many vertices
  std::size_t memo_cap = 1u << 22;  // memo entries; past this we recompute
  std::uint64_t oracle_cap = std::uint64_t{1} << 24;  // subsets per oracle pass
};

// i_k(g) for k = 1..alpha(g), by the deletion recursion
// I(G) = I(G - v) + x * I(G - N[v]) with v the lowest-numbered remaining
// vertex, memoized on the remaining-vertex mask.
CountSequence independent_set_sequence(const Graph& g, const CountOptions& opt = {});

// m_k(g) for k = 1..nu(g): a matching either leaves the lowest remaining
// vertex v exposed or uses one edge at v.
CountSequence matching_sequence(const Graph& g, const CountOptions& opt = {});

int alpha(const Graph& g, const CountOptions& opt = {});
int nu(const Graph& g, const CountOptions& opt = {});

// Number of k-cliques for k = 1..omega(g), by candidate-set extension. With
// complement() this is a second, structurally different route to the
// independent set sequence.
CountSequence clique_sequence(const Graph& g, const CountOptions& opt = {});

// Brute-force verification path: flat enumeration of all vertex subsets
// (resp. all edge subsets). Shares no code with the recursive counters.
CountSequence oracle_independent_sequence(const Graph& g, const CountOptions& opt = {});
CountSequence oracle_matching_sequence(const Graph& g, const CountOptions& opt = {});
std::pair<CountSequence, CountSequence> oracle_sequences(const Graph& g,
                                                         const CountOptions& opt = {});

}  // namespace permgraph

#endif
