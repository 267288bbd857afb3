#ifndef PERMGRAPH_SEARCH_HPP
#define PERMGRAPH_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permgraph/count.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/order.hpp"

namespace permgraph {

enum class Dedup { none, canonical };

// Edge-mask encoding used by the exhaustive scans: bit i of the mask is
// edge slot i, slots ordered (0,1),(0,2),...,(0,v-1),(1,2),... for v <= 10.
std::uint64_t graph_to_mask(const Graph& g);
Graph mask_to_graph(int v, std::uint64_t mask);

// Lexicographically smallest edge mask over all vertex relabelings (v <= 8).
std::uint64_t canonical_form(const Graph& g);

// The two quantities the lemma31 scan computes per graph, exposed so they
// can be validated against the full matching counter (v <= 10).
bool has_matching_of_size(const Graph& g, int k);
long long disjoint_edge_pairs(const Graph& g);

// Streams all 2^C(v,2) labeled graphs on v vertices in mask order, or one
// representative (the minimal mask) per isomorphism class when dedup is
// canonical. Labeled streams allow v <= 10, canonical v <= 8.
class GraphEnumerator {
 public:
  GraphEnumerator(int v, Dedup dedup);
  ~GraphEnumerator();
  GraphEnumerator(GraphEnumerator&&) noexcept;
  GraphEnumerator& operator=(GraphEnumerator&&) noexcept;

  std::optional<Graph> next();
  void reset() { cursor_ = 0; }

 private:
  int v_;
  Dedup dedup_;
  std::uint64_t cursor_ = 0;
  std::uint64_t total_;
  struct Tables;
  Tables* tables_ = nullptr;  // canonical mode only
};

struct Counterexample {
  std::string graph;  // graph file format, reproducible
  std::string note;
};

struct Lemma31Witness {
  std::string graph;
  long long m1 = 0;
  long long m2 = 0;
};

struct CensusEntry {
  CountSequence sequence;
  std::vector<Permutation> permutations;
  std::string witness;  // graph file format
};

struct CampaignReport {
  std::string campaign;
  std::vector<std::pair<std::string, long long>> params;
  unsigned long long examined = 0;
  unsigned long long eligible = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<Lemma31Witness> sparsest_eligible;      // lemma31
  std::map<int, std::vector<CensusEntry>> census;       // classify, keyed by n
  int workers = 1;
  long long wall_ms = 0;
};

// Every graph with at most vmax vertices and a matching of size >= 4 must
// satisfy m_2 > m_1. Scans all labeled graphs on 8..vmax vertices (smaller
// graphs cannot host a 4-matching); m_1 and m_2 are computed directly from
// the edge mask rather than through the full sequence machinery.
CampaignReport campaign_lemma31(int vmax, int workers = 0);

// Matching sequences of all isomorphism classes on vmax vertices pass
// theorem32_check at n = nu(G) and are strongly unimodal. Classes on
// exactly vmax vertices cover everything smaller: padding a graph with
// isolated vertices does not change its matchings.
CampaignReport campaign_theorem32(int vmax, int workers = 0);

// Over all isomorphism classes with <= vmax vertices (per vertex count,
// since isolated vertices do change independent set counts): whenever
// alpha(G) = m and i_m < m^m, also i_m < i_{m-1}.
CampaignReport campaign_part2(int m, int vmax, int workers = 0);

// Census of matching sequences by nu over all classes on vmax vertices,
// with the associated permutation set of each sequence; written as JSONL to
// out_path. Census sizes are lower bounds on the number of realizable
// matching permutations. With Dedup::none the scan skips canonicalization
// and dedups by sequence alone; the census (including witnesses) is
// identical either way.
CampaignReport campaign_classify(int vmax, const std::string& out_path, int workers = 0,
                                 Dedup dedup = Dedup::canonical);

// Worker count: explicit request, else PERMGRAPH_THREADS, else hardware.
int resolve_workers(int requested);

}  // namespace permgraph

#endif
