#include "permgraph/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <thread>

namespace permgraph {

namespace {

constexpr int kMaxLabeledVertices = 10;  // 45 edge slots
constexpr int kMaxCanonicalVertices = 8;

int slot_count(int v) { return v * (v - 1) / 2; }

struct SlotLayout {
  int v = 0;
  int nslots = 0;
  std::array<std::pair<int, int>, 45> pair_of{};
  std::array<std::array<int, 10>, 10> slot_of{};

  explicit SlotLayout(int v_in) : v(v_in), nslots(slot_count(v_in)) {
    int s = 0;
    for (int u = 0; u < v; ++u)
      for (int w = u + 1; w < v; ++w) {
        pair_of[static_cast<std::size_t>(s)] = {u, w};
        slot_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = s;
        slot_of[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = s;
        ++s;
      }
  }
};

// slot -> slot maps for every non-identity vertex permutation
struct PermSlotMaps {
  int v = 0;
  std::vector<std::vector<std::uint8_t>> maps;

  explicit PermSlotMaps(int v_in) : v(v_in) {
    SlotLayout layout(v);
    std::vector<int> perm(static_cast<std::size_t>(v));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::uint8_t> map(static_cast<std::size_t>(layout.nslots));
      for (int s = 0; s < layout.nslots; ++s) {
        auto [u, w] = layout.pair_of[static_cast<std::size_t>(s)];
        map[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(
            layout.slot_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                          [static_cast<std::size_t>(perm[static_cast<std::size_t>(w)])]);
      }
      maps.push_back(std::move(map));
    }
  }
};

std::uint64_t relabel_mask(std::uint64_t mask, const std::uint8_t* map) {
  std::uint64_t out = 0;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << map[s];
  }
  return out;
}

bool is_minimal_mask(std::uint64_t mask, const PermSlotMaps& maps) {
  if (mask == 0) return true;
  for (const auto& map : maps.maps)
    if (relabel_mask(mask, map.data()) < mask) return false;
  return true;
}

}  // namespace

std::uint64_t graph_to_mask(const Graph& g) {
  if (g.n() > kMaxLabeledVertices)
    throw DomainError("graph_to_mask: more than " + std::to_string(kMaxLabeledVertices) +
                      " vertices");
  SlotLayout layout(g.n());
  std::uint64_t mask = 0;
  for (auto [u, w] : g.edges())
    mask |= std::uint64_t{1}
            << layout.slot_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
  return mask;
}

Graph mask_to_graph(int v, std::uint64_t mask) {
  if (v > kMaxLabeledVertices) throw DomainError("mask_to_graph: vertex count too large");
  SlotLayout layout(v);
  std::vector<std::pair<int, int>> edges;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    edges.push_back(layout.pair_of[static_cast<std::size_t>(s)]);
  }
  return Graph(v, edges);
}

std::uint64_t canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices)
    throw DomainError("canonical_form: more than " + std::to_string(kMaxCanonicalVertices) +
                      " vertices");
  PermSlotMaps maps(g.n());
  std::uint64_t best = graph_to_mask(g);
  std::uint64_t start = best;
  for (const auto& map : maps.maps) best = std::min(best, relabel_mask(start, map.data()));
  return best;
}

struct GraphEnumerator::Tables {
  PermSlotMaps maps;
  explicit Tables(int v) : maps(v) {}
};

GraphEnumerator::GraphEnumerator(int v, Dedup dedup) : v_(v), dedup_(dedup) {
  if (v < 0) throw DomainError("enumerate_graphs: negative vertex count");
  if (dedup == Dedup::none && v > kMaxLabeledVertices)
    throw DomainError("enumerate_graphs: labeled enumeration capped at v <= 10");
  if (dedup == Dedup::canonical && v > kMaxCanonicalVertices)
    throw DomainError("enumerate_graphs: canonical enumeration capped at v <= 8");
  total_ = std::uint64_t{1} << slot_count(v);
  if (dedup == Dedup::canonical) tables_ = new Tables(v);
}

GraphEnumerator::~GraphEnumerator() { delete tables_; }

GraphEnumerator::GraphEnumerator(GraphEnumerator&& o) noexcept
    : v_(o.v_), dedup_(o.dedup_), cursor_(o.cursor_), total_(o.total_), tables_(o.tables_) {
  o.tables_ = nullptr;
}

GraphEnumerator& GraphEnumerator::operator=(GraphEnumerator&& o) noexcept {
  std::swap(v_, o.v_);
  std::swap(dedup_, o.dedup_);
  std::swap(cursor_, o.cursor_);
  std::swap(total_, o.total_);
  std::swap(tables_, o.tables_);
  return *this;
}

std::optional<Graph> GraphEnumerator::next() {
  while (cursor_ < total_) {
    std::uint64_t mask = cursor_++;
    if (dedup_ == Dedup::canonical && !is_minimal_mask(mask, tables_->maps)) continue;
    return mask_to_graph(v_, mask);
  }
  return std::nullopt;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PERMGRAPH_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Contiguous mask ranges (a prefix of the edge encoding selects the shard);
// a pool of `workers` threads drains the shard queue, partial results are
// merged in shard order so the outcome never depends on scheduling.
template <typename Partial, typename ShardFn>
std::vector<Partial> run_sharded(std::uint64_t total, int workers, int shards_per_worker,
                                 ShardFn shard_fn) {
  int nshards = std::max(1, workers * shards_per_worker);
  std::vector<Partial> partials(static_cast<std::size_t>(nshards));
  std::atomic<int> next_shard{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto drain = [&](int worker) {
    try {
      for (;;) {
        int s = next_shard.fetch_add(1);
        if (s >= nshards) return;
        std::uint64_t lo = total / static_cast<unsigned>(nshards) * static_cast<unsigned>(s) +
                           std::min<std::uint64_t>(s, total % static_cast<unsigned>(nshards));
        std::uint64_t hi = total / static_cast<unsigned>(nshards) +
                           (static_cast<std::uint64_t>(s) < total % static_cast<unsigned>(nshards) ? 1 : 0) + lo;
        shard_fn(partials[static_cast<std::size_t>(s)], lo, hi);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(worker)] = std::current_exception();
    }
  };
  if (workers <= 1) {
    drain(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return partials;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

// matching of `need` disjoint edges within `avail`, adjacency as 16-bit masks
bool has_matching(const std::array<std::uint16_t, 10>& adj, std::uint32_t avail, int need) {
  if (need == 0) return true;
  std::uint32_t nb;
  for (;;) {
    if (std::popcount(avail) < 2 * need) return false;
    nb = adj[static_cast<std::size_t>(std::countr_zero(avail))] & avail;
    if (nb) break;
    avail &= avail - 1;  // the lowest vertex can never be matched, discard it
  }
  std::uint32_t rest = avail & (avail - 1);
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    if (has_matching(adj, rest & ~(std::uint32_t{1} << u), need - 1)) return true;
  }
  return has_matching(adj, rest, need);  // leave the lowest vertex exposed
}

}  // namespace

bool has_matching_of_size(const Graph& g, int k) {
  if (g.n() > kMaxLabeledVertices)
    throw DomainError("has_matching_of_size: more than 10 vertices");
  if (k <= 0) return true;
  std::array<std::uint16_t, 10> adj{};
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  }
  return has_matching(adj, (1u << g.n()) - 1, k);
}

long long disjoint_edge_pairs(const Graph& g) {
  long long pairs = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
      auto [a, b] = g.edges()[i];
      auto [c, d] = g.edges()[j];
      if (c != a && c != b && d != a && d != b) ++pairs;
    }
  return pairs;
}

namespace {

struct Lemma31Partial {
  unsigned long long examined = 0;
  unsigned long long eligible = 0;
  std::vector<Counterexample> counterexamples;
  bool has_witness = false;
  int witness_v = 0;
  long long witness_m1 = 0;
  long long witness_m2 = 0;
  std::uint64_t witness_mask = 0;
};

void merge_lemma31_witness(Lemma31Partial& into, const Lemma31Partial& from) {
  if (!from.has_witness) return;
  if (!into.has_witness ||
      std::tie(from.witness_m1, from.witness_v, from.witness_mask) <
          std::tie(into.witness_m1, into.witness_v, into.witness_mask)) {
    into.has_witness = true;
    into.witness_v = from.witness_v;
    into.witness_m1 = from.witness_m1;
    into.witness_m2 = from.witness_m2;
    into.witness_mask = from.witness_mask;
  }
}

}  // namespace

CampaignReport campaign_lemma31(int vmax, int workers) {
  if (vmax < 1 || vmax > kMaxLabeledVertices)
    throw DomainError("campaign_lemma31: vmax must be in 1..10");
  workers = resolve_workers(workers);
  Timer timer;
  CampaignReport report;
  report.campaign = "lemma31";
  report.params = {{"vmax", vmax}};
  report.workers = workers;

  Lemma31Partial merged;
  // nu >= 4 needs at least 8 vertices, so only v = 8..vmax can contribute
  for (int v = 8; v <= vmax; ++v) {
    SlotLayout layout(v);
    int ns = layout.nslots;
    // per-slot: the higher-indexed vertex-disjoint slots
    std::array<std::uint64_t, 45> disj{};
    for (int i = 0; i < ns; ++i) {
      auto [a, b] = layout.pair_of[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < ns; ++j) {
        auto [c, d] = layout.pair_of[static_cast<std::size_t>(j)];
        if (c != a && c != b && d != a && d != b)
          disj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      }
    }
    std::uint64_t total = std::uint64_t{1} << ns;
    auto shard_fn = [&](Lemma31Partial& part, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++part.examined;
        int m1 = std::popcount(mask);
        if (m1 < 4) continue;
        std::array<std::uint16_t, 10> adj{};
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
          int s = std::countr_zero(rest);
          auto [a, b] = layout.pair_of[static_cast<std::size_t>(s)];
          adj[static_cast<std::size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
          adj[static_cast<std::size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
        }
        if (!has_matching(adj, (1u << v) - 1, 4)) continue;
        ++part.eligible;
        long long m2 = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
          m2 += std::popcount(mask & disj[static_cast<std::size_t>(std::countr_zero(rest))]);
        if (m2 <= m1)
          part.counterexamples.push_back(
              {graph_to_string(mask_to_graph(v, mask)),
               "m2=" + std::to_string(m2) + " <= m1=" + std::to_string(m1)});
        if (!part.has_witness || std::tie(m1, mask) < std::tie(part.witness_m1, part.witness_mask)) {
          part.has_witness = true;
          part.witness_v = v;
          part.witness_m1 = m1;
          part.witness_m2 = m2;
          part.witness_mask = mask;
        }
      }
    };
    auto partials = run_sharded<Lemma31Partial>(total, workers, 16, shard_fn);
    for (const auto& p : partials) {
      merged.examined += p.examined;
      merged.eligible += p.eligible;
      merged.counterexamples.insert(merged.counterexamples.end(), p.counterexamples.begin(),
                                    p.counterexamples.end());
      merge_lemma31_witness(merged, p);
    }
  }

  report.examined = merged.examined;
  report.eligible = merged.eligible;
  report.counterexamples = std::move(merged.counterexamples);
  if (merged.has_witness)
    report.sparsest_eligible = Lemma31Witness{
        graph_to_string(mask_to_graph(merged.witness_v, merged.witness_mask)),
        merged.witness_m1, merged.witness_m2};
  report.wall_ms = timer.ms();
  return report;
}

namespace {

struct ScanPartial {
  unsigned long long examined = 0;
  unsigned long long eligible = 0;
  std::vector<Counterexample> counterexamples;
};

// Runs `body` over every canonical (minimal-mask) graph on exactly v
// vertices, sharded over the mask space.
template <typename Body>
std::vector<ScanPartial> scan_canonical(int v, int workers, Body body) {
  if (v > kMaxCanonicalVertices)
    throw DomainError("canonical scan capped at v <= " + std::to_string(kMaxCanonicalVertices));
  PermSlotMaps maps(v);
  std::uint64_t total = std::uint64_t{1} << slot_count(v);
  auto shard_fn = [&](ScanPartial& part, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (!is_minimal_mask(mask, maps)) continue;
      ++part.examined;
      body(part, mask);
    }
  };
  return run_sharded<ScanPartial>(total, workers, 8, shard_fn);
}

}  // namespace

CampaignReport campaign_theorem32(int vmax, int workers) {
  if (vmax < 1 || vmax > 9) throw DomainError("campaign_theorem32: vmax must be in 1..9");
  workers = resolve_workers(workers);
  Timer timer;
  CampaignReport report;
  report.campaign = "theorem32";
  report.params = {{"vmax", vmax}};
  report.workers = workers;

  auto partials = scan_canonical(vmax, workers, [&](ScanPartial& part, std::uint64_t mask) {
    Graph g = mask_to_graph(vmax, mask);
    CountSequence seq = matching_sequence(g);
    int n = seq.length();
    ++part.eligible;
    for (auto [k, l] : theorem32_check(seq, n))
      part.counterexamples.push_back({graph_to_string(g),
                                      "m_" + std::to_string(k) + " >= m_" + std::to_string(l) +
                                          " with nu=" + std::to_string(n)});
    if (!schwenk_check(seq))
      part.counterexamples.push_back(
          {graph_to_string(g), "matching sequence not strongly unimodal: " + sequence_to_csv(seq)});
  });

  for (const auto& p : partials) {
    report.examined += p.examined;
    report.eligible += p.eligible;
    report.counterexamples.insert(report.counterexamples.end(), p.counterexamples.begin(),
                                  p.counterexamples.end());
  }
  report.wall_ms = timer.ms();
  return report;
}

CampaignReport campaign_part2(int m, int vmax, int workers) {
  if (m < 2) throw DomainError("campaign_part2: m must be >= 2");
  if (vmax < 1 || vmax > 9) throw DomainError("campaign_part2: vmax must be in 1..9");
  workers = resolve_workers(workers);
  Timer timer;
  CampaignReport report;
  report.campaign = "part2";
  report.params = {{"m", m}, {"vmax", vmax}};
  report.workers = workers;

  Big mm = big_pow(static_cast<long>(m), static_cast<unsigned long>(m));
  // isolated vertices change independent set counts, so every vertex count
  // up to vmax is scanned separately
  for (int v = m; v <= vmax; ++v) {
    auto partials = scan_canonical(v, workers, [&](ScanPartial& part, std::uint64_t mask) {
      Graph g = mask_to_graph(v, mask);
      CountSequence seq = independent_set_sequence(g);
      if (seq.length() != m) return;
      if (!(seq.at(m) < mm)) return;
      ++part.eligible;
      if (!(seq.at(m) < seq.at(m - 1)))
        part.counterexamples.push_back(
            {graph_to_string(g), "i_m=" + seq.at(m).get_str() + " >= i_{m-1}=" +
                                     seq.at(m - 1).get_str()});
    });
    for (const auto& p : partials) {
      report.examined += p.examined;
      report.eligible += p.eligible;
      report.counterexamples.insert(report.counterexamples.end(), p.counterexamples.begin(),
                                    p.counterexamples.end());
    }
  }
  report.wall_ms = timer.ms();
  return report;
}

namespace {

struct SequenceKey {
  std::vector<Big> values;
  bool operator<(const SequenceKey& o) const {
    if (values.size() != o.values.size()) return values.size() < o.values.size();
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != o.values[i]) return values[i] < o.values[i];
    return false;
  }
};

struct ClassifyPartial {
  ScanPartial scan;
  // per nu, per sequence: minimal witness mask
  std::map<int, std::map<SequenceKey, std::uint64_t>> found;
};

}  // namespace

CampaignReport campaign_classify(int vmax, const std::string& out_path, int workers,
                                 Dedup dedup) {
  if (vmax < 1 || vmax > 9) throw DomainError("campaign_classify: vmax must be in 1..9");
  if (dedup == Dedup::none && vmax > 7)
    throw DomainError("campaign_classify: labeled scan capped at vmax <= 7");
  workers = resolve_workers(workers);
  Timer timer;
  CampaignReport report;
  report.campaign = "classify";
  report.params = {{"vmax", vmax}, {"canonical", dedup == Dedup::canonical ? 1 : 0}};
  report.workers = workers;

  std::optional<PermSlotMaps> maps;
  if (dedup == Dedup::canonical) maps.emplace(vmax);
  std::uint64_t total = std::uint64_t{1} << slot_count(vmax);
  auto shard_fn = [&](ClassifyPartial& part, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (maps && !is_minimal_mask(mask, *maps)) continue;
      ++part.scan.examined;
      Graph g = mask_to_graph(vmax, mask);
      CountSequence seq = matching_sequence(g);
      int n = seq.length();
      if (n == 0) continue;
      ++part.scan.eligible;
      auto [it, fresh] = part.found[n].try_emplace(SequenceKey{seq.values}, mask);
      if (!fresh) it->second = std::min(it->second, mask);
    }
  };
  auto partials = run_sharded<ClassifyPartial>(total, workers, 8, shard_fn);

  std::map<int, std::map<SequenceKey, std::uint64_t>> found;
  for (const auto& p : partials) {
    report.examined += p.scan.examined;
    report.eligible += p.scan.eligible;
    for (const auto& [n, seqs] : p.found)
      for (const auto& [key, mask] : seqs) {
        auto [it, fresh] = found[n].try_emplace(key, mask);
        if (!fresh) it->second = std::min(it->second, mask);
      }
  }

  for (const auto& [n, seqs] : found) {
    for (const auto& [key, mask] : seqs) {
      CensusEntry entry;
      entry.sequence.kind = SeqKind::matching;
      entry.sequence.values = key.values;
      entry.permutations = enumerate_associated(entry.sequence, 1u << 20);
      entry.witness = graph_to_string(mask_to_graph(vmax, mask));
      // sanity gates every census member must pass
      for (const Permutation& pi : entry.permutations)
        if (!is_unimodal_perm(pi).ok)
          report.counterexamples.push_back(
              {entry.witness, "associated permutation not unimodal: " + permutation_to_csv(pi)});
      if (!theorem32_check(entry.sequence, n).empty())
        report.counterexamples.push_back(
            {entry.witness, "census sequence violates the mode-interval bound"});
      report.census[n].push_back(std::move(entry));
    }
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw DomainError("campaign_classify: cannot write " + out_path);
    for (const auto& [n, entries] : report.census) {
      for (const CensusEntry& e : entries) {
        out << "{\"n\":" << n << ",\"sequence\":[";
        for (std::size_t i = 0; i < e.sequence.values.size(); ++i)
          out << (i ? "," : "") << '"' << e.sequence.values[i].get_str() << '"';
        out << "],\"permutations\":[";
        for (std::size_t i = 0; i < e.permutations.size(); ++i) {
          out << (i ? "," : "") << '[';
          for (int j = 1; j <= e.permutations[i].size(); ++j)
            out << (j > 1 ? "," : "") << e.permutations[i].at(j);
          out << ']';
        }
        out << "],\"witness\":\"";
        for (char c : e.witness) out << (c == '\n' ? std::string("\\n") : std::string(1, c));
        out << "\"}\n";
      }
    }
  }
  report.wall_ms = timer.ms();
  return report;
}

}  // namespace permgraph
