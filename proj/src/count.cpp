#include "permgraph/count.hpp"

#include <bit>
#include <unordered_map>

namespace permgraph {

namespace {

using Poly = std::vector<Big>;  // coefficient list, [0] = 1

void add_shifted(Poly& dst, const Poly& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

void check_vertex_cap(const Graph& g, const CountOptions& opt, const char* who) {
  if (g.n() > opt.vertex_cap)
    throw DomainError(std::string(who) + ": " + std::to_string(g.n()) +
                      " vertices exceeds cap " + std::to_string(opt.vertex_cap));
}

// Shared memoized-recursion scaffolding for the two counters. The memo is
// per-invocation and keyed on the remaining-vertex mask; when full we just
// recompute subtrees.
struct MaskCounter {
  const Graph& g;
  std::size_t memo_cap;
  std::unordered_map<std::uint64_t, Poly> memo;

  explicit MaskCounter(const Graph& graph, const CountOptions& opt)
      : g(graph), memo_cap(opt.memo_cap) {}

  const Poly* lookup(std::uint64_t mask) const {
    auto it = memo.find(mask);
    return it == memo.end() ? nullptr : &it->second;
  }

  void store(std::uint64_t mask, const Poly& p) {
    if (memo.size() < memo_cap) memo.emplace(mask, p);
  }
};

struct IndependentCounter : MaskCounter {
  using MaskCounter::MaskCounter;

  Poly count(std::uint64_t mask) {
    if (mask == 0) return {Big(1)};
    if (const Poly* hit = lookup(mask)) return *hit;
    int v = std::countr_zero(mask);
    std::uint64_t bit = std::uint64_t{1} << v;
    Poly result = count(mask & ~bit);                 // sets avoiding v
    Poly with_v = count(mask & ~(g.adj(v) | bit));    // sets containing v
    add_shifted(result, with_v, 1);
    store(mask, result);
    return result;
  }
};

struct MatchingCounter : MaskCounter {
  using MaskCounter::MaskCounter;

  Poly count(std::uint64_t mask) {
    if (mask == 0) return {Big(1)};
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    if (const Poly* hit = lookup(mask)) return *hit;
    Poly result = count(rest);  // v exposed
    std::uint64_t partners = g.adj(v) & rest;
    while (partners) {
      int u = std::countr_zero(partners);
      partners &= partners - 1;
      Poly used = count(rest & ~(std::uint64_t{1} << u));
      add_shifted(result, used, 1);
    }
    store(mask, result);
    return result;
  }
};

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

CountSequence independent_set_sequence(const Graph& g, const CountOptions& opt) {
  check_vertex_cap(g, opt, "independent_set_sequence");
  IndependentCounter c(g, opt);
  return sequence_from_poly(SeqKind::independent, c.count(full_mask(g.n())));
}

CountSequence matching_sequence(const Graph& g, const CountOptions& opt) {
  check_vertex_cap(g, opt, "matching_sequence");
  MatchingCounter c(g, opt);
  return sequence_from_poly(SeqKind::matching, c.count(full_mask(g.n())));
}

int alpha(const Graph& g, const CountOptions& opt) {
  return independent_set_sequence(g, opt).length();
}

int nu(const Graph& g, const CountOptions& opt) {
  return matching_sequence(g, opt).length();
}

namespace {

void extend_cliques(const Graph& g, std::uint64_t cands, int depth, Poly& counts) {
  while (cands) {
    int v = std::countr_zero(cands);
    cands &= cands - 1;
    if (static_cast<std::size_t>(depth + 1) >= counts.size()) counts.resize(depth + 2);
    counts[depth + 1] += 1;
    // only extend with higher-numbered vertices, so each clique is seen once
    extend_cliques(g, cands & g.adj(v), depth + 1, counts);
  }
}

}  // namespace

CountSequence clique_sequence(const Graph& g, const CountOptions& opt) {
  check_vertex_cap(g, opt, "clique_sequence");
  Poly counts{Big(1)};
  extend_cliques(g, full_mask(g.n()), 0, counts);
  return sequence_from_poly(SeqKind::independent, counts);
}

CountSequence oracle_independent_sequence(const Graph& g, const CountOptions& opt) {
  if (g.n() > 62 || (std::uint64_t{1} << g.n()) > opt.oracle_cap)
    throw DomainError("oracle_independent_sequence: 2^" + std::to_string(g.n()) +
                      " vertex subsets exceeds cap");
  Poly counts(static_cast<std::size_t>(g.n()) + 1);
  std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    bool ok = true;
    for (std::uint64_t rest = sub; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (g.adj(v) & sub) {
        ok = false;
        break;
      }
    }
    if (ok) counts[static_cast<std::size_t>(std::popcount(sub))] += 1;
  }
  return sequence_from_poly(SeqKind::independent, counts);
}

CountSequence oracle_matching_sequence(const Graph& g, const CountOptions& opt) {
  std::size_t m = g.edge_count();
  if (m > 62 || (std::uint64_t{1} << m) > opt.oracle_cap)
    throw DomainError("oracle_matching_sequence: 2^" + std::to_string(m) +
                      " edge subsets exceeds cap");
  std::vector<std::uint64_t> emask(m);
  for (std::size_t i = 0; i < m; ++i)
    emask[i] = (std::uint64_t{1} << g.edges()[i].first) |
               (std::uint64_t{1} << g.edges()[i].second);
  Poly counts(m + 1);
  std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::uint64_t rest = sub; rest; rest &= rest - 1) {
      std::uint64_t em = emask[static_cast<std::size_t>(std::countr_zero(rest))];
      if (used & em) {
        ok = false;
        break;
      }
      used |= em;
    }
    if (ok) counts[static_cast<std::size_t>(std::popcount(sub))] += 1;
  }
  return sequence_from_poly(SeqKind::matching, counts);
}

std::pair<CountSequence, CountSequence> oracle_sequences(const Graph& g,
                                                         const CountOptions& opt) {
  return {oracle_independent_sequence(g, opt), oracle_matching_sequence(g, opt)};
}

}  // namespace permgraph
