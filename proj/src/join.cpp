#include "permgraph/join.hpp"

#include <algorithm>

namespace permgraph {

void Atom::normalize() {
  for (auto [c, s] : parts) {
    if (c < 1) throw DomainError("atom part with multiplicity < 1");
    if (s < 1) throw DomainError("atom part with clique size < 1");
  }
  if (parts.empty()) throw DomainError("empty atom");
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::pair<long long, long long>> merged;
  for (auto [c, s] : parts) {
    if (!merged.empty() && merged.back().second == s)
      merged.back().first += c;
    else
      merged.emplace_back(c, s);
  }
  parts = std::move(merged);
}

long long Atom::vertex_count() const {
  long long total = 0;
  for (auto [c, s] : parts) total += c * s;
  return total;
}

long long Atom::independence_number() const {
  long long total = 0;
  for (auto [c, s] : parts) total += c;
  return total;
}

void JoinExpr::append(const Atom& atom, const Big& copies) {
  if (copies < 0) throw DomainError("negative copy count");
  if (copies == 0) return;
  terms.push_back({atom, copies});
}

void JoinExpr::append_expr(const JoinExpr& other, const Big& copies) {
  if (copies < 0) throw DomainError("negative copy count");
  if (copies == 0) return;
  for (const JoinTerm& t : other.terms) terms.push_back({t.atom, t.copies * copies});
}

CountSequence atom_polynomial(const Atom& a) {
  // schoolbook convolution of the per-part expansions; degrees stay tiny
  std::vector<Big> poly{Big(1)};
  for (auto [c, s] : a.parts) {
    std::vector<Big> part(static_cast<std::size_t>(c) + 1);
    Big spow = 1;
    for (long long i = 0; i <= c; ++i) {
      part[static_cast<std::size_t>(i)] = binomial(static_cast<long>(c), static_cast<long>(i)) * spow;
      spow *= static_cast<long>(s);
    }
    std::vector<Big> next(poly.size() + part.size() - 1);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < part.size(); ++j) next[i + j] += poly[i] * part[j];
    poly = std::move(next);
  }
  return sequence_from_poly(SeqKind::independent, poly);
}

CountSequence expr_sequence(const JoinExpr& e) {
  CountSequence total;
  total.kind = SeqKind::independent;
  for (const JoinTerm& t : e.terms) {
    CountSequence part = atom_polynomial(t.atom);
    if (part.values.size() > total.values.size()) total.values.resize(part.values.size());
    for (std::size_t i = 0; i < part.values.size(); ++i)
      total.values[i] += t.copies * part.values[i];
  }
  return total;
}

ExprStats expr_stats(const JoinExpr& e) {
  ExprStats st{Big(0), 0};
  for (const JoinTerm& t : e.terms) {
    st.vertex_count += t.copies * static_cast<long>(t.atom.vertex_count());
    st.alpha = std::max(st.alpha, static_cast<int>(t.atom.independence_number()));
  }
  return st;
}

Graph materialize(const JoinExpr& e, int cap) {
  ExprStats st = expr_stats(e);
  if (st.vertex_count > cap)
    throw DomainError("materialize: " + st.vertex_count.get_str() +
                      " vertices exceeds cap " + std::to_string(cap));
  std::vector<Graph> copies;
  for (const JoinTerm& t : e.terms) {
    std::vector<Graph> cliques;
    for (auto [c, s] : t.atom.parts)
      for (long long i = 0; i < c; ++i) cliques.push_back(Graph::complete(static_cast<int>(s)));
    Graph one = disjoint_union(cliques);
    long long reps = static_cast<long long>(t.copies.get_si());
    for (long long r = 0; r < reps; ++r) copies.push_back(one);
  }
  return mutual_join(copies);
}

}  // namespace permgraph
