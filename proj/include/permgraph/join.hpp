#ifndef PERMGRAPH_JOIN_HPP
#define PERMGRAPH_JOIN_HPP

#include <utility>
#include <vector>

#include "permgraph/count.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/sequence.hpp"

namespace permgraph {

// A disjoint union of cliques, stored as (multiplicity, clique size) parts:
// parts {(c1,s1),...} is the graph  c1*K_{s1} + c2*K_{s2} + ... . Parts are
// kept sorted by size with equal sizes merged, so equal atoms serialize
// identically. Every graph the symbolic layer needs lives in this family,
// and its independent-set counts have the closed form prod (1+s*x)^c.
struct Atom {
  std::vector<std::pair<long long, long long>> parts;  // (count, size)

  Atom() = default;
  // c copies of K_s.
  Atom(long long c, long long s) : parts{{c, s}} { normalize(); }
  explicit Atom(std::vector<std::pair<long long, long long>> p) : parts(std::move(p)) {
    normalize();
  }

  void normalize();

  long long vertex_count() const;
  long long independence_number() const;  // number of cliques
  bool operator==(const Atom& o) const { return parts == o.parts; }
};

// One joined component: `copies` mutually joined copies of `atom`. The copy
// count is a big integer because the iterative constructions join numbers of
// copies that grow like m^(m-1).
struct JoinTerm {
  Atom atom;
  Big copies = 1;
  bool operator==(const JoinTerm& o) const { return atom == o.atom && copies == o.copies; }
};

// Mutual join of all terms (each term contributing `copies` copies of its
// atom). Never materialized unless asked: every size-k count for k >= 1 is
// the plain sum of the per-copy counts.
struct JoinExpr {
  std::vector<JoinTerm> terms;

  JoinExpr() = default;
  explicit JoinExpr(std::vector<JoinTerm> t) : terms(std::move(t)) {}

  void append(const Atom& atom, const Big& copies);
  // Joining another expression concatenates the term lists.
  void append_expr(const JoinExpr& other, const Big& copies = 1);

  bool operator==(const JoinExpr& o) const { return terms == o.terms; }
};

// Independent-set counts of a single atom: values[k] = [x^k] prod (1+s*x)^c,
// for k = 1..(number of cliques).
CountSequence atom_polynomial(const Atom& a);

// Counts of the whole join: entrywise sum over copies of atoms.
CountSequence expr_sequence(const JoinExpr& e);

struct ExprStats {
  Big vertex_count;
  int alpha = 0;
};

ExprStats expr_stats(const JoinExpr& e);

// Explicit graph with the same independent set sequence; refuses to build
// anything larger than `cap` vertices (use the symbolic path instead).
Graph materialize(const JoinExpr& e, int cap);

}  // namespace permgraph

#endif
