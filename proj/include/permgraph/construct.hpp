#ifndef PERMGRAPH_CONSTRUCT_HPP
#define PERMGRAPH_CONSTRUCT_HPP

#include <utility>
#include <vector>

#include "permgraph/join.hpp"
#include "permgraph/order.hpp"

namespace permgraph {

// Coefficients (a_0,...,a_{m-1}) of the top-off schedule for order m,
// defined by  m^k = sum_j a_j * C(m-j, k-j)  for k = 0..m-1. a_m is carried
// as an extension of the same recurrence. Solved by forward substitution and
// re-derived from the explicit alternating formula; the two must agree.
struct ASequence {
  int m = 0;
  std::vector<Big> a;  // a_0..a_{m-1}
  Big a_m;             // recurrence extended one step

  const Big& at(int k) const { return a[static_cast<std::size_t>(k)]; }
};

ASequence a_sequence(int m);

// Appends enough jK_m atoms to raise the size-j count of `e` to `target`.
// Each appended atom adds exactly m^j sets of size j and nothing of any
// larger size, so the deficit must be nonnegative and divisible by m^j.
JoinExpr top_off(const JoinExpr& e, int m, int j, const Big& target);

// Graph on m^m vertices with independence number m and every size count
// equal to m^m: mK_m topped off at sizes m-2 down to 1.
JoinExpr build_gm(int m);

// Graph whose counts are s(k) at every size except k and s(k) + m^(m-1) at
// size k, with s(k) = m^m for k < m and s(m) = 2m^m - m^(m-1). Requires
// m >= 3.
JoinExpr build_hk(int m, int k);

// Graph with independence number m whose count sequence induces the weak
// order w, on fewer than m^(m+2) vertices: joins one G_m per element of the
// first block and j-1 copies of H_k for each k in block j.
JoinExpr build_hw(int m, const WeakOrder& w);

struct GpiResult {
  JoinExpr expr;
  Big t_used;
};

// Join of kK_{n_k} atoms with n_k = ceil((pi^{-1}(k) * T)^(1/k)), with T
// doubled from t0 until the strict chain
// i_{pi(1)} < i_{pi(2)} < ... < i_{pi(m)} holds exactly.
GpiResult build_gpi(const Permutation& pi, const Big& t0 = 2);

}  // namespace permgraph

#endif
