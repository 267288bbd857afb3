#include "permgraph/construct.hpp"

#include <string>

namespace permgraph {

namespace {

Big power_of(int base, int exp) { return big_pow(static_cast<long>(base), static_cast<unsigned long>(exp)); }

}  // namespace

ASequence a_sequence(int m) {
  if (m < 1) throw DomainError("a_sequence: m must be >= 1");
  ASequence seq;
  seq.m = m;
  std::vector<Big> rec(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    Big rhs = power_of(m, k);
    for (int j = 0; j < k; ++j) rhs -= rec[static_cast<std::size_t>(j)] * binomial(m - j, k - j);
    rec[static_cast<std::size_t>(k)] = rhs;
  }
  // independent route: alternating expansion of the inverse recurrence matrix
  for (int k = 0; k <= m; ++k) {
    Big exp = 0;
    for (int i = 0; i <= k; ++i) {
      Big term = power_of(m, k - i) * binomial(m - (k - i), i);
      exp += (i % 2 == 0) ? term : -term;
    }
    if (exp != rec[static_cast<std::size_t>(k)])
      throw VerifyError("a_sequence: recurrence and explicit formula disagree at k=" +
                        std::to_string(k) + " for m=" + std::to_string(m));
  }
  seq.a_m = rec.back();
  rec.pop_back();
  seq.a = std::move(rec);

  if (seq.at(0) != 1) throw VerifyError("a_sequence: a_0 != 1");
  if (m >= 2 && seq.at(1) != 0) throw VerifyError("a_sequence: a_1 != 0");
  for (int k = 0; k < m; ++k)
    if (seq.at(k) < 0) throw VerifyError("a_sequence: negative coefficient at k=" + std::to_string(k));
  for (int k = 2; k < m; ++k)
    if (seq.at(k) < power_of(m, k - 1))
      throw VerifyError("a_sequence: a_k below m^(k-1) at k=" + std::to_string(k));
  return seq;
}

JoinExpr top_off(const JoinExpr& e, int m, int j, const Big& target) {
  Big current = expr_sequence(e).at(j);
  Big deficit = target - current;
  if (deficit < 0)
    throw VerifyError("top_off: size-" + std::to_string(j) + " count " + current.get_str() +
                      " already exceeds target " + target.get_str());
  Big step = power_of(m, j);
  if (deficit % step != 0)
    throw VerifyError("top_off: deficit " + deficit.get_str() + " not divisible by m^" +
                      std::to_string(j));
  JoinExpr out = e;
  out.append(Atom(j, m), deficit / step);
  return out;
}

namespace {

// The downward induction invariant: before fixing size j, the still-unfixed
// counts (i_j, ..., i_1) are strictly decreasing and each i_t is a multiple
// of m^t.
void check_descent_invariant(const JoinExpr& e, int m, int j) {
  CountSequence seq = expr_sequence(e);
  for (int t = j; t >= 1; --t) {
    if (seq.at(t) % power_of(m, t) != 0)
      throw VerifyError("descent invariant: i_" + std::to_string(t) +
                        " not divisible by m^" + std::to_string(t));
    if (t > 1 && !(seq.at(t) > seq.at(t - 1)))
      throw VerifyError("descent invariant: (i_j..i_1) not strictly decreasing at t=" +
                        std::to_string(t));
  }
}

JoinExpr run_top_offs(JoinExpr e, int m, int from, int downto, const Big& target) {
  for (int j = from; j >= downto; --j) {
    check_descent_invariant(e, m, j);
    e = top_off(e, m, j, target);
  }
  return e;
}

void require_sequence(const JoinExpr& e, const std::vector<Big>& expected, int alpha_want,
                      const Big& vertices_want, const char* who) {
  CountSequence seq = expr_sequence(e);
  ExprStats st = expr_stats(e);
  if (seq.values != expected)
    throw VerifyError(std::string(who) + ": sequence mismatch: got " +
                      sequence_to_csv(seq));
  if (st.alpha != alpha_want)
    throw VerifyError(std::string(who) + ": alpha " + std::to_string(st.alpha) + " != " +
                      std::to_string(alpha_want));
  if (vertices_want >= 0 && st.vertex_count != vertices_want)
    throw VerifyError(std::string(who) + ": vertex count " + st.vertex_count.get_str() +
                      " != " + vertices_want.get_str());
}

}  // namespace

JoinExpr build_gm(int m) {
  if (m < 1) throw DomainError("build_gm: m must be >= 1");
  JoinExpr e;
  e.append(Atom(m, m), 1);
  e = run_top_offs(std::move(e), m, m - 2, 1, power_of(m, m));
  std::vector<Big> expected(static_cast<std::size_t>(m), power_of(m, m));
  require_sequence(e, expected, m, power_of(m, m), "build_gm");
  return e;
}

JoinExpr build_hk(int m, int k) {
  if (m < 3) throw DomainError("build_hk: m must be >= 3");
  if (k < 1 || k > m) throw DomainError("build_hk: k must be in 1..m");
  Big mm = power_of(m, m);
  Big bump = power_of(m, m - 1);
  Big s_k = (k == m) ? Big(2 * mm - bump) : mm;

  JoinExpr e;
  if (k == 1) {
    if (!bump.fits_slong_p())
      throw DomainError("build_hk: K_{m^(m-1)} clique size overflows for m=" +
                        std::to_string(m));
    e = build_gm(m);
    e.append(Atom(1, static_cast<long long>(bump.get_si())), 1);
  } else if (k == m) {
    // seed with an extra-large first clique so the top size count starts at
    // 2m^m, then fix everything below it to s(m)
    e.append(Atom({{1, 2LL * m}, {m - 1, m}}), 1);
    e = run_top_offs(std::move(e), m, m - 1, 1, s_k);
  } else {
    e.append(Atom(m, m), 1);
    e = run_top_offs(std::move(e), m, m - 2, k, mm);
    e.append(Atom(k, m), power_of(m, m - k - 1));
    e = run_top_offs(std::move(e), m, k - 1, 1, mm);
  }

  std::vector<Big> expected(static_cast<std::size_t>(m), s_k);
  expected[static_cast<std::size_t>(k - 1)] = s_k + bump;
  require_sequence(e, expected, m, Big(-1), "build_hk");
  return e;
}

JoinExpr build_hw(int m, const WeakOrder& w) {
  if (m < 1) throw DomainError("build_hw: m must be >= 1");
  if (w.ground_size() != m)
    throw DomainError("build_hw: weak order is not on 1.." + std::to_string(m));

  JoinExpr e;
  if (m == 1) {
    e.append(Atom(1, 1), 1);
  } else if (m == 2) {
    // hand-picked two-element realizations: counts (4,4), (5,6) and (2,1)
    if (w.blocks.size() == 1) {
      e.append(Atom(2, 2), 1);  // 2K_2
    } else if (w.blocks[0][0] == 1) {
      e.append(Atom({{1, 3}, {1, 2}}), 1);  // K_3 + K_2
    } else {
      e.append(Atom(2, 1), 1);  // two isolated vertices
    }
  } else {
    JoinExpr gm = build_gm(m);
    for (std::size_t j = 0; j < w.blocks.size(); ++j) {
      for (int k : w.blocks[j]) {
        if (j == 0)
          e.append_expr(gm);
        else
          e.append_expr(build_hk(m, k), Big(static_cast<long>(j)));
      }
    }
  }

  CountSequence seq = expr_sequence(e);
  ExprStats st = expr_stats(e);
  if (!(induced_weak_order(seq) == w))
    throw VerifyError("build_hw: realized weak order is " +
                      weak_order_to_string(induced_weak_order(seq)) + ", wanted " +
                      weak_order_to_string(w));
  if (st.alpha != m) throw VerifyError("build_hw: alpha != m");
  // for m = 1 the bound 1 < 1^3 cannot hold for a nonempty graph; a single
  // vertex is the minimum realization there
  if (m == 1) {
    if (st.vertex_count != 1) throw VerifyError("build_hw: m=1 must use a single vertex");
  } else if (!(st.vertex_count < power_of(m, m + 2))) {
    throw VerifyError("build_hw: vertex count " + st.vertex_count.get_str() +
                      " not below m^(m+2)");
  }
  return e;
}

GpiResult build_gpi(const Permutation& pi, const Big& t0) {
  if (pi.size() < 1) throw DomainError("build_gpi: empty permutation");
  if (t0 < 1) throw DomainError("build_gpi: t0 must be >= 1");
  int m = pi.size();
  Permutation inv = pi.inverse();
  for (Big t = t0;; t *= 2) {
    JoinExpr e;
    for (int k = 1; k <= m; ++k) {
      Big nk = ceil_kth_root(inv.at(k) * t, static_cast<unsigned long>(k));
      if (!nk.fits_slong_p()) throw DomainError("build_gpi: clique size overflows");
      e.append(Atom(k, nk.get_si()), 1);
    }
    CountSequence seq = expr_sequence(e);
    if (expr_stats(e).alpha != m) throw VerifyError("build_gpi: alpha != m");
    if (check_chain(seq, pi, /*strict=*/true)) return {std::move(e), t};
  }
}

}  // namespace permgraph
