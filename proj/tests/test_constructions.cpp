#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "permgraph/construct.hpp"
#include "permgraph/count.hpp"
#include "permgraph/graph.hpp"

using namespace permgraph;

namespace {

std::vector<Big> seq_of(std::initializer_list<long> xs) {
  std::vector<Big> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Big> constant(int len, const Big& value) {
  return std::vector<Big>(static_cast<std::size_t>(len), value);
}

}  // namespace

TEST_CASE("a_sequence small cases") {
  CHECK(a_sequence(1).a == seq_of({1}));
  CHECK(a_sequence(2).a == seq_of({1, 0}));
  CHECK(a_sequence(3).a == seq_of({1, 0, 6}));
  CHECK(a_sequence(4).a == seq_of({1, 0, 10, 40}));
  CHECK_THROWS_AS(a_sequence(0), DomainError);
}

TEST_CASE("a_sequence identities up to m = 30") {
  for (int m = 1; m <= 30; ++m) {
    ASequence s = a_sequence(m);  // ctor already cross-checks the two formulas
    REQUIRE(static_cast<int>(s.a.size()) == m);
    CHECK(s.at(0) == 1);
    if (m >= 2) CHECK(s.at(1) == 0);
    // recurrence: m^k = sum_j a_j C(m-j, k-j)
    for (int k = 0; k < m; ++k) {
      Big sum = 0;
      for (int j = 0; j <= k; ++j) sum += s.at(j) * binomial(m - j, k - j);
      CHECK(sum == big_pow(m, static_cast<unsigned long>(k)));
    }
    for (int k = 2; k < m; ++k)
      CHECK(s.at(k) >= big_pow(m, static_cast<unsigned long>(k - 1)));
  }
}

TEST_CASE("inverse-matrix identity") {
  // sum_{t=l}^{k} (-1)^(t-l) C(m-t, k-t) C(m-l, t-l) = [k == l]
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k)
      for (int l = 0; l <= k; ++l) {
        Big sum = 0;
        for (int t = l; t <= k; ++t) {
          Big term = binomial(m - t, k - t) * binomial(m - l, t - l);
          sum += (t - l) % 2 == 0 ? term : -term;
        }
        CHECK(sum == (k == l ? 1 : 0));
      }
}

TEST_CASE("binomial-times-power ladders decrease") {
  // n^k, C(k,1)n^(k-1), ..., C(k,k-1)n is non-increasing, strictly except
  // that the first two terms tie when k = n
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<Big> terms;
      for (int j = 0; j < k; ++j)
        terms.push_back(binomial(k, j) * big_pow(n, static_cast<unsigned long>(k - j)));
      for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
        CHECK(terms[j] >= terms[j + 1]);
        if (j == 0 && k == n)
          CHECK(terms[0] == terms[1]);
        else
          CHECK(terms[j] > terms[j + 1]);
      }
    }
}

TEST_CASE("top_off appends the right number of atoms") {
  JoinExpr e;
  e.append(Atom(3, 3), 1);
  JoinExpr topped = top_off(e, 3, 1, 27);
  REQUIRE(topped.terms.size() == 2);
  CHECK(topped.terms[1].atom == Atom(1, 3));
  CHECK(topped.terms[1].copies == 6);
  CHECK(expr_sequence(topped).at(1) == 27);
  CHECK(expr_sequence(topped).at(2) == 27);  // untouched above j

  JoinExpr e2;
  e2.append(Atom(3, 3), 1);
  e2.append(Atom(2, 3), 1);
  JoinExpr topped2 = top_off(e2, 3, 1, 27);
  CHECK(topped2.terms.back().copies == 4);

  // zero deficit leaves the expression unchanged
  CHECK(top_off(topped, 3, 1, 27) == topped);

  CHECK_THROWS_AS(top_off(topped, 3, 1, 26), VerifyError);  // overshoot
  CHECK_THROWS_AS(top_off(e, 3, 1, 11), VerifyError);       // not divisible by 3
}

TEST_CASE("build_gm small cases") {
  JoinExpr g1 = build_gm(1);
  REQUIRE(g1.terms.size() == 1);
  CHECK(g1.terms[0].atom == Atom(1, 1));
  CHECK(expr_sequence(g1).values == seq_of({1}));

  JoinExpr g2 = build_gm(2);
  REQUIRE(g2.terms.size() == 1);
  CHECK(g2.terms[0].atom == Atom(2, 2));
  CHECK(expr_sequence(g2).values == seq_of({4, 4}));
  CHECK(expr_stats(g2).vertex_count == 4);

  JoinExpr g3 = build_gm(3);
  REQUIRE(g3.terms.size() == 2);
  CHECK(g3.terms[0].atom == Atom(3, 3));
  CHECK(g3.terms[1].atom == Atom(1, 3));
  CHECK(g3.terms[1].copies == 6);
  CHECK(expr_sequence(g3).values == seq_of({27, 27, 27}));
}

TEST_CASE("build_gm flat profile up to m = 8") {
  for (int m = 1; m <= 8; ++m) {
    JoinExpr g = build_gm(m);
    Big mm = big_pow(m, static_cast<unsigned long>(m));
    CHECK(expr_sequence(g).values == constant(m, mm));
    ExprStats st = expr_stats(g);
    CHECK(st.vertex_count == mm);
    CHECK(st.alpha == m);
  }
}

TEST_CASE("materialized build_gm matches both explicit counters") {
  for (int m = 1; m <= 3; ++m) {
    JoinExpr g = build_gm(m);
    Graph mat = materialize(g, 27);
    CountSequence symbolic = expr_sequence(g);
    CHECK(independent_set_sequence(mat).values == symbolic.values);
    CHECK(clique_sequence(complement(mat)).values == symbolic.values);
  }
}

TEST_CASE("build_hk for m = 3") {
  JoinExpr h1 = build_hk(3, 1);
  CHECK(expr_sequence(h1).values == seq_of({36, 27, 27}));
  CHECK(expr_stats(h1).vertex_count == 36);

  JoinExpr h2 = build_hk(3, 2);
  CHECK(expr_sequence(h2).values == seq_of({27, 36, 27}));
  CHECK(expr_stats(h2).vertex_count == 27);
  REQUIRE(h2.terms.size() == 3);
  CHECK(h2.terms[0].atom == Atom(3, 3));
  CHECK(h2.terms[1].atom == Atom(2, 3));
  CHECK(h2.terms[1].copies == 1);
  CHECK(h2.terms[2].atom == Atom(1, 3));
  CHECK(h2.terms[2].copies == 4);

  JoinExpr h3 = build_hk(3, 3);
  CHECK(expr_sequence(h3).values == seq_of({45, 45, 54}));
  CHECK(expr_stats(h3).vertex_count == 45);
  REQUIRE(h3.terms.size() == 2);
  CHECK(h3.terms[0].atom == Atom({{1, 6}, {2, 3}}));
  CHECK(h3.terms[1].atom == Atom(1, 3));
  CHECK(h3.terms[1].copies == 11);

  CHECK_THROWS_AS(build_hk(2, 1), DomainError);
  CHECK_THROWS_AS(build_hk(3, 0), DomainError);
  CHECK_THROWS_AS(build_hk(3, 4), DomainError);
}

TEST_CASE("materialized build_hk matches the explicit counter at m = 3") {
  for (int k = 1; k <= 3; ++k) {
    JoinExpr h = build_hk(3, k);
    Graph mat = materialize(h, 64);
    CHECK(independent_set_sequence(mat).values == expr_sequence(h).values);
  }
}

TEST_CASE("build_hk profile for all m <= 6") {
  for (int m = 3; m <= 6; ++m) {
    Big mm = big_pow(m, static_cast<unsigned long>(m));
    Big bump = big_pow(m, static_cast<unsigned long>(m - 1));
    for (int k = 1; k <= m; ++k) {
      JoinExpr h = build_hk(m, k);
      Big sk = (k == m) ? Big(2 * mm - bump) : mm;
      CountSequence seq = expr_sequence(h);
      REQUIRE(seq.length() == m);
      for (int i = 1; i <= m; ++i) CHECK(seq.at(i) == (i == k ? sk + bump : sk));
      CHECK(expr_stats(h).alpha == m);
    }
  }
}

TEST_CASE("build_hw realizes the requested weak order") {
  CHECK(expr_sequence(build_hw(1, parse_weak_order("1"))).values == seq_of({1}));

  CHECK(expr_sequence(build_hw(2, parse_weak_order("1,2"))).values == seq_of({4, 4}));
  CHECK(expr_sequence(build_hw(2, parse_weak_order("1|2"))).values == seq_of({5, 6}));
  CHECK(expr_sequence(build_hw(2, parse_weak_order("2|1"))).values == seq_of({2, 1}));

  CHECK(expr_sequence(build_hw(3, parse_weak_order("1,2,3"))).values == seq_of({81, 81, 81}));

  JoinExpr mixed = build_hw(3, parse_weak_order("2|1,3"));
  CHECK(expr_sequence(mixed).values == seq_of({108, 99, 108}));
  CHECK(expr_stats(mixed).vertex_count == 108);
  CHECK(expr_stats(mixed).vertex_count < big_pow(3, 5));

  CountSequence chain = expr_sequence(build_hw(3, parse_weak_order("3|2|1")));
  CHECK(chain.at(3) < chain.at(2));
  CHECK(chain.at(2) < chain.at(1));

  CHECK_THROWS_AS(build_hw(3, parse_weak_order("1|2")), DomainError);  // wrong ground set
}

TEST_CASE("build_hw over every weak order for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    Big cap = big_pow(m, static_cast<unsigned long>(m + 2));
    std::vector<WeakOrder> orders = enumerate_weak_orders(m);
    for (const WeakOrder& w : orders) {
      JoinExpr e = build_hw(m, w);  // post-asserts internally; re-check here
      CountSequence seq = expr_sequence(e);
      CHECK(induced_weak_order(seq) == w);
      CHECK(expr_stats(e).alpha == m);
      if (m >= 2) CHECK(expr_stats(e).vertex_count < cap);
    }
  }
}

TEST_CASE("build_gpi examples") {
  GpiResult one = build_gpi(parse_permutation("1"), 7);
  REQUIRE(one.expr.terms.size() == 1);
  CHECK(one.expr.terms[0].atom == Atom(1, 7));
  CHECK(one.t_used == 7);

  GpiResult two = build_gpi(parse_permutation("2,1"), 100);
  CHECK(two.t_used == 100);
  REQUIRE(two.expr.terms.size() == 2);
  CHECK(two.expr.terms[0].atom == Atom(1, 200));
  CHECK(two.expr.terms[1].atom == Atom(2, 10));
  CountSequence seq = expr_sequence(two.expr);
  CHECK(seq.values == seq_of({220, 100}));

  CHECK_THROWS_AS(build_gpi(parse_permutation("1"), 0), DomainError);
}

TEST_CASE("build_gpi realizes every permutation for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> vals(static_cast<std::size_t>(m));
    std::iota(vals.begin(), vals.end(), 1);
    do {
      Permutation pi(vals);
      GpiResult r = build_gpi(pi);
      CHECK(check_chain(expr_sequence(r.expr), pi, /*strict=*/true));
      CHECK(expr_stats(r.expr).alpha == m);
      CHECK(r.t_used >= 2);
    } while (std::next_permutation(vals.begin(), vals.end()));
  }
}
