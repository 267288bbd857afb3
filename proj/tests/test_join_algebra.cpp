#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permgraph/io.hpp"
#include "permgraph/join.hpp"
#include "test_util.hpp"

using namespace permgraph;

namespace {

std::vector<Big> seq_of(std::initializer_list<long> xs) {
  std::vector<Big> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

JoinExpr g3_expr() {
  JoinExpr e;
  e.append(Atom(3, 3), 1);
  e.append(Atom(1, 3), 6);
  return e;
}

JoinExpr g4_expr() {
  JoinExpr e;  // top-off schedule for m = 4 is (1, 0, 10, 40)
  e.append(Atom(4, 4), 1);
  e.append(Atom(2, 4), 10);
  e.append(Atom(1, 4), 40);
  return e;
}

}  // namespace

TEST_CASE("atom normalization and invariants") {
  Atom a({{2, 3}, {1, 3}, {1, 5}});
  CHECK(a.parts == std::vector<std::pair<long long, long long>>{{3, 3}, {1, 5}});
  CHECK(a.vertex_count() == 14);
  CHECK(a.independence_number() == 4);
  CHECK_THROWS_AS(Atom({{0, 3}}), DomainError);
  CHECK_THROWS_AS(Atom({{1, 0}}), DomainError);
  CHECK_THROWS_AS(Atom(std::vector<std::pair<long long, long long>>{}), DomainError);
}

TEST_CASE("atom polynomials") {
  CHECK(atom_polynomial(Atom(3, 3)).values == seq_of({9, 27, 27}));
  CHECK(atom_polynomial(Atom(1, 5)).values == seq_of({5}));

  Atom seed({{1, 6}, {2, 3}});  // K_6 + 2K_3
  CHECK(atom_polynomial(seed).values == seq_of({12, 45, 54}));
  // the middle coefficient matches 2m^m - m^(m-1) at m = 3
  CHECK(atom_polynomial(seed).values[1] == 2 * big_pow(3, 3) - big_pow(3, 2));
}

TEST_CASE("expr_sequence sums atom counts") {
  JoinExpr just_2k2;
  just_2k2.append(Atom(2, 2), 1);
  CHECK(expr_sequence(just_2k2).values == seq_of({4, 4}));
  CHECK(independent_set_sequence(materialize(just_2k2, 10)).values == seq_of({4, 4}));

  JoinExpr two;
  two.append(Atom(2, 2), 1);
  two.append(Atom(1, 3), 1);
  CHECK(expr_sequence(two).values == seq_of({7, 4}));

  CHECK(expr_sequence(g3_expr()).values == seq_of({27, 27, 27}));
  CHECK(independent_set_sequence(materialize(g3_expr(), 30)).values == seq_of({27, 27, 27}));
}

TEST_CASE("expr_stats") {
  ExprStats g3 = expr_stats(g3_expr());
  CHECK(g3.vertex_count == 27);
  CHECK(g3.alpha == 3);

  JoinExpr seed;
  seed.append(Atom({{1, 6}, {2, 3}}), 1);
  CHECK(expr_stats(seed).vertex_count == 12);
  CHECK(expr_stats(seed).alpha == 3);

  JoinExpr k1;
  k1.append(Atom(1, 1), 1);
  CHECK(expr_stats(k1).vertex_count == 1);
  CHECK(expr_stats(k1).alpha == 1);
}

TEST_CASE("materialize respects the vertex cap") {
  JoinExpr just_2k2;
  just_2k2.append(Atom(2, 2), 1);
  Graph g = materialize(just_2k2, 30);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 2);

  CHECK(expr_stats(g4_expr()).vertex_count == 256);
  CHECK_THROWS_AS(materialize(g4_expr(), 30), DomainError);
}

TEST_CASE("randomized expressions match the oracle on their materialization") {
  std::mt19937 rng(21);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 150; ++trial) {
    JoinExpr e;
    int atoms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < atoms; ++i) {
      std::vector<std::pair<long long, long long>> parts;
      int nparts = 1 + static_cast<int>(rng() % 2);
      for (int p = 0; p < nparts; ++p)
        parts.emplace_back(1 + static_cast<long long>(rng() % 3),
                           1 + static_cast<long long>(rng() % 4));
      e.append(Atom(parts), 1 + static_cast<long>(rng() % 2));
    }
    if (expr_stats(e).vertex_count > 16) continue;
    Graph g = materialize(e, 16);
    CHECK(expr_sequence(e).values == oracle_independent_sequence(g).values);
    CHECK(expr_sequence(e).at(1) == expr_stats(e).vertex_count);
    CHECK(expr_sequence(e).length() == expr_stats(e).alpha);
    ++done;
  }
  CHECK(done == 150);

  // two denser cases near the cap
  JoinExpr big;
  big.append(Atom({{2, 4}, {1, 3}}), 1);
  big.append(Atom(3, 3), 1);
  CHECK(expr_stats(big).vertex_count == 20);
  CHECK(expr_sequence(big).values == oracle_independent_sequence(materialize(big, 24)).values);

  JoinExpr wide;
  wide.append(Atom(5, 2), 2);
  wide.append(Atom(1, 2), 2);
  CHECK(expr_stats(wide).vertex_count == 24);
  CHECK(expr_sequence(wide).values == oracle_independent_sequence(materialize(wide, 24)).values);
}

TEST_CASE("additivity of join expressions") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto random_expr = [&] {
      JoinExpr e;
      for (int i = 0, atoms = 1 + static_cast<int>(rng() % 3); i < atoms; ++i)
        e.append(Atom(1 + static_cast<long long>(rng() % 4), 1 + static_cast<long long>(rng() % 5)),
                 1 + static_cast<long>(rng() % 3));
      return e;
    };
    JoinExpr a = random_expr(), b = random_expr();
    JoinExpr both = a;
    both.append_expr(b);
    CountSequence sa = expr_sequence(a), sb = expr_sequence(b), sboth = expr_sequence(both);
    for (int k = 1; k <= sboth.length(); ++k) CHECK(sboth.at(k) == sa.at(k) + sb.at(k));
  }
}

TEST_CASE("join expression JSON round trip") {
  JoinExpr e = g3_expr();
  Json j = expr_json(e);
  CHECK(j["atoms"].size() == 2);
  CHECK(j["atoms"][1]["copies"] == "6");
  CHECK(expr_from_json(j) == e);

  // flat form without copy counts is accepted
  Json flat = Json::parse(R"({"atoms":[{"parts":[[2,2]]},{"parts":[[2,2]]}]})");
  JoinExpr parsed = expr_from_json(flat);
  CHECK(expr_sequence(parsed).values == seq_of({8, 8}));

  CHECK_THROWS_AS(expr_from_json(Json::parse(R"({"atoms":[{"parts":[[0,2]]}]})")), DomainError);
  CHECK_THROWS_AS(expr_from_json(Json::parse(R"({"nope":1})")), DomainError);
}
