#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "permgraph/order.hpp"

using namespace permgraph;

namespace {

CountSequence seq(std::initializer_list<long> xs) {
  CountSequence s;
  for (long x : xs) s.values.emplace_back(x);
  return s;
}

Permutation perm(std::initializer_list<int> xs) { return Permutation(std::vector<int>(xs)); }

}  // namespace

TEST_CASE("permutation and weak order parsing") {
  CHECK(parse_permutation("3,1,2") == perm({3, 1, 2}));
  CHECK(permutation_to_csv(perm({3, 1, 2})) == "3,1,2");
  CHECK_THROWS_AS(parse_permutation("1,1"), DomainError);
  CHECK_THROWS_AS(parse_permutation("0,1"), DomainError);
  CHECK_THROWS_AS(parse_permutation("x"), DomainError);

  WeakOrder w = parse_weak_order("2|1,3");
  CHECK(w.blocks == std::vector<std::vector<int>>{{2}, {1, 3}});
  CHECK(weak_order_to_string(w) == "2|1,3");
  CHECK_THROWS_AS(parse_weak_order("1|1,2"), DomainError);
  CHECK_THROWS_AS(parse_weak_order("1|3"), DomainError);
  CHECK_THROWS_AS(parse_weak_order(""), DomainError);
}

TEST_CASE("induced weak orders") {
  CHECK(induced_weak_order(seq({4, 6, 4, 1})).blocks ==
        std::vector<std::vector<int>>{{4}, {1, 3}, {2}});
  CHECK(induced_weak_order(seq({5, 10, 10, 5, 1})).blocks ==
        std::vector<std::vector<int>>{{5}, {1, 4}, {2, 3}});
  CHECK(induced_weak_order(seq({7, 7, 7})).blocks == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("associated permutations of (5,10,10,5,1)") {
  CountSequence s = seq({5, 10, 10, 5, 1});
  std::vector<Permutation> got = enumerate_associated(s, 100);
  std::set<Permutation> expect{perm({5, 1, 4, 2, 3}), perm({5, 4, 1, 2, 3}),
                               perm({5, 1, 4, 3, 2}), perm({5, 4, 1, 3, 2})};
  CHECK(std::set<Permutation>(got.begin(), got.end()) == expect);
  CHECK(associated_count(s) == 4);

  CHECK(enumerate_associated(seq({1, 2, 3}), 10) ==
        std::vector<Permutation>{perm({1, 2, 3})});

  // binomial-coefficient rows (C(n,1..n)) for n = 5: same count 2^floor((n-1)/2)
  CountSequence binro = seq({5, 10, 10, 5, 1});
  CHECK(associated_count(binro) == 4);  // 2^2
  for (int n = 1; n <= 8; ++n) {
    CountSequence row;
    for (int k = 1; k <= n; ++k) row.values.push_back(binomial(n, k));
    CHECK(associated_count(row) == big_pow(2, static_cast<unsigned long>((n - 1) / 2)));
  }
}

TEST_CASE("associated permutation stream is lazy and restartable") {
  CountSequence s = seq({2, 2, 2, 2, 2, 2, 2});  // 7! associated permutations
  AssociatedPermutationStream stream(s);
  CHECK(stream.next() == perm({1, 2, 3, 4, 5, 6, 7}));
  CHECK(stream.next() == perm({1, 2, 3, 4, 5, 7, 6}));
  stream.reset();
  CHECK(stream.next() == perm({1, 2, 3, 4, 5, 6, 7}));
  CHECK(associated_count(s) == 5040);
  CHECK(enumerate_associated(s, 10).size() == 10);  // cap honored
  CHECK_THROWS_AS(enumerate_associated(s, 10, /*strict_limit=*/true), DomainError);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    CountSequence r;
    int m = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < m; ++i) r.values.emplace_back(1 + static_cast<long>(rng() % 3));
    std::vector<Permutation> all = enumerate_associated(r, 1u << 14);
    CHECK(Big(static_cast<long>(all.size())) == associated_count(r));
    for (const Permutation& p : all) CHECK(check_chain(r, p, false));
  }
}

TEST_CASE("chain checks") {
  CountSequence s = seq({5, 10, 10, 5, 1});
  CHECK(check_chain(s, perm({5, 4, 1, 3, 2}), false));
  CHECK(!check_chain(s, perm({5, 4, 1, 3, 2}), true));
  // (i_1, i_2) = (220, 100): the chain for 21 reads i_2 < i_1
  CHECK(check_chain(seq({220, 100}), perm({2, 1}), true));
  CHECK(!check_chain(seq({100, 220}), perm({2, 1}), true));
  CHECK_THROWS_AS(check_chain(s, perm({1, 2}), false), DomainError);
}

TEST_CASE("unimodal permutation predicate") {
  auto r = is_unimodal_perm(perm({4, 3, 2, 1}));
  CHECK(r.ok);
  CHECK(r.mode == 1);
  auto id = is_unimodal_perm(perm({1, 2, 3, 4, 5}));
  CHECK(id.ok);
  CHECK(id.mode == 5);
  auto bad = is_unimodal_perm(perm({2, 1, 3, 4}));
  CHECK(!bad.ok);
  CHECK(bad.mode == 4);
}

TEST_CASE("unimodal enumeration") {
  UnimodalPermutationStream one(1);
  CHECK(one.next() == perm({1}));
  CHECK(!one.next().has_value());

  int count4 = 0;
  UnimodalPermutationStream four(4);
  while (auto p = four.next()) {
    CHECK(is_unimodal_perm(*p).ok);
    ++count4;
  }
  CHECK(count4 == 8);

  std::set<Permutation> seen;
  UnimodalPermutationStream ten(10);
  while (auto p = ten.next()) seen.insert(*p);
  CHECK(seen.size() == 512);
}

TEST_CASE("U-D decoding and encoding") {
  Permutation big = ud_decode("UUDDDUUDUDDUU");
  CHECK(big == perm({1, 2, 14, 13, 12, 3, 4, 11, 5, 10, 9, 6, 7, 8}));
  CHECK(ud_encode(big) == "UUDDDUUDUDDUU");

  CHECK(ud_decode("UUU") == perm({1, 2, 3, 4}));
  CHECK(ud_decode("DDD") == perm({4, 3, 2, 1}));
  CHECK(ud_encode(perm({1, 2, 3, 4, 5})) == "UUUU");
  CHECK(ud_encode(perm({3, 2, 1})) == "DD");
  CHECK(ud_decode("") == perm({1}));

  CHECK_THROWS_AS(ud_decode("UXD"), DomainError);
  CHECK_THROWS_AS(ud_encode(perm({2, 1, 3, 4})), DomainError);

  // full round trip over every unimodal permutation up to n = 10
  for (int n = 1; n <= 10; ++n) {
    UnimodalPermutationStream stream(n);
    while (auto p = stream.next()) {
      std::string code = ud_encode(*p);
      Permutation back = ud_decode(code);
      CHECK(back == *p);
      int ups = static_cast<int>(std::count(code.begin(), code.end(), 'U'));
      CHECK(is_unimodal_perm(back).mode == ups + 1);
    }
  }
}

TEST_CASE("admissible counts") {
  std::vector<long> expect{1, 2, 4, 7, 14, 25, 50};
  for (std::size_t len = 0; len < expect.size(); ++len)
    CHECK(admissible_count(static_cast<long long>(len)) == expect[len]);
  for (int len = 0; len <= 16; ++len)
    CHECK(admissible_count(len) == admissible_count_brute(len));
  // the closed form tracks the DP after the one-index shift
  for (long long len = 0; len <= 40; ++len)
    CHECK(admissible_count_closed(len) == admissible_count(len));
}

TEST_CASE("dyck left factors") {
  CHECK(dyck_left_factor_count(1) == 1);
  CHECK(dyck_left_factor_count(5) == 10);
  CHECK(dyck_left_factor_count(4) == 6);
  for (long long len = 0; len <= 30; ++len)
    CHECK(dyck_left_factor_count(len) == binomial(static_cast<long>(len), static_cast<long>(len / 2)));
}

TEST_CASE("upper bound table") {
  MnBounds b4 = mn_upper_bounds(4);
  CHECK(b4.mode_sum == 7);
  CHECK(b4.admissible == 7);
  CHECK(b4.dyck == 10);

  MnBounds b6 = mn_upper_bounds(6);
  CHECK(b6.mode_sum == 26);
  CHECK(b6.admissible == 25);
  CHECK(b6.dyck == 35);

  MnBounds b1 = mn_upper_bounds(1);
  CHECK(b1.mode_sum == 1);
  CHECK(b1.admissible == 1);
  CHECK(b1.dyck == 2);  // binomial(2,1); the walk bound exceeds M_1 itself

  for (int n = 1; n <= 20; ++n) {
    MnBounds b = mn_upper_bounds(n);
    Big all_unimodal = big_pow(2, static_cast<unsigned long>(n - 1));
    CHECK(b.admissible <= b.mode_sum);
    CHECK(b.mode_sum <= all_unimodal);
    // admissible * sqrt(n) / 2^n stays bounded over the computed range
    double ratio = b.admissible.get_d() * std::sqrt(static_cast<double>(n)) /
                   std::pow(2.0, static_cast<double>(n));
    CHECK(ratio < 2.0);
  }
}

TEST_CASE("mode interval violations") {
  CHECK(theorem32_check(seq({4, 6, 4, 1}), 4).empty());
  CHECK(theorem32_check(seq({6, 5, 5, 1}), 4) ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(theorem32_check(seq({5, 10, 10, 5, 1}), 5).empty());
  CHECK_THROWS_AS(theorem32_check(seq({1, 2}), 3), DomainError);
}

TEST_CASE("strong unimodality") {
  CHECK(schwenk_check(seq({4, 6, 4, 1})));
  CHECK(!schwenk_check(seq({2, 1, 2})));
  CHECK(schwenk_check(seq({5, 5})));
  CHECK(schwenk_check(seq({1})));
  CHECK(schwenk_check(CountSequence{}));
  CHECK(!schwenk_check(seq({3, 3, 3})));
  CHECK(!schwenk_check(seq({1, 3, 3, 2, 2})));
}

TEST_CASE("strongly unimodal sequences only associate to unimodal permutations") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    // build a random strictly-up/strictly-down sequence, optional tie at the top
    int up = static_cast<int>(rng() % 5), down = static_cast<int>(rng() % 5);
    bool tie = rng() % 2 == 0;
    std::vector<Big> vals;
    Big v = 1 + static_cast<long>(rng() % 3);
    for (int i = 0; i < up; ++i, v += 1 + static_cast<long>(rng() % 3)) vals.push_back(v);
    vals.push_back(v);
    if (tie) vals.push_back(v);
    for (int i = 0; i < down && v > 1; ++i) {
      Big drop = 1 + static_cast<long>(rng() % 2);
      v = v - drop > 0 ? v - drop : Big(0);
      if (v == 0) break;
      vals.push_back(v);
    }
    CountSequence s;
    s.kind = SeqKind::matching;
    s.values = vals;
    if (!schwenk_check(s)) continue;  // the tie may have landed off the mode
    for (const Permutation& p : enumerate_associated(s, 1u << 12))
      CHECK(is_unimodal_perm(p).ok);
  }
}

TEST_CASE("elementary symmetric coefficients") {
  std::vector<Rat> fifth(4, Rat(1, 5));
  std::vector<Rat> c = esp_coefficients(fifth);
  CHECK(c == std::vector<Rat>{Rat(4, 5), Rat(6, 25), Rat(4, 125), Rat(1, 625)});
  // the unique associated permutation of that coefficient vector is 4321
  CHECK(c[3] < c[2]);
  CHECK(c[2] < c[1]);
  CHECK(c[1] < c[0]);

  CHECK(esp_coefficients({Rat(0), Rat(0)}) == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(esp_coefficients({Rat(1), Rat(1)}) == std::vector<Rat>{Rat(2), Rat(1)});
  CHECK_THROWS_AS(esp_coefficients({Rat(-1, 2)}), DomainError);
}

TEST_CASE("coefficients of positive-rooted products are strongly unimodal") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Rat> roots;
    for (int i = 0; i < n; ++i)
      roots.emplace_back(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40));
    CHECK(strongly_unimodal(esp_coefficients(roots)));
  }
}

TEST_CASE("weak order enumeration counts") {
  CHECK(enumerate_weak_orders(1).size() == 1);
  CHECK(enumerate_weak_orders(2).size() == 3);
  CHECK(enumerate_weak_orders(3).size() == 13);
  CHECK(enumerate_weak_orders(4).size() == 75);
  CHECK(enumerate_weak_orders(5).size() == 541);
}
