#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hopf/combinatorics.hpp"
#include "hopf/errors.hpp"
#include "oracles.hpp"

using namespace hopf;

TEST(Compositions, Enumeration) {
  EXPECT_EQ(compositions_of(0), std::vector<Composition>{Composition{}});
  EXPECT_EQ(compositions_of(1), std::vector<Composition>{Composition{1}});
  EXPECT_EQ(compositions_of(3).size(), 4u);
  for (int n = 1; n <= 8; ++n) {
    auto cs = compositions_of(n);
    EXPECT_EQ(cs.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
    EXPECT_EQ(std::set<Composition>(cs.begin(), cs.end()).size(), cs.size());
  }
}

TEST(Compositions, SubsetBijection) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) EXPECT_EQ(set_to_composition(composition_to_set(a), n), a);
  EXPECT_EQ(composition_to_set(Composition{3, 1, 2}), (std::vector<int>{3, 4}));
}

TEST(OrderedSetPartitions, CountsMatchOrderedBell) {
  EXPECT_EQ(ordered_set_partitions(1).size(), 1u);
  auto two = ordered_set_partitions(2);
  ASSERT_EQ(two.size(), 3u);
  std::set<std::string> text;
  for (const auto& p : two) text.insert(format(p));
  EXPECT_EQ(text, (std::set<std::string>{"(12)", "(1,2)", "(2,1)"}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(Scalar(ordered_set_partitions(n).size()), oracle::ordered_bell(n)) << n;
}

TEST(OrderedSetPartitions, TextForm) {
  auto p = parse_osp("(5,3,4,26,8,7,1)");
  EXPECT_EQ(p.num_blocks(), 7u);
  EXPECT_EQ(p.blocks[3], (std::vector<int>{2, 6}));
  EXPECT_EQ(format(p), "(5,3,4,26,8,7,1)");
  EXPECT_THROW(parse_osp("(1,1)"), std::invalid_argument);
  EXPECT_THROW(parse_osp("(1,3)"), std::invalid_argument);
}

TEST(Descents, Examples) {
  EXPECT_EQ(descent_composition(parse_word("568413927")), (Composition{3, 1, 3, 2}));
  EXPECT_EQ(descent_composition(parse_word("123")), Composition{3});
  EXPECT_EQ(descent_composition(parse_word("321")), (Composition{1, 1, 1}));
  EXPECT_EQ(descent_composition(parse_word("2131")), (Composition{1, 2, 1}));
  EXPECT_THROW(descent_composition(parse_word("11")), std::invalid_argument);
}

TEST(Compositions, ReversalAndCoarsenings) {
  EXPECT_EQ(reversal(Composition{3, 1, 2}), (Composition{2, 1, 3}));
  EXPECT_EQ(reversal(Composition{}), Composition{});
  EXPECT_EQ(reversal(Composition{5}), Composition{5});
  auto c = coarsenings(Composition{1, 2});
  EXPECT_EQ(std::set<Composition>(c.begin(), c.end()), (std::set<Composition>{{1, 2}, {3}}));
  c = coarsenings(Composition{1, 1, 1});
  EXPECT_EQ(std::set<Composition>(c.begin(), c.end()), (std::set<Composition>{{1, 1, 1}, {2, 1}, {1, 2}, {3}}));
  EXPECT_EQ(coarsenings(Composition{4}), std::vector<Composition>{Composition{4}});
}

TEST(Compositions, CoarseningIsDualToRefinement) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      for (const auto& b : coarsenings(a)) EXPECT_TRUE(is_coarsening(b, a));
      auto refs = refinements(a);
      for (const auto& b : compositions_of(n)) {
        bool in_refs = std::find(refs.begin(), refs.end(), b) != refs.end();
        EXPECT_EQ(in_refs, is_coarsening(a, b));
      }
      EXPECT_EQ(coarsenings(a).size(), std::size_t{1} << (a.length() - 1));
    }
}

TEST(Shuffle, Examples) {
  auto ab_a = shuffle(parse_word("12"), parse_word("1"));
  EXPECT_EQ(ab_a.coefficient(parse_word("112")), 2);
  EXPECT_EQ(ab_a.coefficient(parse_word("121")), 1);
  EXPECT_EQ(ab_a.size(), 2u);
  EXPECT_EQ(shuffle(parse_word("312"), Word{}), LinComb<Word>::term(parse_word("312")));
}

TEST(Shuffle, MatchesPositionOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = oracle::random_word(rng, 4, 3);
    auto w = oracle::random_word(rng, 4, 3);
    auto s = shuffle(v, w);
    EXPECT_EQ(s, oracle::shuffle_by_positions(v, w));
    Scalar total = 0;
    for (const auto& [x, c] : s) total += c;
    EXPECT_EQ(total, oracle::choose(static_cast<int>(v.length() + w.length()), static_cast<int>(v.length())));
  }
}

TEST(Quasishuffle, WorkedExample) {
  auto q = quasishuffle(2, 1);
  using C = QuasiComponent;
  std::set<QuasiVector> expected = {
      {C{{0, 0}}, C{{0, 1}}, C{{1, 0}}},
      {C{{0, 0}}, C{{0, 1}, {1, 0}}},
      {C{{0, 0}}, C{{1, 0}}, C{{0, 1}}},
      {C{{0, 0}, {1, 0}}, C{{0, 1}}},
      {C{{1, 0}}, C{{0, 0}}, C{{0, 1}}},
  };
  EXPECT_EQ(std::set<QuasiVector>(q.begin(), q.end()), expected);
  EXPECT_EQ(q.size(), 5u);
  EXPECT_EQ(quasishuffle(1, 1).size(), 3u);
  EXPECT_EQ(quasishuffle(2, 0).size(), 1u);
}

TEST(Quasishuffle, MatchesRecursiveOracle) {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& a : compositions_of(n))
        for (const auto& b : compositions_of(m))
          EXPECT_EQ(quasishuffle_compositions(a, b), oracle::quasishuffle_recursive(a.parts(), b.parts()));
}

TEST(Multishuffle, WorkedExample) {
  auto m = multishuffle(parse_word("21"), parse_word("3"), 4);
  std::set<Word> got(m.begin(), m.end());
  std::set<Word> expected;
  for (const char* w : {"213", "231", "321", "2321", "2131", "2313", "3213", "3231"}) expected.insert(parse_word(w));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), m.size());
  auto small = multishuffle(parse_word("1"), parse_word("2"), 3);
  EXPECT_EQ(std::set<Word>(small.begin(), small.end()),
            (std::set<Word>{parse_word("12"), parse_word("21"), parse_word("121"), parse_word("212")}));
  EXPECT_EQ(multishuffle(parse_word("12"), Word{}, 2), std::vector<Word>{parse_word("12")});
  EXPECT_THROW(multishuffle(parse_word("12"), parse_word("2"), 3), std::invalid_argument);
}

TEST(Multishuffle, MatchesBruteForce) {
  for (const char* v : {"1", "21", "12", "132"})
    for (const char* w : {"5", "45", "54"})
      for (std::size_t len = 1; len <= 6; ++len) {
        auto got = multishuffle(parse_word(v), parse_word(w), len);
        EXPECT_EQ(std::set<Word>(got.begin(), got.end()), oracle::multishuffle_brute(parse_word(v), parse_word(w), len))
            << v << " " << w << " " << len;
      }
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(parse_word("9587")), parse_permutation("4132"));
  EXPECT_EQ(standardize(parse_word("123")), parse_permutation("123"));
  EXPECT_EQ(standardize(Word{}), Permutation{});
  EXPECT_EQ(shift(parse_permutation("231"), 4), parse_word("675"));
  EXPECT_EQ(shift(parse_permutation("231"), 0), parse_word("231"));
  EXPECT_EQ(shift(parse_permutation("1"), 2), parse_word("3"));
}

TEST(Rotate180, Examples) {
  EXPECT_EQ(rotate180(parse_permutation("231")), parse_permutation("312"));
  EXPECT_EQ(rotate180(Permutation::identity(5)), Permutation::identity(5));
  for (const auto& p : permutations_of(4)) EXPECT_EQ(rotate180(rotate180(p)), p);
}

TEST(EtaDelta, Examples) {
  EXPECT_EQ(eta(2, 5), parse_word("2345"));
  EXPECT_EQ(delta(4, 1), parse_word("4321"));
  EXPECT_EQ(eta(5, 2), Word{});
  EXPECT_EQ(delta(2, 5), Word{});
}

TEST(Colayered, Examples) {
  EXPECT_EQ(colayered_layers(parse_word("678945123")), (Composition{4, 2, 3}));
  EXPECT_EQ(colayered_layers(parse_word("12345")), Composition{5});
  EXPECT_EQ(colayered_layers(parse_word("132")), std::nullopt);
}

TEST(Permutations, CountAndOrder) {
  for (int n = 0; n <= 6; ++n) {
    auto ps = permutations_of(n);
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    EXPECT_EQ(ps.size(), f);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  }
}
