#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hopf/combinatorics.hpp"
#include "hopf/ribbon.hpp"
#include "hopf/tableau.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

std::set<std::pair<Composition, Composition>> as_set(const std::vector<std::pair<Composition, Composition>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Ribbon, CutEdgeSplits) {
  auto s = cut_edge_splits(Composition{3, 1});
  std::vector<std::pair<Composition, Composition>> expected = {
      {{}, {3, 1}}, {{1}, {2, 1}}, {{2}, {1, 1}}, {{3}, {1}}, {{3, 1}, {}}};
  EXPECT_EQ(s, expected);
  EXPECT_EQ(as_set(cut_edge_splits(Composition{1})), as_set({{{}, {1}}, {{1}, {}}}));
  EXPECT_EQ(cut_edge_splits(Composition{2}).size(), 3u);
}

TEST(Ribbon, CutCellSplits) {
  std::vector<std::pair<Composition, Composition>> expected = {
      {{1}, {3, 1}}, {{2}, {2, 1}}, {{3}, {1, 1}}, {{3, 1}, {1}}};
  EXPECT_EQ(cut_cell_splits(Composition{3, 1}), expected);
  EXPECT_EQ(cut_cell_splits(Composition{1}), (std::vector<std::pair<Composition, Composition>>{{{1}, {1}}}));
  EXPECT_EQ(cut_cell_splits(Composition{2}),
            (std::vector<std::pair<Composition, Composition>>{{{1}, {2}}, {{2}, {1}}}));
}

TEST(Ribbon, TransposeMatchesGeometricReflection) {
  EXPECT_EQ(transpose(Composition{4}), (Composition{1, 1, 1, 1}));
  // Reflecting the three-cell ribbon of (2,1) in the diagonal gives the same cells.
  EXPECT_EQ(transpose(Composition{2, 1}), (Composition{2, 1}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) {
      EXPECT_EQ(transpose(a), oracle::reflect_ribbon(a)) << format(a);
      EXPECT_EQ(transpose(transpose(a)), a);
      // Descent set of the transpose is the complement of that of rev(a).
      auto s = composition_to_set(reversal(a));
      std::vector<int> complement;
      for (int i = 1; i < n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) complement.push_back(i);
      EXPECT_EQ(composition_to_set(transpose(a)), complement);
    }
}

TEST(Tableau, RowWord) {
  auto t = parse_tableau("1,3,9/2,7/4/5,6,8");
  EXPECT_EQ(row_word(Tableau({{9, 2, 7}, {4}, {1, 3}, {5, 6, 8}})), parse_word("568134927"));
  EXPECT_EQ(row_word(parse_tableau("1,2,3,4")), parse_word("1234"));
  EXPECT_EQ(row_word(column_superstandard({2, 2, 1})), parse_word("32514"));
  EXPECT_EQ(from_row_word(parse_word("32514"), {2, 2, 1}), parse_tableau("1,4/2,5/3"));
  EXPECT_EQ(format(t), "1,3,9/2,7/4/5,6,8");
}

TEST(Tableau, SuperstandardFill) {
  EXPECT_EQ(superstandard_fill(Composition{3}), parse_tableau("1,2,3"));
  EXPECT_EQ(superstandard_fill(Composition{1, 1}), parse_tableau("1/2"));
  EXPECT_EQ(canonical_model(Composition{1, 1}), parse_word("21"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) EXPECT_EQ(descent_composition(canonical_model(a)), a);
}

TEST(Tableau, ColumnSuperstandard) {
  EXPECT_EQ(column_superstandard({2, 2, 1}), parse_tableau("1,4/2,5/3"));
  EXPECT_EQ(column_superstandard({4}), parse_tableau("1,2,3,4"));
  EXPECT_EQ(column_superstandard({1, 1, 1}), parse_tableau("1/2/3"));
}

TEST(Rsk, Examples) {
  for (const char* w : {"32154", "32514", "32541", "35214", "35241"})
    EXPECT_EQ(rsk_insert(parse_word(w)), parse_tableau("1,4/2,5/3")) << w;
  EXPECT_EQ(rsk_insert(parse_word("1234")), parse_tableau("1,2,3,4"));
  EXPECT_EQ(rsk_insert(parse_word("4321")), parse_tableau("1/2/3/4"));
}

TEST(Rsk, MatchesOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_permutation(rng, 7);
    EXPECT_EQ(rsk_insert(p).rows(), oracle::insertion_tableau(p.oneline()));
  }
}

TEST(Knuth, ClassesMatchFilterOracle) {
  auto cls = knuth_class(parse_tableau("1,4/2,5/3"));
  std::set<std::string> got;
  for (const auto& p : cls) got.insert(format(p));
  EXPECT_EQ(got, (std::set<std::string>{"32154", "32514", "32541", "35214", "35241"}));
  EXPECT_EQ(knuth_class(parse_tableau("1,2,3,4")), std::vector<Permutation>{Permutation::identity(4)});
  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (const auto& t : standard_tableaux(n)) {
      auto k = knuth_class(t);
      std::set<std::vector<int>> mine;
      for (const auto& p : k) mine.insert(p.oneline());
      EXPECT_EQ(mine, oracle::knuth_class_by_filter(t.rows()));
      total += k.size();
    }
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    EXPECT_EQ(total, f);
  }
}

TEST(Knuth, NearRowClass) {
  for (int n = 2; n <= 7; ++n) {
    auto cls = knuth_class(column_superstandard({n - 1, 1}));
    std::set<Permutation> expected;
    for (int i = 1; i <= n - 1; ++i) {
      Word w = concat(concat(eta(2, i + 1), Word{1}), eta(i + 2, n));
      expected.insert(Permutation(w.letters()));
    }
    EXPECT_EQ(std::set<Permutation>(cls.begin(), cls.end()), expected);
  }
}

TEST(Jdt, RectificationMatchesReadingWordInsertion) {
  EXPECT_EQ(jdt_rectify(skew_difference(parse_tableau("1,3/2"), Tableau{})), parse_tableau("1,3/2"));
  auto p = parse_tableau("1,2/3");
  for (const char* r : {"1,2,4,5/3", "1,2,5/3,4", "1,2,5/3/4", "1,2/3,5/4"})
    EXPECT_EQ(standardize(jdt_rectify(skew_difference(parse_tableau(r), p))), parse_tableau("1,2")) << r;
  EXPECT_EQ(jdt_rectify(skew_difference(parse_tableau("1,2"), parse_tableau("1"))), parse_tableau("2"));
  for (int n = 2; n <= 6; ++n)
    for (const auto& r : standard_tableaux(n))
      for (int m = 1; m < n; ++m) {
        std::vector<std::vector<int>> inner;
        for (const auto& row : r.rows()) {
          std::vector<int> kept;
          for (int x : row)
            if (x <= m) kept.push_back(x);
          if (kept.empty()) break;
          inner.push_back(kept);
        }
        auto skew = skew_difference(r, Tableau(inner));
        EXPECT_EQ(jdt_rectify(skew).rows(), oracle::insertion_tableau(skew_reading_word(skew).letters()));
      }
}

TEST(DualImmaculate, Examples) {
  Tableau t({{1, 3, 4}, {1}, {2, 6}, {2, 4}});
  EXPECT_TRUE(is_dual_immaculate(t));
  EXPECT_EQ(content(t), (std::vector<int>{2, 2, 1, 2, 0, 1}));
  EXPECT_EQ(dual_immaculate_tableaux({4}), std::vector<Tableau>{parse_tableau("1/1/1/1")});
}

TEST(DualImmaculate, MatchesBruteForce) {
  for (const auto& c : std::vector<std::vector<int>>{{4, 2}, {2, 2, 1}, {1, 2, 2}, {3, 0, 2}, {1, 1, 1, 1}, {2, 3}}) {
    std::set<std::vector<std::vector<int>>> mine;
    for (const auto& t : dual_immaculate_tableaux(c)) mine.insert(t.rows());
    EXPECT_EQ(mine, oracle::dual_immaculate_brute(c));
  }
}

TEST(DualImmaculate, RowWordRoundTrip) {
  for (const auto& t : dual_immaculate_tableaux({2, 2, 1, 1})) EXPECT_EQ(from_row_word(row_word(t), t.shape()), t);
}

TEST(Frozen, TwoRowExample) {
  using Row = std::vector<std::optional<int>>;
  FrozenSpec t1{{Row{1}, Row{1}, Row{1}, Row{1, 2}}, {4, 2}};
  std::set<std::vector<int>> shapes;
  for (const auto& t : frozen_set(t1)) shapes.insert(t.shape());
  EXPECT_EQ(shapes, (std::set<std::vector<int>>{{2, 1, 1, 2}, {1, 2, 1, 2}, {1, 1, 2, 2}, {1, 1, 1, 2, 1}}));
  FrozenSpec t2{{Row{1}, Row{1}, Row{1}, Row{std::nullopt}}, {3, 3}};
  auto two = frozen_set(t2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].shape(), (std::vector<int>{2, 2, 2}));
  FrozenSpec whole{{Row{1, 2}}, {1, 1}};
  EXPECT_EQ(frozen_set(whole), std::vector<Tableau>{parse_tableau("1,2")});
  EXPECT_THROW(validate(FrozenSpec{{Row{std::nullopt, 1}}, {1}}), std::invalid_argument);
  EXPECT_THROW(validate(FrozenSpec{{Row{2}}, {1, 1}}), std::invalid_argument);
}

TEST(Collapse, Examples) {
  EXPECT_EQ(collapse_count(Composition{3, 1, 1}, Composition{2, 1}), 4u);
  EXPECT_EQ(collapse_count(Composition{2}, Composition{1}), 1u);
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      EXPECT_EQ(collapse_count(a, a), 1u);
      for (int m = 1; m <= n; ++m)
        for (const auto& b : compositions_of(m))
          EXPECT_EQ(collapse_count(a, b), oracle::collapse_brute(a, b)) << format(a) << " " << format(b);
    }
}

TEST(Decompositions, SeparatorTypesAreDistinguished) {
  auto ds = decompositions(Composition{3}, 3);
  std::set<std::string> text;
  for (const auto& d : ds) text.insert(format(d));
  EXPECT_TRUE(text.count("(1)*(2)|(1)"));
  EXPECT_TRUE(text.count("(1)|(2)*(1)"));
  EXPECT_EQ(decompositions(Composition{2}, 1).size(), 1u);
  // The single cell may be cut any number of times.
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(decompositions(Composition{1}, k).size(), k);
}

TEST(Decompositions, SuperstandardPieceWords) {
  Decomposition d{Composition{3, 1, 1},
                  {Composition{1}, Composition{2}, Composition{1}, Composition{1}, Composition{1}, Composition{1, 1}},
                  {Cut::cell, Cut::cell, Cut::edge, Cut::edge, Cut::cell}};
  std::vector<Word> expected = {parse_word("4"), parse_word("56"), parse_word("7"),
                                parse_word("8"), parse_word("2"), parse_word("31")};
  EXPECT_EQ(superstandard_piece_words(d), expected);
  auto comps = components(d);
  EXPECT_EQ(comps.size(), 3u);
}
