#include <gtest/gtest.h>

#include <set>

#include "demazure/pipedreams.hpp"
#include "pipe_dream_tables.hpp"

using namespace demazure;

TEST(PipeDreams, DisplayedTablesAreReproduced) {
  for (const auto& d : tables::displayed()) EXPECT_EQ(tables::check(d), "");
}

TEST(PipeDreams, BoxSequences) {
  auto a = PipeDream::from_boxes(make_shape(make_type('A', 4)), {{1, 3}, {2, 1}, {3, 1}, {4, 1}});
  EXPECT_EQ(a.k_D(), (std::vector<int>{1, 2, 4, 9}));
  EXPECT_EQ(a.k_prime_D(), (std::vector<int>{2, 4, 5, 7, 9, 10}));
  auto c = PipeDream::from_boxes(make_shape(make_type('C', 3)), {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}});
  EXPECT_EQ(c.k_D(), (std::vector<int>{3, 4, 7, 8, 9}));
  EXPECT_EQ(c.k_prime_D(), (std::vector<int>{1, 2, 5, 6}));
}

TEST(PipeDreams, SimpleReflectionsHaveOneSkewPipeDream) {
  for (int n = 2; n <= 4; ++n) {
    auto t = make_type('C', n);
    auto sh = make_shape(t);
    for (int i = 1; i <= n; ++i) {
      auto expect = PipeDream::full(sh);
      expect.erase(n - i + 1, n + i - 1);
      auto d = bottom_pipe_dream(sh, WeylElement::simple_reflection(t, i));
      EXPECT_EQ(d, expect) << n << " " << i;
      auto m = mitosis_set(sh, WeylElement::simple_reflection(t, i));
      ASSERT_EQ(m.size(), 1u);
      EXPECT_EQ(*m.begin(), expect);
    }
  }
}

TEST(PipeDreams, LadderAndMitosisAgreeInTypeA) {
  for (int n = 3; n <= 4; ++n) {
    auto t = make_type('A', n);
    auto sh = make_shape(t);
    for (const auto& w : weyl_group_elements(t)) {
      auto l = ladder_set(sh, w);
      EXPECT_EQ(mitosis_set(sh, w), l);
      for (const auto& word : all_reduced_words(w)) EXPECT_EQ(mitosis_chain(sh, word), l);
    }
  }
}

TEST(PipeDreams, TypeABoxSequencesAreCompatibleSubsets) {
  for (int n = 2; n <= 4; ++n) {
    auto t = make_type('A', n);
    auto sh = make_shape(t);
    auto w0 = longest_element(t);
    for (const auto& u : weyl_group_elements(t)) {
      std::set<std::vector<int>> ks;
      for (const auto& d : mitosis_set(sh, u)) {
        ks.insert(d.k_D());
        EXPECT_TRUE(d.is_reduced());
      }
      auto r = compatible_subsets(t, sh->word(), u * w0);
      EXPECT_EQ(ks, std::set<std::vector<int>>(r.begin(), r.end()));
    }
  }
}

TEST(PipeDreams, SkewMitosisStaysInLadderClosure) {
  for (int n = 2; n <= 3; ++n) {
    auto t = make_type('C', n);
    auto sh = make_shape(t);
    for (const auto& w : weyl_group_elements(t)) {
      auto l = ladder_set(sh, w);
      for (const auto& d : mitosis_set(sh, w)) EXPECT_TRUE(l.count(d));
    }
  }
}
