#include <gtest/gtest.h>

#include "demazure/io.hpp"

using namespace demazure;

TEST(Io, ParsesLists) {
  EXPECT_EQ(parse_int_list("1,-2,3"), (std::vector<std::int64_t>{1, -2, 3}));
  EXPECT_TRUE(parse_int_list("e").empty());
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_THROW(parse_int_list("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("1.5"), std::invalid_argument);
}

TEST(Io, ValidatesWordsAndWeights) {
  auto t = make_type('A', 2);
  EXPECT_EQ(parse_word(t, "2,1"), (Word{2, 1}));
  EXPECT_THROW(parse_word(t, "3"), std::invalid_argument);
  EXPECT_THROW(parse_word(t, "0"), std::invalid_argument);
  EXPECT_EQ(parse_weight(t, "1,0"), (Weight{1, 0}));
  EXPECT_THROW(parse_weight(t, "1"), std::invalid_argument);
  EXPECT_THROW(parse_weight(t, "1,-1"), std::invalid_argument);
}

TEST(Io, ParsesDeformations) {
  auto c = make_type('C', 2);
  auto d = parse_deformation(c, "1/0,2");
  EXPECT_EQ(d.eps, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(d.eps_prime, (std::vector<std::int64_t>{0, 2}));
  EXPECT_THROW(parse_deformation(c, "3/0,2"), std::invalid_argument);
  EXPECT_NO_THROW(parse_deformation(make_type('A', 3), "1,2"));
  EXPECT_THROW(parse_deformation(make_type('A', 3), "2,1"), std::invalid_argument);
}

TEST(Io, ElementKeysAndProducts) {
  auto t = make_type('C', 2);
  EXPECT_EQ(element_key(WeylElement::from_word(t, {})), "e");
  SchubertCalculus sc(t);
  auto j = to_json(sc.product(WeylElement::simple_reflection(t, 1), WeylElement::simple_reflection(t, 2)));
  EXPECT_EQ(j["faces"].dump(), "[[1,2],[1,4],[2,3],[3,4]]");
  EXPECT_EQ(j["expansion"].size(), 2u);
  EXPECT_EQ(j["method"], "dual_cover");
}

TEST(Io, PipeDreamJson) {
  auto sh = make_shape(make_type('A', 2));
  auto d = PipeDream::from_boxes(sh, {{1, 1}, {2, 1}});
  auto j = to_json(d, true);
  EXPECT_EQ(j["boxes"].dump(), "[[1,1],[2,1]]");
  EXPECT_EQ(j["diagram"], "+.\n+\n");
  EXPECT_FALSE(to_json(d, false).contains("diagram"));
}

TEST(Io, CoordinateCsv) {
  EXPECT_EQ(coords_csv({{1, 0}, {0, 2}}, 2), "x1,x2\n1,0\n0,2\n");
}
