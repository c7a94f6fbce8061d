#include <gtest/gtest.h>

#include <algorithm>

#include "demazure/crystal.hpp"
#include "demazure/oracle.hpp"
#include "demazure/polyhedra.hpp"
#include "oracles.hpp"

using namespace demazure;

namespace {

char fam(const CartanType& t) { return t.family == Family::A ? 'A' : 'C'; }

std::vector<CartanType> types() {
  return {make_type('A', 2), make_type('A', 3), make_type('C', 2), make_type('C', 3)};
}

std::vector<Weight> weights(int rank) {
  std::vector<Weight> out{Weight(rank, 1)};
  for (int i = 0; i < rank; ++i) {
    Weight w(rank, 0);
    w[i] = 1;
    out.push_back(w);
  }
  Weight m(rank, 0);
  m[rank - 1] = 2;
  m[0] += 1;
  out.push_back(m);
  return out;
}

bool subset(const CoordSet& a, const CoordSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST(Crystal, KashiwaraAxioms) {
  for (const auto& t : types())
    for (const auto& lambda : weights(t.rank)) {
      StringCrystal cr(t, canonical_word(t));
      auto all = cr.generate(lambda);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::weyl_dimension(fam(t), lambda));
      for (const auto& b : all)
        for (int i = 1; i <= t.rank; ++i) {
          auto wt = cr.weight(b, lambda);
          EXPECT_EQ(cr.phi(b, i, lambda) - cr.epsilon(b, i), wt[i - 1]);
          if (auto f = cr.f(b, i, lambda)) {
            ASSERT_TRUE(all.count(*f));
            EXPECT_EQ(cr.e(*f, i), b);
            EXPECT_EQ(cr.epsilon(*f, i), cr.epsilon(b, i) + 1);
            auto wf = cr.weight(*f, lambda);
            auto a = simple_root_weight(t, i);
            for (int j = 0; j < t.rank; ++j) EXPECT_EQ(wf[j], wt[j] - a[j]);
          } else {
            EXPECT_EQ(cr.phi(b, i, lambda), 0);
          }
          if (cr.epsilon(b, i) == 0) EXPECT_FALSE(cr.e(b, i));
        }
    }
}

TEST(Crystal, StringDataAreLatticePointsOfStringPolytope) {
  for (const auto& t : {make_type('A', 1), make_type('A', 2), make_type('A', 3), make_type('C', 2), make_type('C', 3)})
    for (const auto& lambda : weights(t.rank)) {
      StringCrystal cr(t, canonical_word(t));
      auto strings = cr.to_string_data(cr.generate(lambda));
      auto pts = lattice_points(string_polytope(t, lambda));
      EXPECT_EQ(strings, CoordSet(pts.begin(), pts.end())) << t.name();
    }
}

TEST(Crystal, StringParametrizationIsInjectiveForEveryReducedWord) {
  for (const auto& t : {make_type('A', 3), make_type('C', 2), make_type('C', 3)}) {
    auto words = all_reduced_words(longest_element(t));
    Weight lambda = rho(t);
    for (std::size_t k = 0; k < words.size(); k += std::max<std::size_t>(1, words.size() / 12)) {
      StringCrystal cr(t, words[k]);
      auto all = cr.generate(lambda);
      EXPECT_EQ(cr.to_string_data(all).size(), all.size());
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::weyl_dimension(fam(t), lambda));
    }
  }
}

TEST(Crystal, DemazureCrystalIsIndependentOfReducedWord) {
  for (const auto& t : {make_type('A', 3), make_type('C', 3)}) {
    StringCrystal cr(t, canonical_word(t));
    Weight lambda = rho(t);
    for (const auto& w : weyl_group_elements(t)) {
      auto words = all_reduced_words(w);
      auto first = cr.demazure(w, lambda, words.front());
      EXPECT_EQ(cr.demazure(w, lambda, words.back()), first);
      EXPECT_EQ(static_cast<std::int64_t>(first.size()), character_dimension(demazure_character(w, lambda)));
    }
  }
}

TEST(Crystal, BruhatOrderIsContainment) {
  for (const auto& t : {make_type('A', 2), make_type('C', 2)}) {
    StringCrystal cr(t, canonical_word(t));
    Weight lambda = rho(t);
    auto low = cr.lowest(lambda);
    for (const auto& v : weyl_group_elements(t))
      for (const auto& w : weyl_group_elements(t)) {
        EXPECT_EQ(subset(cr.demazure(v, lambda), cr.demazure(w, lambda)), bruhat_leq(v, w));
        EXPECT_EQ(subset(cr.opposite_demazure_from(low, w), cr.opposite_demazure_from(low, v)), bruhat_leq(v, w));
      }
  }
}

TEST(Crystal, OppositeDemazureCardinalities) {
  for (const auto& t : types()) {
    StringCrystal cr(t, canonical_word(t));
    const auto w0 = longest_element(t);
    for (const auto& lambda : weights(t.rank)) {
      Weight dual(t.rank);
      for (int i = 1; i <= t.rank; ++i) dual[star(t, i) - 1] = lambda[i - 1];
      auto low = cr.lowest(lambda);
      for (const auto& w : weyl_group_elements(t)) {
        auto opp = cr.opposite_demazure_from(low, w).size();
        EXPECT_EQ(opp, cr.demazure(w0 * w, lambda).size());
        EXPECT_EQ(opp, cr.demazure(w * w0, dual).size());
      }
    }
  }
}

TEST(Crystal, SmallCardinalities) {
  auto t = make_type('A', 2);
  StringCrystal cr(t, canonical_word(t));
  auto s1 = WeylElement::simple_reflection(t, 1);
  EXPECT_EQ(cr.demazure(s1, {1, 1}).size(), 2u);
  // Same size as B_{w0 s1}(rho), a Demazure crystal of length 2.
  EXPECT_EQ(cr.opposite_demazure(s1, {1, 1}).size(), 5u);
  EXPECT_EQ(cr.generate({0, 0}).size(), 1u);
}

TEST(Crystal, LusztigTransformIsNonnegative) {
  for (const auto& t : types())
    for (const auto& lambda : weights(t.rank)) {
      StringCrystal cr(t, canonical_word(t));
      for (const auto& x : cr.to_string_data(cr.generate(lambda)))
        for (auto v : cr.lusztig_transform(x, lambda)) EXPECT_GE(v, 0) << t.name();
    }
}

TEST(Crystal, ShortWordIsReported) {
  auto t = make_type('A', 2);
  StringCrystal cr(t, {1});
  EXPECT_THROW(cr.f_infinity(cr.highest(), 2), InsufficientWord);
  EXPECT_THROW(cr.generate({0, 1}), InsufficientWord);
}

TEST(Crystal, RejectsNonDominantWeight) {
  auto t = make_type('A', 2);
  StringCrystal cr(t, canonical_word(t));
  EXPECT_THROW(cr.generate({-1, 0}), std::invalid_argument);
}
