#include <gtest/gtest.h>

#include "demazure/oracle.hpp"
#include "oracles.hpp"

using namespace demazure;

namespace {

char fam(const CartanType& t) { return t.family == Family::A ? 'A' : 'C'; }

oracle::Signed perm(const WeylElement& w) {
  const auto& t = w.type();
  return oracle::word_product(fam(t), t.rank, reduced_word(w));
}

Poly sample_poly(int n) {
  std::vector<Rational> a(n), b(n);
  for (int j = 0; j < n; ++j) {
    a[j] = Rational(j + 1);
    b[j] = Rational(2 * j - 3);
  }
  Poly la = Poly::linear(a), lb = Poly::linear(b);
  return la * la * lb + Poly::constant(n, Rational(5)) * lb;
}

}  // namespace

TEST(Oracle, WeylDimensions) {
  EXPECT_EQ(weyl_dimension(make_type('A', 2), {1, 1}), 8);
  EXPECT_EQ(weyl_dimension(make_type('C', 2), {1, 0}), 5);
  EXPECT_EQ(weyl_dimension(make_type('C', 2), {0, 1}), 4);
  for (const auto& t : {make_type('A', 3), make_type('C', 3)})
    for (const auto& lambda : {Weight{1, 0, 2}, Weight{2, 1, 1}, Weight{0, 3, 0}})
      EXPECT_EQ(weyl_dimension(t, lambda), oracle::weyl_dimension(fam(t), lambda)) << t.name();
}

TEST(Oracle, DemazureOperatorsSatisfyBraidRelations) {
  for (const auto& t : {make_type('A', 3), make_type('C', 3)}) {
    Weight lambda{1, 1, 1};
    Character ch{{lambda, 1}};
    for (int i = 1; i <= t.rank; ++i) {
      auto once = demazure_operator(t, ch, i);
      EXPECT_EQ(demazure_operator(t, once, i), once);
    }
    auto seq = [&](const Word& w) {
      Character c = ch;
      for (int i : w) c = demazure_operator(t, c, i);
      return c;
    };
    EXPECT_EQ(seq({2, 3, 2}), seq({3, 2, 3}));
    EXPECT_EQ(seq({1, 3}), seq({3, 1}));
    if (t.family == Family::C)
      EXPECT_EQ(seq({1, 2, 1, 2}), seq({2, 1, 2, 1}));
    else
      EXPECT_EQ(seq({1, 2, 1}), seq({2, 1, 2}));
    EXPECT_EQ(character_dimension(demazure_character(longest_element(t), lambda)), weyl_dimension(t, lambda));
    EXPECT_EQ(character_dimension(demazure_character(WeylElement::from_word(t, {}), lambda)), 1);
  }
}

TEST(Oracle, DividedDifferences) {
  for (const auto& t : {make_type('A', 2), make_type('C', 2), make_type('A', 3)}) {
    BGGOracle bgg(t);
    Poly f = sample_poly(t.rank);
    for (int i = 1; i <= t.rank; ++i) EXPECT_TRUE(bgg.divided_difference(bgg.divided_difference(f, i), i).is_zero());
    auto dd = [&](const Word& w) {
      Poly p = f;
      for (int i : w) p = bgg.divided_difference(p, i);
      return p;
    };
    if (t.family == Family::C)
      EXPECT_EQ(dd({1, 2, 1, 2}), dd({2, 1, 2, 1}));
    else
      EXPECT_EQ(dd({1, 2, 1}), dd({2, 1, 2}));
  }
}

TEST(Oracle, SchubertPolynomialsOfExtremeElements) {
  for (const auto& t : {make_type('A', 2), make_type('A', 3), make_type('C', 2), make_type('C', 3)}) {
    BGGOracle bgg(t);
    EXPECT_EQ(bgg.schubert_polynomial(WeylElement::from_word(t, {})), Poly::constant(t.rank, Rational(1)));
    EXPECT_EQ(bgg.integrate(bgg.schubert_polynomial(longest_element(t))), Rational(1));
  }
}

TEST(Oracle, StructureConstantsFollowMonksRule) {
  for (int n = 2; n <= 3; ++n) {
    auto t = make_type('A', n);
    BGGOracle bgg(t);
    for (const auto& w : weyl_group_elements(t))
      for (int r = 1; r <= n; ++r) {
        std::set<oracle::Signed> got;
        for (const auto& [u, c] : bgg.structure_constants(WeylElement::simple_reflection(t, r), w)) {
          EXPECT_EQ(c, Rational(1));
          got.insert(perm(u));
        }
        EXPECT_EQ(got, oracle::monk(perm(w), r));
      }
  }
}

TEST(Oracle, StructureConstantsFormACommutativeAssociativeRing) {
  for (const auto& t : {make_type('A', 2), make_type('C', 2)}) {
    BGGOracle bgg(t);
    const auto& el = bgg.elements();
    auto e = WeylElement::from_word(t, {});
    for (const auto& v : el) {
      auto id = bgg.structure_constants(e, v);
      ASSERT_EQ(id.size(), 1u);
      EXPECT_EQ(id.begin()->first, v);
      EXPECT_EQ(id.begin()->second, Rational(1));
      for (const auto& w : el) {
        auto vw = bgg.structure_constants(v, w);
        EXPECT_EQ(vw, bgg.structure_constants(w, v));
        for (const auto& [u, c] : vw) EXPECT_GT(c, Rational(0));
      }
    }
    for (const auto& a : el)
      for (const auto& b : el)
        for (const auto& c : el) {
          std::map<WeylElement, Rational> left, right;
          for (const auto& [u, x] : bgg.structure_constants(a, b))
            for (const auto& [z, y] : bgg.structure_constants(u, c)) left[z] += x * y;
          for (const auto& [u, x] : bgg.structure_constants(b, c))
            for (const auto& [z, y] : bgg.structure_constants(a, u)) right[z] += x * y;
          EXPECT_EQ(left, right);
        }
  }
}

TEST(Oracle, ProductOfSimpleClassesInC2) {
  auto t = make_type('C', 2);
  BGGOracle bgg(t);
  auto s1 = WeylElement::simple_reflection(t, 1), s2 = WeylElement::simple_reflection(t, 2);
  auto r = bgg.structure_constants(s1, s2);
  std::map<WeylElement, Rational> expect{{s1 * s2, Rational(1)}, {s2 * s1, Rational(1)}};
  EXPECT_EQ(r, expect);
}

TEST(Oracle, DegreeOfFullFlagVarietyIsWeylVolumeTimesFactorial) {
  for (const auto& t : {make_type('A', 2), make_type('C', 2)}) {
    BGGOracle bgg(t);
    Weight lambda = rho(t);
    Rational f(1);
    for (int k = 2; k <= t.num_positive_roots(); ++k) f = f * Rational(k);
    EXPECT_EQ(bgg.schubert_degree(longest_element(t), lambda), weyl_volume(t, lambda) * f);
  }
}
