#include <gtest/gtest.h>

#include <limits>

#include "demazure/polytope.hpp"
#include "demazure/rational.hpp"

using namespace demazure;

namespace {

PolytopePtr cube(int d, std::int64_t side) {
  std::vector<Halfspace> hs;
  for (int k = 0; k < d; ++k) {
    IntVec lo(d, 0), hi(d, 0);
    lo[k] = -1;
    hi[k] = 1;
    hs.push_back({lo, 0, "x" + std::to_string(k) + " >= 0"});
    hs.push_back({hi, side, "x" + std::to_string(k) + " <= s"});
  }
  return std::make_shared<Polytope>(d, hs);
}

PolytopePtr simplex(int d, std::int64_t t) {
  std::vector<Halfspace> hs;
  for (int k = 0; k < d; ++k) {
    IntVec lo(d, 0);
    lo[k] = -1;
    hs.push_back({lo, 0, ""});
  }
  hs.push_back({IntVec(d, 1), t, ""});
  return std::make_shared<Polytope>(d, hs);
}

}  // namespace

TEST(Rational, Arithmetic) {
  Rational a(1, 2), b(-2, 3);
  EXPECT_EQ(a + b, Rational(-1, 6));
  EXPECT_EQ(a * b, Rational(-1, 3));
  EXPECT_EQ(a / b, Rational(-3, 4));
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(-3, 2).floor(), -2);
  EXPECT_EQ(Rational(-3, 2).ceil(), -1);
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_LT(b, a);
  EXPECT_EQ(Rational(-7, 3).str(), "-7/3");
}

TEST(Rational, OverflowIsDetected) {
  Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Polytope, CubeVerticesAndLatticePoints) {
  auto p = cube(3, 2);
  EXPECT_EQ(p->vertices().size(), 8u);
  EXPECT_EQ(count_lattice_points(make_face(p, {})), 27);
  EXPECT_EQ(count_lattice_points(make_face(p, {0}), 2), 25);
  EXPECT_TRUE(is_simple(p));
  EXPECT_EQ(make_face(p, {0, 2}).dim(), 1);
  EXPECT_TRUE(make_face(p, {0, 1}).empty());
}

TEST(Polytope, EhrhartVolumes) {
  auto v = ehrhart_volume(make_face(simplex(3, 1), {}));
  EXPECT_EQ(v.volume, Rational(1, 6));
  EXPECT_EQ(v.dim, 3);
  EXPECT_EQ(ehrhart_volume(make_face(cube(3, 2), {})).volume, Rational(8));
  // A facet of the simplex, measured in its own lattice.
  EXPECT_EQ(ehrhart_volume(make_face(simplex(3, 2), {3})).volume, Rational(2));
  EXPECT_EQ(ehrhart_volume(make_face(cube(2, 1), {0, 2})).volume, Rational(1));
}

TEST(Polytope, Transversality) {
  auto p = cube(3, 1);
  EXPECT_TRUE(transversal(make_face(p, {0}), make_face(p, {2})));
  EXPECT_FALSE(transversal(make_face(p, {0}), make_face(p, {0, 2})));
}

TEST(Polytope, LinearAlgebra) {
  std::vector<RatVec> a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  EXPECT_EQ(determinant(a), Rational(5));
  auto x = solve_linear(a, {Rational(3), Rational(4)}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));
  EXPECT_EQ(rank_of({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), 1);
}

TEST(IntersectionRing, ProjectiveSpaceAndCube) {
  // The triangle gives P^2: every facet class squares to the point class.
  IntersectionRing tri(simplex(2, 3));
  EXPECT_EQ(tri.degree({0, 1}), Rational(1));
  EXPECT_EQ(tri.degree({0, 0}), Rational(1));
  EXPECT_EQ(tri.degree({2, 2}), Rational(1));
  // The cube gives (P^1)^3: opposite facets are disjoint and each class squares to zero.
  IntersectionRing c(cube(3, 1));
  EXPECT_EQ(c.degree({0, 2, 4}), Rational(1));
  EXPECT_EQ(c.degree({0, 1, 2}), Rational(0));
  EXPECT_EQ(c.degree({0, 0, 2}), Rational(0));
  // P^3: H^3 = 1.
  IntersectionRing s3(simplex(3, 1));
  EXPECT_EQ(s3.degree({3, 3, 3}), Rational(1));
}
