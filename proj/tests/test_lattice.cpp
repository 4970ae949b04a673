#include <limits>
#include <numeric>

#include "test_util.hpp"
#include "torifan/lattice.hpp"
#include "torifan/rational.hpp"

using namespace torifan;

TEST_CASE("checked arithmetic traps overflow instead of wrapping") {
  const i64 big = std::numeric_limits<i64>::max();
  CHECK(add_i(2, 3) == 5);
  CHECK_FAILS(Overflow, add_i(big, 1));
  CHECK_FAILS(Overflow, sub_i(std::numeric_limits<i64>::min(), 1));
  CHECK_FAILS(Overflow, mul_i(big / 2, 3));
  CHECK_FAILS(Overflow, neg_i(std::numeric_limits<i64>::min()));
}

TEST_CASE("floor and ceil division round exactly on negatives") {
  CHECK(floor_div(3, 2) == 1);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(ceil_div(3, 2) == 2);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK(ceil_div(4, 2) == 2);
  CHECK_FAILS(InternalContradiction, floor_div(1, 0));
  CHECK_FAILS(InternalContradiction, ceil_div(1, -2));
}

TEST_CASE("extended gcd returns a valid Bezout certificate") {
  for (i64 a = -12; a <= 12; ++a)
    for (i64 b = -12; b <= 12; ++b) {
      Egcd e = egcd(a, b);
      CHECK(e.g == std::gcd(a, b));
      CHECK(e.s * a + e.t * b == e.g);
    }
}

TEST_CASE("det2 orients pairs and dot2 measures alignment") {
  CHECK(det2({1, 0}, {0, 1}) == 1);
  CHECK(det2({0, 1}, {1, 0}) == -1);
  CHECK(det2({2, 1}, {4, 2}) == 0);
  CHECK(dot2({1, 2}, {3, 4}) == 11);
  CHECK_FAILS(Overflow, det2({i64{1} << 40, 1}, {1, i64{1} << 40}));
}

TEST_CASE("primitivity and normalization") {
  CHECK(is_primitive({1, 0}));
  CHECK(is_primitive({-3, 2}));
  CHECK_FALSE(is_primitive({4, 6}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(primitive({4, 6}) == Vec2{2, 3});
  CHECK(primitive({-2, -4}) == Vec2{-1, -2});
  CHECK(primitive({0, -7}) == Vec2{0, -1});
  CHECK_FAILS(ZeroVector, primitive({0, 0}));
}

TEST_CASE("3D determinant expands exactly") {
  CHECK(det3({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(det3({0, 1, 0}, {1, 0, 0}, {0, 0, 1}) == -1);
  CHECK(det3({1, 1, 0}, {0, 0, 1}, {1, 1, -1}) == 0);  // coplanar
  CHECK(det3({2, 0, 0}, {0, 3, 0}, {0, 0, 4}) == 24);
  CHECK(primitive3({2, 4, -6}) == Vec3{1, 2, -3});
  CHECK_FAILS(ZeroVector, primitive3({0, 0, 0}));
}

TEST_CASE("cones store primitive generators and reject parallel input") {
  Cone2 c({2, 0}, {0, 3});
  CHECK(c.gen_a == Vec2{1, 0});
  CHECK(c.gen_b == Vec2{0, 1});
  CHECK(singularity_order(c) == 1);
  CHECK(singularity_order(Cone2({1, 0}, {3, 5})) == 5);
  CHECK(singularity_order(Cone2({3, 5}, {1, 0})) == 5);  // orientation-free
  CHECK_FAILS(NotStrictlyConvex, Cone2({1, 2}, {2, 4}));
  CHECK_FAILS(NotStrictlyConvex, Cone2({1, 0}, {-1, 0}));  // a half-plane is not strictly convex
  CHECK_FAILS(ZeroVector, Cone2({0, 0}, {1, 0}));
}

TEST_CASE("unimodular maps act on point lists, others are rejected") {
  Mat2 shear{1, 1, 0, 1};
  CHECK(shear.det() == 1);
  CHECK(shear.apply({2, 3}) == Vec2{5, 3});
  std::vector<Vec2> pts{{1, 0}, {0, 1}, {-1, -1}};
  std::vector<Vec2> moved = unimodular_apply(shear, pts);
  CHECK(moved == std::vector<Vec2>{{1, 0}, {1, 1}, {-2, -1}});

  Mat2 flip{0, 1, 1, 0};
  CHECK(flip.det() == -1);
  CHECK(unimodular_apply(flip, pts).size() == 3);  // det -1 is allowed

  Mat2 doubling{2, 0, 0, 1};
  CHECK_FAILS(NotUnimodular, unimodular_apply(doubling, pts));
}

TEST_CASE("rationals reduce on construction and keep the sign in the numerator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK_FAILS(ZeroDenominator, Rational(1, 0));
}

TEST_CASE("rational parsing is strict") {
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("3") == Rational(3, 1));
  CHECK(Rational::parse("-5/3") == Rational(-5, 3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_FAILS(ParseError, Rational::parse(""));
  CHECK_FAILS(ParseError, Rational::parse("x"));
  CHECK_FAILS(ParseError, Rational::parse("3/"));
  CHECK_FAILS(ParseError, Rational::parse("/2"));
  CHECK_FAILS(ParseError, Rational::parse("3.5"));
  CHECK_FAILS(ParseError, Rational::parse("3 /2"));
  CHECK_FAILS(ParseError, Rational::parse("3/2x"));
  CHECK_FAILS(ZeroDenominator, Rational::parse("1/0"));
}

TEST_CASE("rational order, arithmetic, floor and fractional part") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-5, 3).str() == "-5/3");
}

TEST_CASE("mediant adds numerators and denominators") {
  CHECK(mediant(Rational(0, 1), Rational(1, 1)) == Rational(1, 2));
  CHECK(mediant(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(mediant(Rational(1, 3), Rational(2, 5)) == Rational(3, 8));
}
