#include "qspivey/poly.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace qspivey;

TEST_SUITE("exact_poly") {
  TEST_CASE("qpoly addition") {
    CHECK(QPoly{1, 1} + QPoly{0, 1} == QPoly{1, 2});
    const QPoly p{3, 0, -2};
    CHECK(p + QPoly{} == p);
    const QPoly cancel = QPoly{1, 1, 1} + QPoly{-1, -1, -1};
    CHECK(cancel.is_zero());
    CHECK(cancel.coefficients().empty());
  }

  TEST_CASE("qpoly multiplication") {
    CHECK(QPoly{1, 1} * QPoly{1, 1} == QPoly{1, 2, 1});
    const QPoly p{4, -1, 0, 7};
    CHECK(p * QPoly{1} == p);
    CHECK(QPoly{1, 1, 1} * QPoly{1, 1} == QPoly{1, 2, 2, 1});
    CHECK((QPoly{2, 1} * QPoly{}).is_zero());
  }

  TEST_CASE("degree of zero is absent") {
    CHECK_FALSE(QPoly{}.degree().has_value());
    CHECK_FALSE(QPoly{0, 0, 0}.degree().has_value());
    CHECK(QPoly{5}.degree() == 0U);
    CHECK(QPoly{0, 0, 1, 0, 0}.degree() == 2U);
    CHECK(QPoly{0, 0, 1, 0, 0}.size() == 3U);
  }

  TEST_CASE("powers, with 0^0 = 1") {
    CHECK(pow(QPoly{1, 1}, 2) == QPoly{1, 2, 1});
    CHECK(pow(QPoly{}, 0) == QPoly{1});
    CHECK(pow(QPoly{}, 3).is_zero());
    CHECK(pow(QPoly{0, 1}, 3) == QPoly{0, 0, 0, 1});
    CHECK(pow(BigInt(0), 0) == 1);
    CHECK(pow(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
  }

  TEST_CASE("integer evaluation") {
    CHECK(evaluate(QPoly{1, 1, 1}, BigInt(1)) == 3);
    CHECK(evaluate(QPoly{0, 2, 1}, BigInt(1)) == 3);
    CHECK(evaluate(QPoly{}, BigInt(5)) == 0);
    CHECK(evaluate(QPoly{1, 0, 1}, BigInt(-3)) == 10);
  }

  TEST_CASE("xqpoly ring operations") {
    const XQPoly x = XQPoly::variable_power(1);
    CHECK(x * x == XQPoly::variable_power(2));
    const XQPoly p{QPoly{}, QPoly{1}, QPoly{0, 1}};  // x + q x^2
    CHECK(p * QPoly{0, 1} == XQPoly{QPoly{}, QPoly{0, 1}, QPoly{0, 0, 1}});
    const XQPoly one_plus_x{QPoly{1}, QPoly{1}};
    CHECK(one_plus_x * XQPoly{QPoly{1}} == one_plus_x);
  }

  TEST_CASE("substituting an integer for x") {
    const XQPoly p{QPoly{}, QPoly{1}, QPoly{0, 1}};
    CHECK(evaluate_x(p, 1) == QPoly{1, 1});
    CHECK(evaluate_x(p, 0).is_zero());
    CHECK(evaluate_x(XQPoly{QPoly{7, 1}, QPoly{3}}, 0) == QPoly{7, 1});
    CHECK(evaluate_x(XQPoly::variable_power(2), 3) == QPoly{9});
  }

  TEST_CASE("trailing zeros never matter") {
    CHECK(QPoly(std::vector<BigInt>{1, 2, 0, 0}) == QPoly{1, 2});
    CHECK(XQPoly(std::vector<QPoly>{QPoly{1}, QPoly{}, QPoly{}}) == XQPoly{QPoly{1}});
    CHECK(QPoly{1, 2}.coeff(7) == 0);
  }

  TEST_CASE("exact division by an integer") {
    CHECK(divide_exact(QPoly{4, 8, -12}, 4) == QPoly{1, 2, -3});
    CHECK_FALSE(divide_exact(QPoly{4, 6}, 4).has_value());
    CHECK_FALSE(divide_exact(QPoly{4}, 0).has_value());
    CHECK(divide_exact(QPoly{}, 3) == QPoly{});
  }

  TEST_CASE("canonical decimal parsing") {
    CHECK(parse_decimal("0") == 0);
    CHECK(parse_decimal("-123456789012345678901234567890") == BigInt("-123456789012345678901234567890"));
    for (const char* bad : {"", "-", "+1", "007", "-0", "1e3", " 1", "12a"}) {
      CHECK_THROWS_AS(parse_decimal(bad), std::invalid_argument);
    }
  }

  TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
      const QPoly a = testing::random_qpoly(rng);
      const QPoly b = testing::random_qpoly(rng);
      const QPoly c = testing::random_qpoly(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + QPoly{} == a);
      CHECK(a * QPoly{1} == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());

      const XQPoly x = testing::random_xqpoly(rng);
      const XQPoly y = testing::random_xqpoly(rng);
      const XQPoly z = testing::random_xqpoly(rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * c == x * XQPoly::constant(c));
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> point(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
      const QPoly a = testing::random_qpoly(rng);
      const QPoly b = testing::random_qpoly(rng);
      const BigInt v = point(rng);
      CHECK(evaluate(a * b, v) == evaluate(a, v) * evaluate(b, v));
      CHECK(evaluate(a + b, v) == evaluate(a, v) + evaluate(b, v));
    }
  }
}
