#include <random>

#include "doctest.h"
#include "milnor/laurent.hpp"

using namespace milnor;

namespace {
const std::vector<std::string> XY = {"x", "y"};
}

TEST_CASE("exponent vector basics") {
  ExponentVector a{4, -6, 2};
  CHECK(a.content() == 2);
  CHECK(a.degree() == 0);
  CHECK(ExponentVector{0, 0}.content() == 0);
  CHECK(a.dot(ExponentVector{1, 1, 1}) == 0);
  CHECK((a + ExponentVector{1, 1, 1}) == ExponentVector{5, -5, 3});
  CHECK(a.scaled(-1) == -a);
  CHECK(a.to_string() == "(4,-6,2)");
}

TEST_CASE("exponent arithmetic overflow is an error") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  ExponentVector a{big};
  CHECK_THROWS_AS(a + ExponentVector{1}, OverflowError);
  CHECK_THROWS_AS(a.dot(ExponentVector{2}), OverflowError);
}

TEST_CASE("graded lex order puts higher degree first") {
  GradedLexGreater g;
  CHECK(g(ExponentVector{2, 0}, ExponentVector{1, 0}));
  CHECK(g(ExponentVector{1, 0}, ExponentVector{0, 1}));
  CHECK_FALSE(g(ExponentVector{0, 1}, ExponentVector{1, 0}));
  CHECK(g(ExponentVector{0, 0}, ExponentVector{-1, -1}));
}

TEST_CASE("parse and format") {
  auto f = parse_laurent("x + y + x^-1*y^-1", XY);
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient(ExponentVector{-1, -1}) == 1);
  CHECK(f.to_string() == "x + y + x^-1*y^-1");

  CHECK(parse_laurent("x^(-1)", {"x"}) == parse_laurent("x^-1", {"x"}));
  CHECK(parse_laurent("3x^2 - 1/2*x", {"x"}).to_string() == "3*x^2 - 1/2*x");
  CHECK(parse_laurent("-x + x", {"x"}).is_zero());
  CHECK(parse_laurent("0", {"x"}).is_zero());
  CHECK(parse_laurent(" 2 * x * y ", XY).coefficient(ExponentVector{1, 1}) == 2);
  CHECK(parse_laurent("x*x", {"x"}).coefficient(ExponentVector{2}) == 1);
  CHECK(parse_laurent("4/6", {"x"}).coefficient(ExponentVector{0}) == Rational(2, 3));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_laurent("x +", {"x"}), ParseError);
  CHECK_THROWS_AS(parse_laurent("", {"x"}), ParseError);
  CHECK_THROWS_AS(parse_laurent("x^", {"x"}), ParseError);
  CHECK_THROWS_AS(parse_laurent("1/0", {"x"}), ParseError);
  CHECK_THROWS_AS(parse_laurent("z", {"x"}), UnknownVariableError);
  try {
    parse_laurent("x + + y", XY);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 3);
  }
}

TEST_CASE("variable lists") {
  CHECK(parse_variable_list("x,y,z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_variable_list(" a , b ") == std::vector<std::string>{"a", "b"});
  CHECK_THROWS(parse_variable_list("x,x"));
  CHECK_THROWS(parse_variable_list(""));
  CHECK_THROWS(parse_variable_list("x,,y"));
}

TEST_CASE("format then parse round-trips random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), n(1, 6), den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly f(XY);
    for (int k = n(rng); k > 0; --k) f.add_term(ExponentVector{e(rng), e(rng)}, Rational(c(rng), den(rng)));
    const auto text = f.to_string();
    CHECK_MESSAGE(parse_laurent(text, XY) == f, text);
  }
}

TEST_CASE("predicates") {
  CHECK(parse_laurent("5", {"x"}).is_constant());
  CHECK(parse_laurent("0", {"x"}).is_constant());
  CHECK_FALSE(parse_laurent("x", {"x"}).is_constant());
  CHECK(parse_laurent("x*y + 1", XY).is_polynomial());
  CHECK_FALSE(parse_laurent("x + x^-1", {"x"}).is_polynomial());
}

TEST_CASE("restriction to points keeps exactly the listed support") {
  auto f = parse_laurent("x^2 + 2*x*y + y^2 + x", XY);
  std::vector<ExponentVector> edge = {{2, 0}, {1, 1}, {0, 2}};
  CHECK(restrict_to_points(f, edge).to_string() == "x^2 + 2*x*y + y^2");
  std::vector<ExponentVector> vertex = {{-1, -1}};
  CHECK(restrict_to_points(parse_laurent("x + y + x^-1*y^-1", XY), vertex).to_string() == "x^-1*y^-1");
}

TEST_CASE("stratum restriction") {
  auto r = stratum_restriction(parse_laurent("x*y + x", XY), {1});
  REQUIRE(std::holds_alternative<LaurentPoly>(r));
  CHECK(std::get<LaurentPoly>(r).variables() == std::vector<std::string>{"x"});
  CHECK(std::get<LaurentPoly>(r).to_string() == "x");

  CHECK(std::holds_alternative<ConstantZero>(stratum_restriction(parse_laurent("x*y", XY), {1})));
  auto c = stratum_restriction(parse_laurent("x*y + 3", XY), {0});
  REQUIRE(std::holds_alternative<ConstantValue>(c));
  CHECK(std::get<ConstantValue>(c).value == 3);
  CHECK_THROWS_AS(stratum_restriction(parse_laurent("x + x^-1", {"x"}), {0}), DomainError);

  // support of the restriction = support points with zero entries at the
  // zeroed indices, projected
  auto f = parse_laurent("x^2*z + y + z^3 + x*y*z + 4", {"x", "y", "z"});
  auto g = std::get<LaurentPoly>(stratum_restriction(f, {0}));
  auto s = support(g);
  CHECK(s == std::set<ExponentVector>{{1, 0}, {0, 3}, {0, 0}});
}
