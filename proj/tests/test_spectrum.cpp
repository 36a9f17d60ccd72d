#include <random>

#include "doctest.h"
#include "milnor/spectrum.hpp"

using namespace milnor;

namespace {
SpectrumPoly T(long p, long q, std::int64_t m = 1) { return SpectrumPoly::term(Rational(p, q), m); }
}  // namespace

TEST_CASE("generators") {
  CHECK(sp_of_generator(ProductKey{}) == T(0, 1));
  CHECK(sp_of_generator(ProductKey{1, 0, 1}) == T(1, 1));
  CHECK(sp_of_generator(ProductKey{1, 1, 0}) == T(1, 1) - T(0, 1));
  CHECK(sp_of_generator(ProductKey{1, 2, 0}) == T(2, 1) - T(1, 1, 2) + T(0, 1));
  CHECK(sp_of_generator(ProductKey{3, 0, 0}) == T(0, 1) + T(1, 3) + T(2, 3));
  CHECK(sp_of_generator(ProductKey{2, 1, 1}) == T(2, 1) + T(5, 2) - T(1, 1) - T(3, 2));
}

TEST_CASE("class realization") {
  const auto s = ClassExpr::torus(1) * 2 - ClassExpr::point() * 3;
  const auto r = sp_of_class(s);
  CHECK_FALSE(r.partial);
  CHECK(r.value == T(1, 1, 2) - T(0, 1, 5));
  CHECK(mass(r) == -3);
  CHECK(euler_specialization(s) == -3);

  const auto op = ClassExpr::generator(OpaqueKey{{{1, 0, 0}}, 3, "x"});
  const auto p = sp_of_class(op + ClassExpr::point());
  CHECK(p.partial);
  CHECK(p.value == T(0, 1));
  CHECK(p.remainder == op);
  CHECK_THROWS_AS(mass(p), DomainError);
  CHECK_THROWS_AS(euler_specialization(op), DomainError);
}

TEST_CASE("text rendering and parsing") {
  const auto s = T(1, 1, 2) - T(0, 1, 5) + T(1, 2);
  CHECK(s.to_string() == "-5*t^(0) + 1*t^(1/2) + 2*t^(1)");
  CHECK(parse_spectrum(s.to_string()) == s);
  CHECK(SpectrumPoly().to_string() == "0");
  CHECK(parse_spectrum("0").is_zero());
  CHECK(parse_spectrum("3*t^(-2/4)") == T(-1, 2, 3));
  CHECK_THROWS_AS(parse_spectrum("3*t^(1/0)"), ParseError);
  CHECK_THROWS_AS(parse_spectrum("t"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(""), ParseError);
}

TEST_CASE("random round trips and mass/euler coherence") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(1, 5), r(0, 3), k(0, 2), c(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    ClassExpr x;
    for (int i = 0; i < 4; ++i) x = x + ClassExpr::generator(ProductKey{e(rng), r(rng), k(rng)}, c(rng));
    const auto sp = sp_of_class(x);
    CHECK(parse_spectrum(sp.value.to_string()) == sp.value);
    CHECK(mass(sp) == euler_specialization(x));
  }
}

TEST_CASE("products multiply spectra") {
  const auto a = ClassExpr::orbit(3) * ClassExpr::torus(1);
  CHECK(sp_of_class(a).value == sp_of_generator(ProductKey{3, 0, 0}) * sp_of_generator(ProductKey{1, 1, 0}));
}
