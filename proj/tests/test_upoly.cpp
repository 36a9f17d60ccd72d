#include "doctest.h"
#include "milnor/upoly.hpp"

using namespace milnor;

namespace {
UPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return UPoly(v);
}
}  // namespace

TEST_CASE("arithmetic and division") {
  const UPoly a = P({1, 2, 1});  // (u+1)^2
  const UPoly b = P({1, 1});
  CHECK(a.degree() == 2);
  CHECK(a / b == b);
  CHECK((a % b).is_zero());
  CHECK(a.to_string() == "u^2 + 2*u + 1");
  CHECK(a.derivative() == P({2, 2}));
  CHECK(a.evaluate(Rational(-1)) == 0);
  UPoly q, r;
  P({5, 0, 0, 2}).divmod(P({1, 1}), q, r);
  CHECK(q * P({1, 1}) + r == P({5, 0, 0, 2}));
  CHECK(r.degree() < 1);
}

TEST_CASE("gcd, extended gcd and squarefree part") {
  const UPoly f = P({-1, 0, 1}) * P({2, 1});  // (u-1)(u+1)(u+2)
  const UPoly g = P({-1, 1}) * P({3, 1});
  CHECK(gcd(f, g) == P({-1, 1}));
  const auto e = extended_gcd(f, g);
  CHECK(e.s * f + e.t * g == e.gcd);
  CHECK(squarefree_part(P({1, 2, 1}) * P({0, 1})) == P({0, 1, 1}));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  CHECK(P({0, 0, 3, 1}).low_degree() == 2);
  CHECK(P({0, 0, 3, 1}).without_zero_root() == P({3, 1}));
}

TEST_CASE("interpolation recovers a polynomial") {
  const UPoly p = P({3, -1, 0, 2});
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.emplace_back(i);
    ys.push_back(p.evaluate(Rational(i)));
  }
  CHECK(interpolate(xs, ys) == p);
}
