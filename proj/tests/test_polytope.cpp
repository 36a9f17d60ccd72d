#include <random>

#include "doctest.h"
#include "milnor/lattice.hpp"
#include "milnor/polytope.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

std::vector<ExponentVector> to_ev(const std::vector<oracle::Pt>& pts) {
  std::vector<ExponentVector> out;
  for (const auto& p : pts) out.emplace_back(p);
  return out;
}

std::vector<oracle::Pt> random_points(std::mt19937_64& rng, std::size_t d, std::size_t n, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  std::vector<oracle::Pt> pts;
  for (std::size_t i = 0; i < n; ++i) {
    oracle::Pt p(d);
    for (auto& x : p) x = u(rng);
    pts.push_back(p);
  }
  return pts;
}

std::set<oracle::Pt> as_set(const std::vector<ExponentVector>& vs) {
  std::set<oracle::Pt> s;
  for (const auto& v : vs) s.insert(v.entries());
  return s;
}

}  // namespace

TEST_CASE("mirror triangle") {
  const auto f = parse_laurent("x + y + x^-1*y^-1", {"x", "y"});
  const Polytope p = newton_polytope_at_infinity(f);
  CHECK(p.dim() == 2);
  CHECK(as_set(p.vertices()) == std::set<oracle::Pt>{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(is_commode(p));
  CHECK(normalized_volume(p) == 3);
  const FaceLattice l = face_lattice(p);
  std::map<int, int> by_dim;
  for (const auto& face : l.faces()) ++by_dim[face.dim];
  CHECK(by_dim[-1] == 1);
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);
  CHECK(l.euler_poincare_sum() == 0);
  CHECK(faces_gamma(l).size() == 6);
  CHECK(l.face(0).dim == -1);
  CHECK(l.face(l.polytope_id()).dim == 2);
}

TEST_CASE("segments and lower-dimensional hulls") {
  const auto x = newton_polytope_at_infinity(parse_laurent("x", {"x"}));
  CHECK(as_set(x.vertices()) == std::set<oracle::Pt>{{0}, {1}});
  CHECK_FALSE(is_commode(x));
  CHECK(normalized_volume(x) == 1);
  const auto lx = face_lattice(x);
  const auto gx = faces_gamma(lx);
  REQUIRE(gx.size() == 1);
  CHECK(gx[0].vertices == std::vector<ExponentVector>{{1}});

  const auto xx = newton_polytope_at_infinity(parse_laurent("x + x^-1", {"x"}));
  CHECK(is_commode(xx));
  CHECK(normalized_volume(xx) == 2);

  const auto xy = newton_polytope_at_infinity(parse_laurent("x*y", {"x", "y"}));
  CHECK(xy.dim() == 1);
  CHECK_FALSE(xy.full_dimensional());
  CHECK(normalized_volume(xy) == 0);
  CHECK(xy.equations().size() == 1);
  const auto gxy = faces_gamma(face_lattice(xy));
  REQUIRE(gxy.size() == 1);
  CHECK(gxy[0].vertices == std::vector<ExponentVector>{{1, 1}});

  CHECK_FALSE(is_commode(newton_polytope_at_infinity(parse_laurent("x + y", {"x", "y"}))));
  CHECK_THROWS_AS(newton_polytope_at_infinity(parse_laurent("3", {"x"})), ConstantInputError);
}

TEST_CASE("square face lattice") {
  const Polytope p = Polytope::hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}, {1, 0}});
  CHECK(p.vertices().size() == 4);
  const auto l = face_lattice(p);
  int v = 0, e = 0, f = 0;
  for (const auto& face : l.faces()) {
    v += face.dim == 0;
    e += face.dim == 1;
    f += face.dim == 2;
  }
  CHECK(v == 4);
  CHECK(e == 4);
  CHECK(f == 1);
  // the edge x = 1 holds three input points
  const auto id = l.find_by_vertices({{1, -1}, {1, 1}});
  REQUIRE(id);
  CHECK(l.face(*id).lattice_points.size() == 3);
}

TEST_CASE("random planar hulls against monotone chain and shoelace") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto pts = random_points(rng, 2, 3 + rng() % 8, 4);
    const auto ref = oracle::hull2d(pts);
    if (ref.size() < 3) continue;
    const Polytope p = Polytope::hull(to_ev(pts));
    CHECK(as_set(p.vertices()) == std::set<oracle::Pt>(ref.begin(), ref.end()));
    CHECK(normalized_volume(p) == oracle::twice_area(ref));
    CHECK(p.facets().size() == ref.size());
    for (const auto& q : pts)
      for (const auto& fct : p.facets()) CHECK(fct.slack(ExponentVector(q)) >= 0);
    const auto l = face_lattice(p);
    CHECK(l.euler_poincare_sum() == 0);
    // each face is the maximizer set of some direction
    std::set<std::set<oracle::Pt>> from_scan;
    std::vector<oracle::Pt> verts(ref.begin(), ref.end());
    for (int a = -9; a <= 9; ++a)
      for (int b = -9; b <= 9; ++b)
        if (a || b) from_scan.insert(oracle::argmax(verts, {a, b}));
    std::set<std::set<oracle::Pt>> proper;
    for (const auto& face : l.faces())
      if (face.dim >= 0 && face.id != l.polytope_id()) proper.insert(as_set(face.vertices));
    CHECK(proper == from_scan);
  }
}

TEST_CASE("random 3-polytopes against Caratheodory and facet-fan oracles") {
  std::mt19937_64 rng(22);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto pts = random_points(rng, 3, 5 + rng() % 6, 3);
    pts.push_back({0, 0, 0});
    const Polytope p = Polytope::hull(to_ev(pts));
    if (!p.full_dimensional()) continue;
    ++tested;
    CHECK(as_set(p.vertices()) == oracle::vertices3d(pts));
    CHECK(normalized_volume(p) == oracle::six_volume3d(pts));
    const auto l = face_lattice(p);
    CHECK(l.euler_poincare_sum() == 0);
    long v = 0, e = 0, f = 0;
    for (const auto& face : l.faces()) {
      v += face.dim == 0;
      e += face.dim == 1;
      f += face.dim == 2;
    }
    CHECK(v - e + f == 2);
    for (const auto& face : l.faces()) {
      if (face.dim < 1) continue;
      // direction basis is saturated and reproduces the face's points
      CHECK(face.direction_basis.size() == static_cast<std::size_t>(face.dim));
      for (const auto& q : face.lattice_points) {
        const auto diff = q - *face.base_point;
        std::vector<ExponentVector> aug = face.direction_basis;
        aug.push_back(diff);
        CHECK(rank(aug, 3) == face.direction_basis.size());
      }
    }
  }
  CHECK(tested >= 30);
}

TEST_CASE("coordinate hyperplane flag and face restriction") {
  const auto f = parse_laurent("x^2 + 2*x*y + y^2 + x", {"x", "y"});
  const Polytope p = newton_polytope_at_infinity(f);
  const auto l = face_lattice(p);
  const auto edge = l.find_by_vertices({{0, 2}, {2, 0}});
  REQUIRE(edge);
  CHECK_FALSE(l.face(*edge).in_coordinate_hyperplane);
  CHECK(face_restriction(f, p, l.face(*edge)).to_string() == "x^2 + 2*x*y + y^2");
  const auto v = l.find_by_vertices({{0, 2}});
  REQUIRE(v);
  CHECK(l.face(*v).in_coordinate_hyperplane);
  const Polytope other = Polytope::hull({{0, 0}, {5, 0}, {0, 5}});
  CHECK_THROWS(face_restriction(f, other, face_lattice(other).face(1)));
}

TEST_CASE("pulling triangulation covers the volume") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = random_points(rng, 2, 6, 3);
    const auto ref = oracle::hull2d(pts);
    if (ref.size() < 3) continue;
    const Polytope p = Polytope::hull(to_ev(pts));
    const auto l = face_lattice(p);
    const auto simplices = pulling_triangulation(l, l.polytope_id());
    std::int64_t sum = 0;
    for (const auto& s : simplices) {
      REQUIRE(s.size() == 3);
      const auto& a = p.vertices()[s[0]];
      const auto& b = p.vertices()[s[1]];
      const auto& c = p.vertices()[s[2]];
      sum += std::abs(oracle::cross2(a.entries(), b.entries(), c.entries()));
    }
    CHECK(sum == oracle::twice_area(ref));
  }
}
