#include "doctest.h"
#include "milnor/nondegeneracy.hpp"

using namespace milnor;

namespace {

NondegeneracyReport run(const char* text, const std::vector<std::string>& vars) {
  const auto f = parse_laurent(text, vars);
  return check_all(f, face_lattice(newton_polytope_at_infinity(f)));
}

const Face& face_by_vertices(const FaceLattice& l, const std::vector<ExponentVector>& v) {
  const auto id = l.find_by_vertices(v);
  REQUIRE(id);
  return l.face(*id);
}

}  // namespace

TEST_CASE("status names") {
  for (auto s : {CertificateStatus::ExactNondegenerate, CertificateStatus::ExactDegenerate,
                 CertificateStatus::ProbablyNondegenerate, CertificateStatus::Unknown})
    CHECK(parse_certificate_status(to_string(s)) == s);
  CHECK(to_string(CertificateStatus::ExactDegenerate) == "exact-degenerate");
}

TEST_CASE("mirror triangle is non-degenerate") {
  const auto r = run("x + y + x^-1*y^-1", {"x", "y"});
  CHECK(r.certificates.size() == 6);
  CHECK(r.overall == CertificateStatus::ExactNondegenerate);
}

TEST_CASE("double root on an edge") {
  const auto f = parse_laurent("x^2 + 2*x*y + y^2 + x", {"x", "y"});
  const auto l = face_lattice(newton_polytope_at_infinity(f));
  const auto r = check_all(f, l);
  CHECK(r.overall == CertificateStatus::ExactDegenerate);
  const Face& e = face_by_vertices(l, {{0, 2}, {2, 0}});
  const auto c = check_face(f, e);
  CHECK(c.status == CertificateStatus::ExactDegenerate);
  REQUIRE(c.witness);
  CHECK(c.witness->find("double root") != std::string::npos);
  CHECK(edge_polynomial(f, e).degree() == 2);
}

TEST_CASE("edge polynomial is the univariate reduction") {
  const auto f = parse_laurent("x^3 - 3*x*y^2 + 5", {"x", "y"});
  const auto l = face_lattice(newton_polytope_at_infinity(f));
  const auto q = edge_polynomial(f, face_by_vertices(l, {{1, 2}, {3, 0}}));
  // lattice length 2 with an empty middle point: q is u^2 - 3 or 1 - 3u^2
  CHECK(q.degree() == 2);
  CHECK(q.coeff(1) == 0);
  CHECK((q.coeff(0) == -3 * q.coeff(2) || q.coeff(2) == -3 * q.coeff(0)));
}

TEST_CASE("two-dimensional faces, exact") {
  // x + y + z + 1/(xyz): every face non-degenerate
  CHECK(run("x + y + z + x^-1*y^-1*z^-1", {"x", "y", "z"}).overall == CertificateStatus::ExactNondegenerate);

  // (x+y+z)(x+2y+3z) vanishes doubly along the line through (1,-2,1); the
  // edges of its triangle are squarefree, so only the 2-face is degenerate.
  const auto f = parse_laurent("x^2 + 3*x*y + 4*x*z + 2*y^2 + 5*y*z + 3*z^2 + 1", {"x", "y", "z"});
  const auto l = face_lattice(newton_polytope_at_infinity(f));
  const Face& tri = face_by_vertices(l, {{0, 0, 2}, {0, 2, 0}, {2, 0, 0}});
  const auto c = check_face(f, tri);
  CHECK(c.status == CertificateStatus::ExactDegenerate);
  CHECK(c.witness);
  for (const auto& face : faces_gamma(l))
    if (face.dim == 1) CHECK(check_face(f, face).status == CertificateStatus::ExactNondegenerate);

  // a smooth conic face
  CHECK(run("x^2 + y^2 + z^2 + x^-1", {"x", "y", "z"}).overall != CertificateStatus::ExactDegenerate);
}

TEST_CASE("bivariate singularity test") {
  auto g = [](std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (auto r : rows) {
      out.emplace_back();
      for (auto x : r) out.back().emplace_back(x);
    }
    return out;
  };
  // 1 + y1 + y2: smooth
  CHECK_FALSE(bivariate_torus_singularity(g({{1, 1}, {1, 0}})));
  // (1 + y1 + y2)^2: singular along its zero set
  CHECK(bivariate_torus_singularity(g({{1, 2, 1}, {2, 2, 0}, {1, 0, 0}})));
  // (y1 - 1)^2 + y1 (y2 - 1)^2, singular at (1, 1)
  CHECK(bivariate_torus_singularity(g({{1, 0, 0}, {-1, -2, 1}, {1, 0, 0}})));
}

TEST_CASE("three-dimensional faces use the seeded search") {
  const auto f = parse_laurent("x + y + z + w + x^-1*y^-1*z^-1*w^-1", {"x", "y", "z", "w"});
  const auto l = face_lattice(newton_polytope_at_infinity(f));
  NondegeneracyOptions o;
  o.seed = 5;
  o.trials = 16;
  const auto r1 = check_all(f, l, o);
  const auto r2 = check_all(f, l, o);
  CHECK(r1.certificates == r2.certificates);
  CHECK(r1.overall == CertificateStatus::ProbablyNondegenerate);
  bool seen = false;
  for (const auto& c : r1.certificates) {
    if (l.face(c.face_id).dim < 3) continue;
    seen = true;
    CHECK(c.status == CertificateStatus::ProbablyNondegenerate);
    CHECK(c.seed == std::optional<std::uint64_t>(5));
    CHECK(c.trials == 16);
  }
  CHECK(seen);
}
