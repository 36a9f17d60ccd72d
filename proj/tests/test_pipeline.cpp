#include "doctest.h"
#include "milnor/json_io.hpp"
#include "milnor/pipeline.hpp"

using namespace milnor;

namespace {

const std::vector<std::string> XY = {"x", "y"};

AnalysisReport analyze(const char* text, std::vector<std::string> vars = XY, AnalysisOptions o = {}) {
  return analyze_laurent(parse_laurent(text, vars), o);
}

SpectrumPoly S(const char* text) { return parse_spectrum(text); }

const CheckResult& check_named(const std::vector<CheckResult>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return cs.front();
}

}  // namespace

TEST_CASE("x + 1/x") {
  const auto r = analyze("x + x^-1", {"x"});
  REQUIRE(r.spectrum);
  CHECK(*r.s_infinity == ClassExpr::point() * 2);
  CHECK(r.spectrum->value == S("2*t^(0)"));
  CHECK(check_named(r.checks, "kouchnirenko-mass").outcome == CheckOutcome::Pass);
}

TEST_CASE("mirror of P^2") {
  const auto r = analyze("x + y + x^-1*y^-1");
  CHECK(r.faces.size() == 6);
  REQUIRE(r.spectrum);
  CHECK(r.spectrum->value == S("-5*t^(0) + 2*t^(1)"));
  CHECK(mass(*r.spectrum) == -3);
  CHECK(r.polytope.normalized_volume == 3);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.outcome == CheckOutcome::Pass, c.name << ": " << c.details);
}

TEST_CASE("x + y + x^-2 y^-1") {
  const auto r = analyze("x + y + x^-2*y^-1");
  REQUIRE(r.spectrum);
  CHECK(*r.s_infinity == ClassExpr::torus(1) * 2 - ClassExpr::point() * 4);
  CHECK(mass(*r.spectrum) == -4);
  CHECK(r.polytope.normalized_volume == 4);
  CHECK(check_named(r.checks, "kouchnirenko-mass").outcome == CheckOutcome::Pass);
}

TEST_CASE("non-commode inputs") {
  CHECK(analyze("x", {"x"}).spectrum->value == S("1*t^(0)"));
  CHECK(analyze("x^2", {"x"}).spectrum->value == S("1*t^(0) + 1*t^(1/2)"));
  const auto xy = analyze("x*y");
  CHECK(xy.spectrum->value == S("1*t^(0) - 1*t^(1)"));
  CHECK(check_named(xy.checks, "kouchnirenko-mass").outcome == CheckOutcome::Skipped);
  CHECK(check_named(xy.checks, "mass-euler").outcome == CheckOutcome::Pass);

  AnalysisOptions strict;
  strict.chi_convention = ChiConvention::CommodeOnly;
  const auto w = analyze("x", {"x"}, strict);
  CHECK_FALSE(w.spectrum);
  REQUIRE(w.gate);
  CHECK(w.gate->find("commode-only") != std::string::npos);
  // the commode case is unaffected
  CHECK(analyze("x + x^-1", {"x"}, strict).spectrum);
}

TEST_CASE("degeneracy gate") {
  const auto r = analyze("x^2 + 2*x*y + y^2 + x");
  CHECK(r.overall_certificate == CertificateStatus::ExactDegenerate);
  CHECK(r.gate);
  CHECK_FALSE(r.spectrum);
  CHECK_FALSE(r.s_infinity);
  CHECK(r.faces.size() == 3);  // two vertices and the edge; tables are still produced

  AnalysisOptions o;
  o.assume_nondegenerate = true;
  const auto forced = analyze("x^2 + 2*x*y + y^2 + x", XY, o);
  CHECK_FALSE(forced.gate);
  REQUIRE(forced.spectrum);
  CHECK(forced.assume_nondegenerate);
}

TEST_CASE("constant and malformed input") {
  CHECK_THROWS_AS(analyze("7", {"x"}), ConstantInputError);
  CHECK_THROWS_AS(analyze("0", {"x"}), ConstantInputError);
  CHECK_THROWS_AS(analyze_affine(parse_laurent("x + x^-1", {"x"})), DomainError);
  CHECK_THROWS_AS(analyze_affine(parse_laurent("5", {"x"})), ConstantInputError);
}

TEST_CASE("d = 3 gives a partial spectrum") {
  const auto r = analyze("x + y + z + x^-1*y^-1*z^-1", {"x", "y", "z"});
  REQUIRE(r.spectrum);
  CHECK(r.spectrum->partial);
  CHECK(r.spectrum->remainder.terms().size() == 4);
  CHECK(check_named(r.checks, "weight-independence").outcome == CheckOutcome::Pass);
  CHECK(check_named(r.checks, "commode-chi").outcome == CheckOutcome::Pass);
  CHECK(check_named(r.checks, "kouchnirenko-mass").outcome == CheckOutcome::Skipped);
}

TEST_CASE("affine stratification") {
  const auto x = analyze_affine(parse_laurent("x", {"x"}));
  REQUIRE(x.strata.size() == 2);
  CHECK(x.strata[1].status == "skipped-constant-zero");
  CHECK(x.spectrum->value == S("1*t^(0)"));

  const auto xy = analyze_affine(parse_laurent("x*y", XY));
  int analyzed = 0;
  for (const auto& s : xy.strata) analyzed += s.report.has_value();
  CHECK(analyzed == 1);
  CHECK(*xy.strata[0].report == analyze("x*y"));
  CHECK(xy.spectrum->value == xy.strata[0].report->spectrum->value);

  const auto c = analyze_affine(parse_laurent("x*y + 3", XY));
  CHECK(c.strata[1].status == "skipped-constant");

  // Laurent/affine coherence for a polynomial input
  const auto f = parse_laurent("x^2*y + x + y^3", XY);
  const auto a = analyze_affine(f);
  CHECK(*a.strata[0].report == analyze_laurent(f));
  SpectrumPoly sum;
  for (const auto& s : a.strata)
    if (s.report) sum = sum + s.report->spectrum->value;
  CHECK(a.spectrum->value == sum);
}

TEST_CASE("determinism") {
  AnalysisOptions o;
  o.seed = 99;
  const auto f = parse_laurent("x + y + z + w + x^-1*y^-1*z^-1*w^-1", {"x", "y", "z", "w"});
  const auto a = dump(report_to_json(analyze_laurent(f, o)));
  const auto b = dump(report_to_json(analyze_laurent(f, o)));
  CHECK(a == b);
}

TEST_CASE("calibration suite") {
  for (auto c : {ChiConvention::ConeChi, ChiConvention::Calibrated}) {
    const auto r = calibration_suite(c);
    CHECK(r.rows.size() == 4);
    CHECK(r.all_pass());
    CHECK(r.xy_sign == -kCalibratedSign);
  }
  const auto strict = calibration_suite(ChiConvention::CommodeOnly);
  CHECK_FALSE(strict.all_pass());
}
