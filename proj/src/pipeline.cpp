#include "milnor/pipeline.hpp"

#include <algorithm>

namespace milnor {

std::string to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Skipped: return "skipped";
  }
  return "?";
}

CheckOutcome parse_check_outcome(const std::string& s) {
  if (s == "pass") return CheckOutcome::Pass;
  if (s == "fail") return CheckOutcome::Fail;
  if (s == "skipped") return CheckOutcome::Skipped;
  throw DomainError("unknown check outcome '" + s + "'");
}

namespace {

PolytopeSummary summarize(const Polytope& p) {
  PolytopeSummary s;
  s.ambient_dim = p.ambient_dim();
  s.dim = p.dim();
  s.vertices = p.vertices();
  s.facets = p.facets();
  s.equations = p.equations();
  s.normalized_volume = normalized_volume(p);
  s.commode = is_commode(p);
  return s;
}

bool nondegenerate(CertificateStatus s) {
  return s == CertificateStatus::ExactNondegenerate || s == CertificateStatus::ProbablyNondegenerate;
}

}  // namespace

AnalysisReport analyze_laurent(const LaurentPoly& f, const AnalysisOptions& options) {
  if (f.is_constant()) throw ConstantInputError("input polynomial is constant");

  AnalysisReport r;
  r.variables = f.variables();
  r.polynomial = f.to_string();
  r.chi_convention = options.chi_convention;
  r.assume_nondegenerate = options.assume_nondegenerate;
  r.seed = options.seed;

  const Polytope p = newton_polytope_at_infinity(f);
  const FaceLattice lattice = face_lattice(p);
  r.polytope = summarize(p);

  const NondegeneracyOptions nd{options.seed, options.trials};
  const NondegeneracyReport certs = check_all(f, lattice, nd);
  r.overall_certificate = certs.overall;

  const auto faces = faces_gamma(lattice);
  bool chi_complete = true;
  bool fibers_complete = true;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& face = faces[i];
    FaceRow row;
    row.face_id = face.id;
    row.dim = face.dim;
    row.vertices = face.vertices;
    row.lattice_points = face.lattice_points;
    row.in_coordinate_hyperplane = face.in_coordinate_hyperplane;
    const LaurentPoly f_gamma = restrict_to_points(f, face.lattice_points);
    row.face_polynomial = f_gamma.to_string();
    row.chi = chi(face, p, options.chi_convention);
    row.certificate = certs.certificates.at(i);
    row.weight = sample_weight(face, p);
    row.degree = face_degree(face, row.weight);
    row.total_space_symbol = total_space_symbol(f_gamma, row.weight);
    try {
      row.fiber = fiber_class(f, face, row.weight, options.assume_nondegenerate);
    } catch (const DegenerateFaceError&) {
      fibers_complete = false;
    }
    if (!row.chi.chi_used) chi_complete = false;
    r.faces.push_back(std::move(row));
  }

  if (r.overall_certificate == CertificateStatus::ExactDegenerate && !options.assume_nondegenerate) {
    r.gate = "degenerate face; spectrum withheld (use --assume-nondegenerate to override)";
  } else if (!chi_complete) {
    r.gate = "chi convention " + to_string(options.chi_convention) + " is undefined on non-commode input";
  } else if (!fibers_complete) {
    r.gate = "a fiber class could not be reduced";
  }

  if (!r.gate) {
    std::vector<FaceContribution> contributions;
    for (const auto& row : r.faces)
      contributions.push_back({row.face_id, *row.chi.chi_used, *row.fiber, row.total_space_symbol});
    r.s_infinity = assemble_s_infinity(contributions);
    r.spectrum = sp_of_class(*r.s_infinity);
  }

  r.checks = consistency_suite(r, f);
  return r;
}

std::vector<CheckResult> consistency_suite(const AnalysisReport& report, const LaurentPoly& f) {
  std::vector<CheckResult> out;
  const std::size_t d = report.polytope.ambient_dim;

  {
    CheckResult c{"kouchnirenko-mass", CheckOutcome::Skipped, ""};
    if (!report.polytope.commode) {
      c.details = "input is not commode";
    } else if (!nondegenerate(report.overall_certificate)) {
      c.details = "non-degeneracy not established (" + to_string(report.overall_certificate) + ")";
    } else if (!report.spectrum) {
      c.details = "spectrum withheld";
    } else if (report.spectrum->partial) {
      c.details = "spectrum is partial";
    } else {
      // normalized volume already carries the d! factor
      const Rational expected = report.polytope.normalized_volume * ((d - 1) % 2 == 0 ? 1 : -1);
      const std::int64_t m = mass(report.spectrum->value);
      c.outcome = Rational(m) == expected ? CheckOutcome::Pass : CheckOutcome::Fail;
      c.details = "mass " + std::to_string(m) + " vs (-1)^(d-1) d! Vol = " + to_string(expected);
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"weight-independence", CheckOutcome::Skipped, ""};
    const Polytope p = newton_polytope_at_infinity(f);
    const FaceLattice lattice = face_lattice(p);
    std::size_t compared = 0;
    std::vector<std::string> mismatches;
    for (const auto& row : report.faces) {
      if (!row.fiber) continue;
      const Face& face = lattice.face(row.face_id);
      const ExponentVector w2 = second_sample_weight(face, p, row.weight);
      const ClassExpr again = fiber_class(f, face, w2, report.assume_nondegenerate);
      ++compared;
      if (again != *row.fiber)
        mismatches.push_back("face " + std::to_string(row.face_id) + ": " + row.fiber->to_string() + " vs " +
                             again.to_string() + " at w=" + w2.to_string());
    }
    if (compared == 0) {
      c.details = "no reduced fiber classes";
    } else if (mismatches.empty()) {
      c.outcome = CheckOutcome::Pass;
      c.details = std::to_string(compared) + " faces compared";
    } else {
      c.outcome = CheckOutcome::Fail;
      for (const auto& m : mismatches) c.details += (c.details.empty() ? "" : "; ") + m;
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"commode-chi", CheckOutcome::Skipped, ""};
    if (!report.polytope.commode) {
      c.details = "input is not commode";
    } else {
      std::size_t compared = 0;
      std::vector<std::string> bad;
      for (const auto& row : report.faces) {
        if (row.in_coordinate_hyperplane || !row.chi.chi_closed_form) continue;
        ++compared;
        if (row.chi.disagreement())
          bad.push_back("face " + std::to_string(row.face_id) + ": closed form " +
                        std::to_string(*row.chi.chi_closed_form) + " vs cone " + std::to_string(row.chi.chi_cone));
      }
      c.outcome = bad.empty() ? CheckOutcome::Pass : CheckOutcome::Fail;
      c.details = std::to_string(compared) + " faces compared";
      for (const auto& b : bad) c.details += "; " + b;
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"mass-euler", CheckOutcome::Skipped, ""};
    if (!report.s_infinity || !report.spectrum) {
      c.details = "spectrum withheld";
    } else if (report.s_infinity->has_opaque()) {
      c.details = "S_infinity has opaque terms";
    } else {
      const std::int64_t m = mass(report.spectrum->value);
      const std::int64_t e = euler_specialization(*report.s_infinity);
      c.outcome = m == e ? CheckOutcome::Pass : CheckOutcome::Fail;
      c.details = "mass " + std::to_string(m) + " vs euler " + std::to_string(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

AffineReport analyze_affine(const LaurentPoly& f, const AnalysisOptions& options) {
  if (!f.is_polynomial()) throw DomainError("affine mode requires nonnegative exponents");
  if (f.is_constant()) throw ConstantInputError("input polynomial is constant");
  const std::size_t d = f.dimension();
  if (d >= 20) throw DomainError("too many variables for stratification");

  AffineReport r;
  r.variables = f.variables();
  r.polynomial = f.to_string();
  r.chi_convention = options.chi_convention;
  r.assume_nondegenerate = options.assume_nondegenerate;
  r.seed = options.seed;

  bool any = false;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    StratumEntry s;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i))
        s.zeroed.push_back(i);
      else
        s.variables.push_back(f.variables()[i]);
    }
    const StratumRestriction res = stratum_restriction(f, s.zeroed);
    if (std::holds_alternative<ConstantZero>(res)) {
      s.restriction = "0";
      s.status = "skipped-constant-zero";
    } else if (const auto* cv = std::get_if<ConstantValue>(&res)) {
      s.restriction = to_string(cv->value);
      s.status = "skipped-constant";
    } else {
      const auto& g = std::get<LaurentPoly>(res);
      s.restriction = g.to_string();
      s.status = "analyzed";
      s.report = analyze_laurent(g, options);
      any = true;
    }
    r.strata.push_back(std::move(s));
  }
  if (!any) throw ConstantInputError("every stratum restriction is constant");

  for (const auto& s : r.strata) {
    if (!s.report || !s.report->gate) continue;
    r.gate = "stratum {" + [&] {
      std::string z;
      for (auto i : s.zeroed) z += (z.empty() ? "" : ",") + f.variables()[i] + "=0";
      return z.empty() ? std::string("torus") : z;
    }() + "}: " + *s.report->gate;
    break;
  }

  if (!r.gate) {
    ClassExpr total;
    SpectrumResult sp;
    for (const auto& s : r.strata) {
      if (!s.report) continue;
      total = total + *s.report->s_infinity;
      sp.value = sp.value + s.report->spectrum->value;
      sp.remainder = sp.remainder + s.report->spectrum->remainder;
    }
    sp.partial = !sp.remainder.is_zero();
    r.s_infinity = total;
    r.spectrum = sp;

    CheckResult add{"stratum-additivity", CheckOutcome::Pass, ""};
    if (sp_of_class(total) != sp) {
      add.outcome = CheckOutcome::Fail;
      add.details = "sum of stratum spectra differs from the spectrum of the summed class";
    } else {
      add.details = "spectrum of the summed class equals the sum of stratum spectra";
    }
    r.checks.push_back(add);
  } else {
    r.checks.push_back({"stratum-additivity", CheckOutcome::Skipped, "spectrum withheld"});
  }
  for (const auto& s : r.strata) {
    if (!s.report) continue;
    std::size_t failed = 0;
    for (const auto& c : s.report->checks) failed += c.outcome == CheckOutcome::Fail;
    r.checks.push_back({"stratum-checks[" + s.restriction + "]",
                        failed ? CheckOutcome::Fail : CheckOutcome::Pass,
                        std::to_string(failed) + " failed consistency checks"});
  }
  return r;
}

bool CalibrationResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CalibrationRow& r) { return r.pass; });
}

CalibrationResult calibration_suite(ChiConvention convention) {
  struct Fixture {
    const char* text;
    std::vector<std::string> vars;
    const char* expected;
  };
  const std::vector<Fixture> fixtures = {
      {"x", {"x"}, "1*t^(0)"},
      {"x + x^-1", {"x"}, "2*t^(0)"},
      {"x^2", {"x"}, "1*t^(0) + 1*t^(1/2)"},
      {"x*y", {"x", "y"}, nullptr},
  };
  CalibrationResult out;
  out.convention = convention;
  AnalysisOptions opts;
  opts.chi_convention = convention;
  for (const auto& fx : fixtures) {
    CalibrationRow row;
    row.fixture = fx.text;
    row.variables = fx.vars;
    const AnalysisReport rep = analyze_laurent(parse_laurent(fx.text, fx.vars), opts);
    row.computed = rep.spectrum ? rep.spectrum->value.to_string() : "withheld";
    if (fx.expected) {
      row.expected = fx.expected;
      row.pass = rep.spectrum && !rep.spectrum->partial && rep.spectrum->value == parse_spectrum(fx.expected);
    } else {
      row.expected = "+-(1*t^(1) - 1*t^(0))";
      const SpectrumPoly t_minus_1 = SpectrumPoly::term(1) - SpectrumPoly::term(0);
      if (rep.spectrum && rep.spectrum->value == t_minus_1) out.xy_sign = 1;
      if (rep.spectrum && rep.spectrum->value == -t_minus_1) out.xy_sign = -1;
      row.pass = out.xy_sign != 0;
      row.note = "recorded sign " + std::to_string(out.xy_sign);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace milnor
