/*
 * milnor: command line front end.
 *
 *   milnor analyze "x + y + x^-1*y^-1" --vars x,y [--mode affine] [--format json]
 *   milnor polytope | chi | check <poly> --vars ...
 *   milnor calibrate
 *
 * Exit codes: 0 ok, 1 other error, 2 spectrum withheld by the gate,
 * 3 parse error, 4 constant input, 5 calibration failure.
 */
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "milnor/json_io.hpp"

namespace {

using namespace milnor;

struct Args {
  std::string polynomial;
  std::string vars;
  std::string mode = "laurent";
  std::string format = "text";
  std::string chi_convention = "cone-chi";
  bool assume_nondegenerate = false;
  std::uint64_t seed = kDefaultSeed;
};

AnalysisOptions options_of(const Args& a) {
  AnalysisOptions o;
  o.chi_convention = parse_chi_convention(a.chi_convention);
  o.assume_nondegenerate = a.assume_nondegenerate;
  o.seed = a.seed;
  return o;
}

LaurentPoly input_of(const Args& a) { return parse_laurent(a.polynomial, parse_variable_list(a.vars)); }

void print(const Args& a, const Json& j, const std::string& text) {
  if (a.format == "json")
    std::cout << dump(j);
  else
    std::cout << text;
}

void report_gate(const std::vector<FaceRow>& faces, const std::string& gate) {
  std::cerr << "milnor: " << gate << "\n";
  for (const auto& f : faces) {
    if (f.certificate.status != CertificateStatus::ExactDegenerate) continue;
    std::cerr << "milnor: degenerate face " << f.face_id << " (";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) std::cerr << (i ? " " : "") << f.vertices[i].to_string();
    std::cerr << ")";
    if (f.certificate.witness) std::cerr << ": " << *f.certificate.witness;
    std::cerr << "\n";
  }
}

int cmd_analyze(const Args& a) {
  const LaurentPoly f = input_of(a);
  const AnalysisOptions o = options_of(a);
  if (a.mode == "affine") {
    const AffineReport r = analyze_affine(f, o);
    print(a, report_to_json(r), render_text(r));
    if (r.gate) {
      for (const auto& s : r.strata)
        if (s.report && s.report->gate) report_gate(s.report->faces, *s.report->gate);
      return 2;
    }
    return 0;
  }
  const AnalysisReport r = analyze_laurent(f, o);
  print(a, report_to_json(r), render_text(r));
  if (r.gate) {
    report_gate(r.faces, *r.gate);
    return 2;
  }
  return 0;
}

int cmd_polytope(const Args& a) {
  const LaurentPoly f = input_of(a);
  const Polytope p = newton_polytope_at_infinity(f);
  const FaceLattice l = face_lattice(p);
  print(a, polytope_to_json(f, p, l), render_polytope_text(p, l));
  return 0;
}

int cmd_chi(const Args& a) {
  const LaurentPoly f = input_of(a);
  const Polytope p = newton_polytope_at_infinity(f);
  const FaceLattice l = face_lattice(p);
  const ChiConvention c = parse_chi_convention(a.chi_convention);
  print(a, chi_table_to_json(f, p, l, c), render_chi_text(p, l, c));
  return 0;
}

int cmd_check(const Args& a) {
  const LaurentPoly f = input_of(a);
  if (f.is_constant()) throw ConstantInputError("input polynomial is constant");
  const Polytope p = newton_polytope_at_infinity(f);
  const FaceLattice l = face_lattice(p);
  const NondegeneracyReport r = check_all(f, l, {a.seed, 64});
  print(a, certificates_to_json(f, l, r), render_certificates_text(l, r));
  return 0;
}

int cmd_calibrate(const Args& a) {
  const CalibrationResult r = calibration_suite(parse_chi_convention(a.chi_convention));
  print(a, calibration_to_json(r), render_text(r));
  return r.all_pass() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic Milnor fiber at infinity and spectrum at infinity of Laurent polynomials"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("polynomial", args.polynomial, "Polynomial text, e.g. \"x + y + x^-1*y^-1\"")->required();
      sub->add_option("--vars", args.vars, "Ordered variable list, e.g. x,y (the order fixes coordinates)")
          ->required();
    }
    sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--chi-convention", args.chi_convention, "chi convention on non-commode input")
        ->check(CLI::IsMember({"commode-only", "cone-chi", "calibrated"}));
    sub->add_option("--seed", args.seed, "Seed for randomized non-degeneracy checks")->envname("MILNOR_SEED");
  };

  auto* analyze = app.add_subcommand("analyze", "Full analysis: faces, chi, certificates, S_infinity, spectrum");
  add_common(analyze, true);
  analyze->add_option("--mode", args.mode, "laurent (torus) or affine (coordinate strata)")
      ->check(CLI::IsMember({"laurent", "affine"}));
  analyze->add_flag("--assume-nondegenerate", args.assume_nondegenerate,
                    "Assemble the spectrum even when a face is degenerate");
  auto* polytope = app.add_subcommand("polytope", "Newton polyhedron at infinity and its face lattice");
  add_common(polytope, true);
  auto* chi_cmd = app.add_subcommand("chi", "chi reports for the faces not containing the origin");
  add_common(chi_cmd, true);
  auto* check = app.add_subcommand("check", "Non-degeneracy certificates");
  add_common(check, true);
  auto* calibrate = app.add_subcommand("calibrate", "Run the calibration fixtures");
  add_common(calibrate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(args);
    if (*polytope) return cmd_polytope(args);
    if (*chi_cmd) return cmd_chi(args);
    if (*check) return cmd_check(args);
    if (*calibrate) return cmd_calibrate(args);
  } catch (const milnor::ParseError& e) {
    std::cerr << "milnor: parse error: " << e.what() << "\n";
    return 3;
  } catch (const milnor::ConstantInputError& e) {
    std::cerr << "milnor: constant input: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "milnor: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
