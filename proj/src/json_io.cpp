#include "milnor/json_io.hpp"

#include <sstream>

namespace milnor {

namespace {

Json bigint_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string", 0);
}

Json vec_to_json(const ExponentVector& v) { return Json(v.entries()); }

ExponentVector vec_from_json(const Json& j) { return ExponentVector(j.get<std::vector<std::int64_t>>()); }

Json vecs_to_json(const std::vector<ExponentVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

std::vector<ExponentVector> vecs_from_json(const Json& j) {
  std::vector<ExponentVector> out;
  for (const auto& v : j) out.push_back(vec_from_json(v));
  return out;
}

template <class T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json options_to_json(ChiConvention c, int sign, bool assume, std::uint64_t seed) {
  return Json{{"chi_convention", to_string(c)},
              {"calibrated_sign", sign},
              {"assume_nondegenerate", assume},
              {"seed", seed}};
}

Json polytope_summary_to_json(const PolytopeSummary& s) {
  Json facets = Json::array();
  for (const auto& f : s.facets) facets.push_back({{"normal", vec_to_json(f.normal)}, {"offset", f.offset}});
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back({{"normal", vec_to_json(e.normal)}, {"value", e.value}});
  return Json{{"ambient_dim", s.ambient_dim},
              {"dim", s.dim},
              {"vertices", vecs_to_json(s.vertices)},
              {"facets", facets},
              {"equations", eqs},
              {"normalized_volume", rational_to_json(s.normalized_volume)},
              {"commode", s.commode}};
}

PolytopeSummary polytope_summary_from_json(const Json& j) {
  PolytopeSummary s;
  s.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  s.dim = j.at("dim").get<int>();
  s.vertices = vecs_from_json(j.at("vertices"));
  for (const auto& f : j.at("facets"))
    s.facets.push_back({vec_from_json(f.at("normal")), f.at("offset").get<std::int64_t>()});
  for (const auto& e : j.at("equations"))
    s.equations.push_back({vec_from_json(e.at("normal")), e.at("value").get<std::int64_t>()});
  s.normalized_volume = rational_from_json(j.at("normalized_volume"));
  s.commode = j.at("commode").get<bool>();
  return s;
}

Json chi_to_json(const ChiReport& c) {
  return Json{{"face_id", c.face_id},
              {"closed_form", optional_to_json(c.chi_closed_form)},
              {"cone", c.chi_cone},
              {"used", optional_to_json(c.chi_used)},
              {"convention", to_string(c.convention)},
              {"disagreement", c.disagreement()}};
}

ChiReport chi_from_json(const Json& j) {
  ChiReport c;
  c.face_id = j.at("face_id").get<std::size_t>();
  c.chi_closed_form = optional_from_json<int>(j.at("closed_form"));
  c.chi_cone = j.at("cone").get<int>();
  c.chi_used = optional_from_json<int>(j.at("used"));
  c.convention = parse_chi_convention(j.at("convention").get<std::string>());
  return c;
}

Json certificate_to_json(const Certificate& c) {
  return Json{{"face_id", c.face_id},
              {"status", to_string(c.status)},
              {"detail", c.detail},
              {"witness", optional_to_json(c.witness)},
              {"seed", optional_to_json(c.seed)},
              {"trials", c.trials}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.face_id = j.at("face_id").get<std::size_t>();
  c.status = parse_certificate_status(j.at("status").get<std::string>());
  c.detail = j.at("detail").get<std::string>();
  c.witness = optional_from_json<std::string>(j.at("witness"));
  c.seed = optional_from_json<std::uint64_t>(j.at("seed"));
  c.trials = j.at("trials").get<std::size_t>();
  return c;
}

Json face_row_to_json(const FaceRow& r) {
  return Json{{"id", r.face_id},
              {"dim", r.dim},
              {"vertices", vecs_to_json(r.vertices)},
              {"lattice_points", vecs_to_json(r.lattice_points)},
              {"in_coordinate_hyperplane", r.in_coordinate_hyperplane},
              {"face_polynomial", r.face_polynomial},
              {"chi", chi_to_json(r.chi)},
              {"certificate", certificate_to_json(r.certificate)},
              {"weight", vec_to_json(r.weight)},
              {"degree", r.degree},
              {"fiber", r.fiber ? class_to_json(*r.fiber) : Json(nullptr)},
              {"total_space_symbol", r.total_space_symbol}};
}

FaceRow face_row_from_json(const Json& j) {
  FaceRow r;
  r.face_id = j.at("id").get<std::size_t>();
  r.dim = j.at("dim").get<int>();
  r.vertices = vecs_from_json(j.at("vertices"));
  r.lattice_points = vecs_from_json(j.at("lattice_points"));
  r.in_coordinate_hyperplane = j.at("in_coordinate_hyperplane").get<bool>();
  r.face_polynomial = j.at("face_polynomial").get<std::string>();
  r.chi = chi_from_json(j.at("chi"));
  r.certificate = certificate_from_json(j.at("certificate"));
  r.weight = vec_from_json(j.at("weight"));
  r.degree = j.at("degree").get<std::int64_t>();
  if (!j.at("fiber").is_null()) r.fiber = class_from_json(j.at("fiber"));
  r.total_space_symbol = j.at("total_space_symbol").get<std::string>();
  return r;
}

Json checks_to_json(const std::vector<CheckResult>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"details", c.details}});
  return a;
}

std::vector<CheckResult> checks_from_json(const Json& j) {
  std::vector<CheckResult> out;
  for (const auto& c : j)
    out.push_back({c.at("name").get<std::string>(), parse_check_outcome(c.at("outcome").get<std::string>()),
                   c.at("details").get<std::string>()});
  return out;
}

void check_schema(const Json& j, const char* kind) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    throw ParseError("unsupported schema_version", 0);
  if (j.at("kind").get<std::string>() != kind) throw ParseError(std::string("expected kind ") + kind, 0);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_vecs(const std::vector<ExponentVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.to_string();
  return s;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

Json rational_to_json(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return Json{{"num", bigint_to_json(q.get_num())}, {"den", bigint_to_json(q.get_den())}};
}

Rational rational_from_json(const Json& j) {
  Rational q(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
  if (q.get_den() == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

Json class_to_json(const ClassExpr& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) {
    if (const auto* p = std::get_if<ProductKey>(&g)) {
      terms.push_back({{"kind", "product"}, {"orbit", p->orbit}, {"torus", p->torus}, {"lefschetz", p->lefschetz},
                       {"coeff", c}});
    } else {
      const auto& o = std::get<OpaqueKey>(g);
      terms.push_back({{"kind", "opaque"},
                       {"face_vertices", vecs_to_json(o.face_vertices)},
                       {"ambient_dim", o.ambient_dim},
                       {"face_polynomial", o.face_polynomial},
                       {"coeff", c}});
    }
  }
  return Json{{"terms", terms}, {"text", x.to_string()}};
}

ClassExpr class_from_json(const Json& j) {
  ClassExpr x;
  for (const auto& t : j.at("terms")) {
    const auto kind = t.at("kind").get<std::string>();
    const auto c = t.at("coeff").get<std::int64_t>();
    if (kind == "product") {
      x = x + ClassExpr::generator(ProductKey{t.at("orbit").get<std::int64_t>(), t.at("torus").get<std::int64_t>(),
                                              t.at("lefschetz").get<std::int64_t>()},
                                   c);
    } else if (kind == "opaque") {
      x = x + ClassExpr::generator(OpaqueKey{vecs_from_json(t.at("face_vertices")),
                                             t.at("ambient_dim").get<std::size_t>(),
                                             t.at("face_polynomial").get<std::string>()},
                                   c);
    } else {
      throw ParseError("unknown class term kind '" + kind + "'", 0);
    }
  }
  return x;
}

Json spectrum_to_json(const SpectrumResult& s) {
  Json terms = Json::array();
  for (const auto& [q, m] : s.value.terms()) terms.push_back({{"exponent", rational_to_json(q)}, {"mult", m}});
  Json out{{"terms", terms},
           {"text", s.value.to_string()},
           {"partial", s.partial},
           {"remainder", class_to_json(s.remainder)}};
  out["mass"] = s.partial ? Json(nullptr) : Json(mass(s.value));
  return out;
}

SpectrumResult spectrum_from_json(const Json& j) {
  SpectrumResult s;
  for (const auto& t : j.at("terms"))
    s.value = s.value + SpectrumPoly::term(rational_from_json(t.at("exponent")), t.at("mult").get<std::int64_t>());
  s.partial = j.at("partial").get<bool>();
  s.remainder = class_from_json(j.at("remainder"));
  return s;
}

Json report_to_json(const AnalysisReport& r) {
  Json faces = Json::array();
  for (const auto& f : r.faces) faces.push_back(face_row_to_json(f));
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "laurent-analysis"},
              {"variables", r.variables},
              {"polynomial", r.polynomial},
              {"options", options_to_json(r.chi_convention, r.calibrated_sign, r.assume_nondegenerate, r.seed)},
              {"polytope", polytope_summary_to_json(r.polytope)},
              {"faces", faces},
              {"nondegeneracy", to_string(r.overall_certificate)},
              {"gate", optional_to_json(r.gate)},
              {"s_infinity", r.s_infinity ? class_to_json(*r.s_infinity) : Json(nullptr)},
              {"spectrum", r.spectrum ? spectrum_to_json(*r.spectrum) : Json(nullptr)},
              {"checks", checks_to_json(r.checks)}};
}

AnalysisReport analysis_report_from_json(const Json& j) {
  check_schema(j, "laurent-analysis");
  AnalysisReport r;
  r.variables = j.at("variables").get<std::vector<std::string>>();
  r.polynomial = j.at("polynomial").get<std::string>();
  const auto& o = j.at("options");
  r.chi_convention = parse_chi_convention(o.at("chi_convention").get<std::string>());
  r.calibrated_sign = o.at("calibrated_sign").get<int>();
  r.assume_nondegenerate = o.at("assume_nondegenerate").get<bool>();
  r.seed = o.at("seed").get<std::uint64_t>();
  r.polytope = polytope_summary_from_json(j.at("polytope"));
  for (const auto& f : j.at("faces")) r.faces.push_back(face_row_from_json(f));
  r.overall_certificate = parse_certificate_status(j.at("nondegeneracy").get<std::string>());
  r.gate = optional_from_json<std::string>(j.at("gate"));
  if (!j.at("s_infinity").is_null()) r.s_infinity = class_from_json(j.at("s_infinity"));
  if (!j.at("spectrum").is_null()) r.spectrum = spectrum_from_json(j.at("spectrum"));
  r.checks = checks_from_json(j.at("checks"));
  return r;
}

Json report_to_json(const AffineReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"zeroed", s.zeroed},
                      {"variables", s.variables},
                      {"restriction", s.restriction},
                      {"status", s.status},
                      {"report", s.report ? report_to_json(*s.report) : Json(nullptr)}});
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "affine-analysis"},
              {"variables", r.variables},
              {"polynomial", r.polynomial},
              {"options", options_to_json(r.chi_convention, r.calibrated_sign, r.assume_nondegenerate, r.seed)},
              {"strata", strata},
              {"gate", optional_to_json(r.gate)},
              {"s_infinity", r.s_infinity ? class_to_json(*r.s_infinity) : Json(nullptr)},
              {"spectrum", r.spectrum ? spectrum_to_json(*r.spectrum) : Json(nullptr)},
              {"checks", checks_to_json(r.checks)}};
}

AffineReport affine_report_from_json(const Json& j) {
  check_schema(j, "affine-analysis");
  AffineReport r;
  r.variables = j.at("variables").get<std::vector<std::string>>();
  r.polynomial = j.at("polynomial").get<std::string>();
  const auto& o = j.at("options");
  r.chi_convention = parse_chi_convention(o.at("chi_convention").get<std::string>());
  r.calibrated_sign = o.at("calibrated_sign").get<int>();
  r.assume_nondegenerate = o.at("assume_nondegenerate").get<bool>();
  r.seed = o.at("seed").get<std::uint64_t>();
  for (const auto& s : j.at("strata")) {
    StratumEntry e;
    e.zeroed = s.at("zeroed").get<std::vector<std::size_t>>();
    e.variables = s.at("variables").get<std::vector<std::string>>();
    e.restriction = s.at("restriction").get<std::string>();
    e.status = s.at("status").get<std::string>();
    if (!s.at("report").is_null()) e.report = analysis_report_from_json(s.at("report"));
    r.strata.push_back(std::move(e));
  }
  r.gate = optional_from_json<std::string>(j.at("gate"));
  if (!j.at("s_infinity").is_null()) r.s_infinity = class_from_json(j.at("s_infinity"));
  if (!j.at("spectrum").is_null()) r.spectrum = spectrum_from_json(j.at("spectrum"));
  r.checks = checks_from_json(j.at("checks"));
  return r;
}

Json polytope_to_json(const LaurentPoly& f, const Polytope& p, const FaceLattice& lattice) {
  PolytopeSummary s;
  s.ambient_dim = p.ambient_dim();
  s.dim = p.dim();
  s.vertices = p.vertices();
  s.facets = p.facets();
  s.equations = p.equations();
  s.normalized_volume = normalized_volume(p);
  s.commode = is_commode(p);
  Json faces = Json::array();
  for (const auto& face : lattice.faces()) {
    faces.push_back({{"id", face.id},
                     {"dim", face.dim},
                     {"vertices", vecs_to_json(face.vertices)},
                     {"lattice_points", vecs_to_json(face.lattice_points)},
                     {"facet_indices", face.facet_indices},
                     {"contains_origin", face.contains_origin},
                     {"in_coordinate_hyperplane", face.in_coordinate_hyperplane},
                     {"superfaces", lattice.superfaces(face.id)}});
  }
  Json gamma = Json::array();
  for (const auto& face : faces_gamma(lattice)) gamma.push_back(face.id);
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "polytope"},
              {"variables", f.variables()},
              {"polynomial", f.to_string()},
              {"polytope", polytope_summary_to_json(s)},
              {"faces", faces},
              {"gamma", gamma}};
}

Json chi_table_to_json(const LaurentPoly& f, const Polytope& p, const FaceLattice& lattice, ChiConvention c) {
  Json rows = Json::array();
  for (const auto& face : faces_gamma(lattice)) {
    Json row = chi_to_json(chi(face, p, c));
    row["dim"] = face.dim;
    row["vertices"] = vecs_to_json(face.vertices);
    row["in_coordinate_hyperplane"] = face.in_coordinate_hyperplane;
    rows.push_back(row);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "chi"},
              {"variables", f.variables()},
              {"polynomial", f.to_string()},
              {"commode", is_commode(p)},
              {"chi_convention", to_string(c)},
              {"calibrated_sign", kCalibratedSign},
              {"rows", rows}};
}

Json certificates_to_json(const LaurentPoly& f, const FaceLattice& lattice, const NondegeneracyReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.certificates) {
    Json row = certificate_to_json(c);
    row["dim"] = lattice.face(c.face_id).dim;
    row["vertices"] = vecs_to_json(lattice.face(c.face_id).vertices);
    rows.push_back(row);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "nondegeneracy"},
              {"variables", f.variables()},
              {"polynomial", f.to_string()},
              {"overall", to_string(r.overall)},
              {"certificates", rows}};
}

Json calibration_to_json(const CalibrationResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"fixture", row.fixture},
                    {"variables", row.variables},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"pass", row.pass},
                    {"note", row.note}});
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "calibration"},
              {"chi_convention", to_string(r.convention)},
              {"calibrated_sign", kCalibratedSign},
              {"xy_sign", r.xy_sign},
              {"all_pass", r.all_pass()},
              {"fixtures", rows}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "polynomial: " << r.polynomial << "\n";
  os << "variables: ";
  for (std::size_t i = 0; i < r.variables.size(); ++i) os << (i ? "," : "") << r.variables[i];
  os << "\n";
  os << "chi-convention: " << to_string(r.chi_convention) << " (calibrated sign " << r.calibrated_sign << ")\n";
  os << "assume-nondegenerate: " << yes_no(r.assume_nondegenerate) << "\n";
  os << "seed: " << r.seed << "\n";
  const auto& p = r.polytope;
  os << "polytope: dim " << p.dim << " in Z^" << p.ambient_dim << ", commode " << yes_no(p.commode)
     << ", normalized volume " << to_string(p.normalized_volume) << "\n";
  os << "  vertices: " << join_vecs(p.vertices) << "\n";
  for (const auto& f : p.facets) os << "  facet: normal " << f.normal.to_string() << " offset " << f.offset << "\n";
  for (const auto& e : p.equations) os << "  equation: normal " << e.normal.to_string() << " value " << e.value << "\n";
  os << "nondegeneracy: " << to_string(r.overall_certificate) << "\n";
  for (const auto& f : r.faces) {
    os << "face " << f.face_id << ": dim " << f.dim << " vertices " << join_vecs(f.vertices) << "\n";
    os << "  f_gamma: " << f.face_polynomial << "\n";
    os << "  chi: closed " << opt_int(f.chi.chi_closed_form) << " cone " << f.chi.chi_cone << " used "
       << opt_int(f.chi.chi_used) << (f.in_coordinate_hyperplane ? " (coordinate hyperplane)" : "") << "\n";
    os << "  certificate: " << to_string(f.certificate.status) << " [" << f.certificate.detail << "]";
    if (f.certificate.witness) os << " witness: " << *f.certificate.witness;
    os << "\n";
    os << "  weight: " << f.weight.to_string() << " N " << f.degree << "\n";
    os << "  fiber: " << (f.fiber ? f.fiber->to_string() : std::string("-")) << "\n";
    os << "  total space: " << f.total_space_symbol << "\n";
  }
  if (r.gate) os << "gate: " << *r.gate << "\n";
  if (r.s_infinity) os << "S_infinity: " << r.s_infinity->to_string() << "\n";
  if (r.spectrum) {
    os << "spectrum: " << r.spectrum->value.to_string() << "\n";
    os << "spectrum-partial: " << yes_no(r.spectrum->partial) << "\n";
    if (r.spectrum->partial) os << "spectrum-remainder: " << r.spectrum->remainder.to_string() << "\n";
    else os << "mass: " << mass(r.spectrum->value) << "\n";
  }
  for (const auto& c : r.checks) os << "check " << c.name << ": " << to_string(c.outcome) << " (" << c.details << ")\n";
  return os.str();
}

std::string render_text(const AffineReport& r) {
  std::ostringstream os;
  os << "polynomial: " << r.polynomial << " (affine)\n";
  os << "variables: ";
  for (std::size_t i = 0; i < r.variables.size(); ++i) os << (i ? "," : "") << r.variables[i];
  os << "\n";
  os << "chi-convention: " << to_string(r.chi_convention) << " (calibrated sign " << r.calibrated_sign << ")\n";
  for (const auto& s : r.strata) {
    os << "stratum zeroed {";
    for (std::size_t i = 0; i < s.zeroed.size(); ++i) os << (i ? "," : "") << r.variables[s.zeroed[i]];
    os << "}: " << s.restriction << " [" << s.status << "]\n";
    if (s.report) {
      std::istringstream sub(render_text(*s.report));
      for (std::string line; std::getline(sub, line);) os << "  | " << line << "\n";
    }
  }
  if (r.gate) os << "gate: " << *r.gate << "\n";
  if (r.s_infinity) os << "S_infinity: " << r.s_infinity->to_string() << "\n";
  if (r.spectrum) {
    os << "spectrum: " << r.spectrum->value.to_string() << "\n";
    os << "spectrum-partial: " << yes_no(r.spectrum->partial) << "\n";
    if (!r.spectrum->partial) os << "mass: " << mass(r.spectrum->value) << "\n";
  }
  for (const auto& c : r.checks) os << "check " << c.name << ": " << to_string(c.outcome) << " (" << c.details << ")\n";
  return os.str();
}

std::string render_polytope_text(const Polytope& p, const FaceLattice& lattice) {
  std::ostringstream os;
  os << "polytope: dim " << p.dim() << " in Z^" << p.ambient_dim() << ", commode " << yes_no(is_commode(p))
     << ", normalized volume " << to_string(normalized_volume(p)) << "\n";
  os << "vertices: " << join_vecs(p.vertices()) << "\n";
  for (const auto& f : p.facets()) os << "facet: normal " << f.normal.to_string() << " offset " << f.offset << "\n";
  for (const auto& e : p.equations()) os << "equation: normal " << e.normal.to_string() << " value " << e.value << "\n";
  for (const auto& face : lattice.faces()) {
    os << "face " << face.id << ": dim " << face.dim << " vertices " << join_vecs(face.vertices);
    if (face.dim >= 0 && !face.contains_origin) os << " [gamma]";
    os << "\n";
  }
  return os.str();
}

std::string render_chi_text(const Polytope& p, const FaceLattice& lattice, ChiConvention c) {
  std::ostringstream os;
  os << "commode: " << yes_no(is_commode(p)) << ", chi-convention: " << to_string(c) << "\n";
  for (const auto& face : faces_gamma(lattice)) {
    const ChiReport r = chi(face, p, c);
    os << "face " << face.id << ": dim " << face.dim << " vertices " << join_vecs(face.vertices) << " closed "
       << opt_int(r.chi_closed_form) << " cone " << r.chi_cone << " used " << opt_int(r.chi_used)
       << (r.disagreement() ? " (disagreement)" : "") << "\n";
  }
  return os.str();
}

std::string render_certificates_text(const FaceLattice& lattice, const NondegeneracyReport& r) {
  std::ostringstream os;
  os << "overall: " << to_string(r.overall) << "\n";
  for (const auto& c : r.certificates) {
    const Face& face = lattice.face(c.face_id);
    os << "face " << c.face_id << ": dim " << face.dim << " vertices " << join_vecs(face.vertices) << " "
       << to_string(c.status) << " [" << c.detail << "]";
    if (c.witness) os << " witness: " << *c.witness;
    os << "\n";
  }
  return os.str();
}

std::string render_text(const CalibrationResult& r) {
  std::ostringstream os;
  os << "chi-convention: " << to_string(r.convention) << " (calibrated sign " << kCalibratedSign << ")\n";
  for (const auto& row : r.rows) {
    os << (row.pass ? "PASS " : "FAIL ") << row.fixture << ": expected " << row.expected << ", computed "
       << row.computed;
    if (!row.note.empty()) os << " (" << row.note << ")";
    os << "\n";
  }
  os << "recorded xy sign: " << r.xy_sign << "\n";
  return os.str();
}

}  // namespace milnor
