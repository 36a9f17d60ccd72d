/*
 * json_io.hpp
 * -----------
 * Stable JSON layout of reports (schema/report.schema.json) and a plain text
 * rendering carrying the same numbers.
 *
 * Layout rules: rationals are {"num", "den"} with integer members, or decimal
 * strings when they exceed 64 bits; exponent vectors are integer arrays;
 * object keys are emitted in sorted order so equal reports dump to equal
 * bytes.
 */
#pragma once

#include <string>

#include "json.hpp"
#include "milnor/pipeline.hpp"

namespace milnor {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json class_to_json(const ClassExpr& x);
ClassExpr class_from_json(const Json& j);

Json spectrum_to_json(const SpectrumResult& s);
SpectrumResult spectrum_from_json(const Json& j);

Json report_to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const Json& j);

Json report_to_json(const AffineReport& r);
AffineReport affine_report_from_json(const Json& j);

/// Polytope, its face lattice and the faces of Gamma.
Json polytope_to_json(const LaurentPoly& f, const Polytope& p, const FaceLattice& lattice);
Json chi_table_to_json(const LaurentPoly& f, const Polytope& p, const FaceLattice& lattice, ChiConvention c);
Json certificates_to_json(const LaurentPoly& f, const FaceLattice& lattice, const NondegeneracyReport& r);
Json calibration_to_json(const CalibrationResult& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

std::string render_text(const AnalysisReport& r);
std::string render_text(const AffineReport& r);
std::string render_polytope_text(const Polytope& p, const FaceLattice& lattice);
std::string render_chi_text(const Polytope& p, const FaceLattice& lattice, ChiConvention c);
std::string render_certificates_text(const FaceLattice& lattice, const NondegeneracyReport& r);
std::string render_text(const CalibrationResult& r);

}  // namespace milnor
