/*
 * pipeline.hpp
 * ------------
 * Full analysis of a Laurent polynomial (polytope, faces, chi, certificates,
 * fiber classes, S_infinity, spectrum, consistency checks) and of an affine
 * polynomial through its 2^d coordinate strata.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/cone.hpp"
#include "milnor/laurent.hpp"
#include "milnor/motivic.hpp"
#include "milnor/nondegeneracy.hpp"
#include "milnor/polytope.hpp"
#include "milnor/spectrum.hpp"

namespace milnor {

inline constexpr std::uint64_t kDefaultSeed = 20091201;

struct AnalysisOptions {
  ChiConvention chi_convention = ChiConvention::ConeChi;
  bool assume_nondegenerate = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 64;
};

struct PolytopeSummary {
  std::size_t ambient_dim = 0;
  int dim = 0;
  std::vector<ExponentVector> vertices;
  std::vector<Facet> facets;
  std::vector<Equation> equations;
  Rational normalized_volume;
  bool commode = false;
  friend bool operator==(const PolytopeSummary&, const PolytopeSummary&) = default;
};

struct FaceRow {
  std::size_t face_id = 0;
  int dim = 0;
  std::vector<ExponentVector> vertices;
  std::vector<ExponentVector> lattice_points;
  bool in_coordinate_hyperplane = false;
  std::string face_polynomial;
  ChiReport chi;
  Certificate certificate;
  ExponentVector weight;
  std::int64_t degree = 0;
  /// Empty when the face is degenerate and no override was given.
  std::optional<ClassExpr> fiber;
  std::string total_space_symbol;
  friend bool operator==(const FaceRow&, const FaceRow&) = default;
};

enum class CheckOutcome { Pass, Fail, Skipped };
std::string to_string(CheckOutcome o);
CheckOutcome parse_check_outcome(const std::string& s);

struct CheckResult {
  std::string name;
  CheckOutcome outcome = CheckOutcome::Skipped;
  std::string details;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct AnalysisReport {
  std::vector<std::string> variables;
  std::string polynomial;  // canonical rendering of the input
  PolytopeSummary polytope;
  std::vector<FaceRow> faces;
  CertificateStatus overall_certificate = CertificateStatus::ExactNondegenerate;
  /// Set when the spectrum is withheld.
  std::optional<std::string> gate;
  std::optional<ClassExpr> s_infinity;
  std::optional<SpectrumResult> spectrum;
  std::vector<CheckResult> checks;
  ChiConvention chi_convention = ChiConvention::ConeChi;
  int calibrated_sign = kCalibratedSign;
  bool assume_nondegenerate = false;
  std::uint64_t seed = kDefaultSeed;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Throws ConstantInputError on constant input. A degenerate face does not
/// throw; it sets `gate` and leaves the spectrum empty.
AnalysisReport analyze_laurent(const LaurentPoly& f, const AnalysisOptions& options = {});

std::vector<CheckResult> consistency_suite(const AnalysisReport& report, const LaurentPoly& f);

struct StratumEntry {
  /// Indices of the variables set to zero.
  std::vector<std::size_t> zeroed;
  std::vector<std::string> variables;  // surviving variables
  std::string restriction;
  /// "analyzed", "skipped-constant-zero" or "skipped-constant".
  std::string status;
  std::optional<AnalysisReport> report;
  friend bool operator==(const StratumEntry&, const StratumEntry&) = default;
};

struct AffineReport {
  std::vector<std::string> variables;
  std::string polynomial;
  std::vector<StratumEntry> strata;
  std::optional<std::string> gate;
  std::optional<ClassExpr> s_infinity;
  std::optional<SpectrumResult> spectrum;
  std::vector<CheckResult> checks;
  ChiConvention chi_convention = ChiConvention::ConeChi;
  int calibrated_sign = kCalibratedSign;
  bool assume_nondegenerate = false;
  std::uint64_t seed = kDefaultSeed;
  friend bool operator==(const AffineReport&, const AffineReport&) = default;
};

/// Strata are ordered by the bitmask of zeroed variables (bit i = variable
/// i). Throws DomainError on negative exponents and ConstantInputError when
/// every stratum restriction is constant.
AffineReport analyze_affine(const LaurentPoly& f, const AnalysisOptions& options = {});

struct CalibrationRow {
  std::string fixture;
  std::vector<std::string> variables;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;
  friend bool operator==(const CalibrationRow&, const CalibrationRow&) = default;
};

struct CalibrationResult {
  std::vector<CalibrationRow> rows;
  ChiConvention convention = ChiConvention::Calibrated;
  /// Sign s with sp(xy) = s * (t - 1) under the convention; 0 if neither.
  int xy_sign = 0;
  bool all_pass() const;
};

CalibrationResult calibration_suite(ChiConvention convention = ChiConvention::Calibrated);

}  // namespace milnor
