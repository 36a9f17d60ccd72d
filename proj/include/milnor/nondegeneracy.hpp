/*
 * nondegeneracy.hpp
 * -----------------
 * Kouchnirenko non-degeneracy at infinity: for every face gamma of the Newton
 * polyhedron not containing the origin, f_gamma must have no singular point
 * on its zero set inside the torus.
 *
 *   vertices   exact (a monomial has no zeros on the torus)
 *   edges      exact (the reduced univariate polynomial is squarefree)
 *   2-faces    exact (resultant elimination plus gcds over Q[y1]/(m))
 *   higher     seeded randomized search; never certified exactly
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/laurent.hpp"
#include "milnor/polytope.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

enum class CertificateStatus { ExactNondegenerate, ExactDegenerate, ProbablyNondegenerate, Unknown };

std::string to_string(CertificateStatus s);
CertificateStatus parse_certificate_status(const std::string& s);

struct Certificate {
  std::size_t face_id = 0;
  CertificateStatus status = CertificateStatus::Unknown;
  /// Method used, and for randomized checks the trial count.
  std::string detail;
  /// For degenerate faces: the repeated factor / common root description.
  std::optional<std::string> witness;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NondegeneracyOptions {
  std::uint64_t seed = 20091201;
  std::size_t trials = 64;
};

/// f_gamma written in face coordinates: f_gamma = x^base * g(y) with
/// y_i = x^{direction_basis[i]}, g a polynomial not divisible by any y_i.
struct FaceCoordinates {
  std::size_t dim = 0;
  std::vector<std::pair<std::vector<std::int64_t>, Rational>> terms;
};
FaceCoordinates face_coordinates(const LaurentPoly& f, const Face& face);

Certificate check_face(const LaurentPoly& f, const Face& face, const NondegeneracyOptions& options = {});

struct NondegeneracyReport {
  std::vector<Certificate> certificates;
  CertificateStatus overall = CertificateStatus::ExactNondegenerate;
};

/// One certificate per face not containing the origin; overall is the
/// weakest status (ExactDegenerate < Unknown < Probably < Exact).
NondegeneracyReport check_all(const LaurentPoly& f, const FaceLattice& lattice,
                              const NondegeneracyOptions& options = {});

/// Univariate reduction along an edge: f_gamma = x^a0 * q(x^v), q(0) != 0.
UPoly edge_polynomial(const LaurentPoly& f, const Face& edge);

/// Exact test for a bivariate polynomial g (coefficients indexed
/// [i][j] for y1^i y2^j): is there a point of (C*)^2 with g = g_y1 = g_y2 = 0?
/// Returns a witness description when there is.
std::optional<std::string> bivariate_torus_singularity(const std::vector<std::vector<Rational>>& g);

}  // namespace milnor
