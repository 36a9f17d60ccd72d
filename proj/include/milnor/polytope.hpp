/*
 * polytope.hpp
 * ------------
 * Exact lattice polytopes: convex hull by brute-force facet search, the full
 * face lattice with per-face lattice data, pulling triangulations and
 * normalized volume. The Newton polyhedron at infinity of f is the hull of
 * supp(f) together with the origin.
 *
 * Polytopes may be lower-dimensional. Facets are then taken relative to the
 * affine hull and their normals are chosen inside its direction space; the
 * hull itself is cut out by `equations`.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/arith.hpp"
#include "milnor/laurent.hpp"

namespace milnor {

/// Supporting half-space {x : normal . x >= offset}, normal primitive.
struct Facet {
  ExponentVector normal;
  std::int64_t offset = 0;

  std::int64_t slack(const ExponentVector& x) const { return checked::sub(normal.dot(x), offset); }
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Affine equation {x : normal . x == value}.
struct Equation {
  ExponentVector normal;
  std::int64_t value = 0;
  friend bool operator==(const Equation&, const Equation&) = default;
};

class Polytope {
 public:
  /// Exact convex hull of `points` (deduplicated). Throws DomainError on an
  /// empty set or mixed dimensions.
  static Polytope hull(std::vector<ExponentVector> points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the affine hull; -1 never occurs (hull is nonempty).
  std::size_t dim() const noexcept { return dim_; }
  bool full_dimensional() const noexcept { return dim_ == ambient_dim_; }

  /// Input points, sorted and deduplicated.
  const std::vector<ExponentVector>& points() const noexcept { return points_; }
  /// Extreme points, sorted lexicographically.
  const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }

  bool contains(const ExponentVector& x) const;
  /// Strictly inside every facet and on the affine hull.
  bool relative_interior_contains(const ExponentVector& x) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<ExponentVector> points_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
};

struct Face {
  std::size_t id = 0;
  /// -1 for the empty face.
  int dim = -1;
  /// Indices into Polytope::vertices().
  std::vector<std::size_t> vertex_indices;
  std::vector<ExponentVector> vertices;
  /// Input points of the polytope lying on the face (for a Newton polytope:
  /// supp(f) on the face, plus the origin if it lies there).
  std::vector<ExponentVector> lattice_points;
  /// Indices of the facets whose hyperplanes contain the face.
  std::vector<std::size_t> facet_indices;
  bool contains_origin = false;
  /// All vertices share a zero coordinate in the same position.
  bool in_coordinate_hyperplane = false;
  /// Saturated basis of the direction lattice (Hermite reduced).
  std::vector<ExponentVector> direction_basis;
  std::optional<ExponentVector> base_point;

  friend bool operator==(const Face&, const Face&) = default;
};

class FaceLattice {
 public:
  /// All faces: the empty face (id 0), proper faces, and the polytope itself
  /// (last id). Ordered by dimension, then by vertex coordinates.
  static FaceLattice build(const Polytope& p);

  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  std::size_t size() const noexcept { return faces_.size(); }
  /// Ids of the faces strictly containing `id`.
  const std::vector<std::size_t>& superfaces(std::size_t id) const { return superfaces_.at(id); }
  /// True when face a is contained in face b (a == b allowed).
  bool is_subface(std::size_t a, std::size_t b) const;
  /// Faces of dimension dim(id) - 1 contained in `id`.
  std::vector<std::size_t> facets_of(std::size_t id) const;
  std::size_t polytope_id() const noexcept { return faces_.size() - 1; }
  std::optional<std::size_t> find_by_vertices(const std::vector<ExponentVector>& vertices) const;

  /// Alternating count of all faces including the polytope and the empty face.
  long euler_poincare_sum() const;

  friend bool operator==(const FaceLattice&, const FaceLattice&) = default;

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> superfaces_;
};

/// Pulling triangulation of face `face_id`: vertices are pulled in index
/// order, except `first` (if given) which is pulled before all others.
/// Each simplex is a list of vertex indices of size dim + 1.
std::vector<std::vector<std::size_t>> pulling_triangulation(const FaceLattice& lattice, std::size_t face_id,
                                                            std::optional<std::size_t> first = std::nullopt);

/// Hull of supp(f) and the origin. Throws ConstantInputError for constant f.
Polytope newton_polytope_at_infinity(const LaurentPoly& f);

FaceLattice face_lattice(const Polytope& p);

/// Faces not containing the origin (never the empty face).
std::vector<Face> faces_gamma(const FaceLattice& lattice);

/// Origin in the interior: full-dimensional and strictly inside every facet.
bool is_commode(const Polytope& p);

/// d! times the Euclidean volume; 0 when not full-dimensional.
Rational normalized_volume(const Polytope& p);

/// f_gamma: the terms of f whose exponents lie on the face. Throws
/// DomainError if the face is not a face of f's Newton polytope at infinity.
LaurentPoly face_restriction(const LaurentPoly& f, const Polytope& newton, const Face& face);

}  // namespace milnor
