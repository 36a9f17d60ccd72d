/*
 * cone.hpp
 * --------
 * Rational polyhedral cones, compactly supported Euler characteristics by
 * triangulation, and the per-face cone data of a Newton polyhedron at
 * infinity: the cone C of weights whose maximizing face is exactly the given
 * face, its chi_c, lattice sample weights, and the face degree N = (w | a).
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/laurent.hpp"
#include "milnor/polytope.hpp"

namespace milnor {

/// K + L where K = cone(rays) is pointed and L = span(lineality) meets
/// span(K) only in 0. Each facet of K (a hyperplane through 0) is flagged
/// open (excluded) or closed; the relatively open cone has every facet open.
class RationalCone {
 public:
  static RationalCone relatively_open(std::size_t ambient_dim, std::vector<ExponentVector> rays,
                                      std::vector<ExponentVector> lineality);
  static RationalCone closed(std::size_t ambient_dim, std::vector<ExponentVector> rays,
                             std::vector<ExponentVector> lineality);
  /// `open` is indexed like facets(); throws DomainError on size mismatch.
  RationalCone with_open_facets(std::vector<bool> open) const;

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<ExponentVector>& rays() const noexcept { return rays_; }
  const std::vector<ExponentVector>& lineality() const noexcept { return lineality_; }
  /// Facets of the pointed part, inner normals inside span(rays).
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<bool>& open_facets() const noexcept { return open_; }
  bool is_relatively_open() const;
  std::size_t dim() const noexcept { return pointed_dim_ + lineality_.size(); }
  std::size_t pointed_dim() const noexcept { return pointed_dim_; }

  bool contains(const ExponentVector& w) const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

 private:
  RationalCone(std::size_t ambient_dim, std::vector<ExponentVector> rays, std::vector<ExponentVector> lineality,
               bool open);

  std::size_t ambient_dim_ = 0;
  std::size_t pointed_dim_ = 0;
  std::vector<ExponentVector> rays_;
  std::vector<ExponentVector> lineality_;
  std::vector<Facet> facets_;
  std::vector<bool> open_;
};

/// The relatively open simplicial cells (as sorted ray-index subsets, the
/// empty set being the apex) of a pulling triangulation of the pointed part.
std::vector<std::vector<std::size_t>> cone_cells(const RationalCone& c);

/// chi_c of the cone: sum of (-1)^dim over the included relatively open cells
/// of a triangulation, times (-1)^dim(L).
int euler_compact(const RationalCone& c);

/// Relatively open cone of weights w whose maximizing face on `p` is exactly
/// `face`. Throws DomainError if the face contains the origin.
RationalCone normal_cone(const Face& face, const Polytope& p);

/// Exact membership test for the relative interior of the normal cone.
bool in_normal_cone(const Face& face, const Polytope& p, const ExponentVector& w);

/// 0 on faces in a coordinate hyperplane, (-1)^(d - dim) otherwise.
/// Throws DomainError if `p` is not commode.
int chi_commode(const Face& face, const Polytope& p);

enum class ChiConvention { CommodeOnly, ConeChi, Calibrated };

/// Global sign applied to chi_c on non-commode input by the "calibrated"
/// convention. Pinned by the calibration fixtures f = x, f = x^2.
inline constexpr int kCalibratedSign = +1;

std::string to_string(ChiConvention c);
ChiConvention parse_chi_convention(std::string_view s);

struct ChiReport {
  std::size_t face_id = 0;
  std::optional<int> chi_closed_form;  // empty: not applicable (non-commode)
  int chi_cone = 0;
  std::optional<int> chi_used;  // empty: convention does not apply
  ChiConvention convention = ChiConvention::ConeChi;

  bool disagreement() const { return chi_closed_form && *chi_closed_form != chi_cone; }
  friend bool operator==(const ChiReport&, const ChiReport&) = default;
};

ChiReport chi(const Face& face, const Polytope& p, ChiConvention convention);

/// Lattice point of the relative interior of the normal cone with minimal
/// infinity norm, lexicographically smallest among those.
ExponentVector sample_weight(const Face& face, const Polytope& p);

/// A second interior lattice weight distinct from `first`: the smallest one
/// not parallel to it, or 2*first when the cone is a ray.
ExponentVector second_sample_weight(const Face& face, const Polytope& p, const ExponentVector& first);

/// N = (w | a) for a on the face. Throws DomainError when the product varies
/// across the face or is not positive.
std::int64_t face_degree(const Face& face, const ExponentVector& w);

}  // namespace milnor
