/*
 * motivic.hpp
 * -----------
 * Class expressions in an equivariant Grothendieck ring over G_m: integer
 * combinations of canonical products
 *
 *     O_e * T^r * L^k    (free orbit of the cyclic group of order e,
 *                         r-dimensional torus with trivialized action,
 *                         k-th power of the Lefschetz class)
 *
 * plus opaque generators standing for fiber classes of faces of dimension
 * >= 2 that are not reduced further. The point class is O_1 * T^0 * L^0.
 *
 * The reducers compute [f_gamma^{-1}(1), mu_N] for vertices and edges from
 * integer data only (contents, lattice lengths, squarefree degrees).
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "milnor/laurent.hpp"
#include "milnor/polytope.hpp"

namespace milnor {

struct ProductKey {
  std::int64_t orbit = 1;
  std::int64_t torus = 0;
  std::int64_t lefschetz = 0;
  friend auto operator<=>(const ProductKey&, const ProductKey&) = default;
};

/// Unreduced class of {f_gamma = 1} in G_m^d. Identified by the face and
/// f_gamma only; the weight used to build it does not enter the class.
struct OpaqueKey {
  std::vector<ExponentVector> face_vertices;
  std::size_t ambient_dim = 0;
  std::string face_polynomial;
  friend auto operator<=>(const OpaqueKey&, const OpaqueKey&) = default;
};

using GeneratorKey = std::variant<ProductKey, OpaqueKey>;

std::string to_string(const GeneratorKey& g);

class ClassExpr {
 public:
  using TermMap = std::map<GeneratorKey, std::int64_t>;

  ClassExpr() = default;
  static ClassExpr generator(GeneratorKey g, std::int64_t coeff = 1);
  static ClassExpr point() { return generator(ProductKey{}); }
  static ClassExpr torus(std::int64_t r) { return generator(ProductKey{1, r, 0}); }
  static ClassExpr orbit(std::int64_t e) { return generator(ProductKey{e, 0, 0}); }
  static ClassExpr lefschetz(std::int64_t k) { return generator(ProductKey{1, 0, k}); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_opaque() const;
  std::int64_t coefficient(const GeneratorKey& g) const;

  ClassExpr operator+(const ClassExpr& o) const;
  ClassExpr operator-(const ClassExpr& o) const;
  ClassExpr operator-() const;
  ClassExpr operator*(std::int64_t k) const;
  /// Product of canonical generators: orbits of orders e, e' multiply only
  /// when one of them is 1; torus and Lefschetz exponents add. Throws
  /// DomainError for orbit-by-orbit or opaque products.
  ClassExpr operator*(const ClassExpr& o) const;

  /// Split into the product part and the opaque part.
  ClassExpr product_part() const;
  ClassExpr opaque_part() const;

  std::string to_string() const;

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

 private:
  void add(const GeneratorKey& g, std::int64_t c);
  TermMap terms_;
};

/// Bypass of the non-degeneracy hypothesis for edges with repeated roots.
class DegenerateFaceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Class of {c x^a = 1} in G_m^d with its mu_N action: O_e * T^(d-1), e the
/// content of a. `f_gamma` must be a single nonconstant term; N = (w|a) > 0.
ClassExpr reduce_vertex_fiber(const LaurentPoly& f_gamma, const ExponentVector& weight);

struct EdgeData {
  std::int64_t lattice_length = 0;   // degree of q
  std::int64_t distinct_roots = 0;   // degree of the squarefree part of q
  std::int64_t offset_content = 0;   // e': content of the base point modulo the edge direction
};
EdgeData edge_data(const LaurentPoly& f, const Face& edge);

/// Class of {f_gamma = 1} for an edge: (T^1 - l*pt) * O_e' * T^(d-2).
/// Throws DegenerateFaceError when q has repeated roots unless
/// allow_degenerate, in which case l counts distinct roots.
ClassExpr reduce_edge_fiber(const LaurentPoly& f, const Face& edge, const ExponentVector& weight,
                            bool allow_degenerate = false);

/// Dispatch on face dimension; faces of dimension >= 2 yield one opaque
/// generator.
ClassExpr fiber_class(const LaurentPoly& f, const Face& face, const ExponentVector& weight,
                      bool allow_degenerate = false);

struct FaceContribution {
  std::size_t face_id = 0;
  int chi = 0;
  ClassExpr fiber;
  /// Unreduced symbol [G_m^d \ f_gamma^{-1}(0), f_gamma^{-1}, sigma(gamma)].
  std::string total_space_symbol;
};

/// -sum chi * fiber.
ClassExpr assemble_s_infinity(const std::vector<FaceContribution>& faces);

/// Formal symbol for the report, e.g.
/// "[G_m^2 \ {x + y = 0}, (x + y)^-1, sigma(w=(1,1))]".
std::string total_space_symbol(const LaurentPoly& f_gamma, const ExponentVector& weight);

}  // namespace milnor
