/*
 * upoly.hpp
 * ---------
 * Dense univariate polynomials over Q, used by the non-degeneracy checks:
 * Euclidean division, gcd, extended gcd, derivative, squarefree part and
 * interpolation. Coefficients are stored low degree first with no trailing
 * zeros; the zero polynomial has no coefficients.
 */
#pragma once

#include <string>
#include <vector>

#include "milnor/arith.hpp"

namespace milnor {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  /// c * u^k
  static UPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  UPoly operator-() const;

  /// Euclidean division; throws DomainError on a zero divisor.
  void divmod(const UPoly& divisor, UPoly& quotient, UPoly& remainder) const;
  UPoly operator/(const UPoly& o) const;
  UPoly operator%(const UPoly& o) const;

  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(const Rational& x) const;
  /// Lowest k with a nonzero coefficient (multiplicity of the root 0).
  std::size_t low_degree() const;
  /// Divides out u^low_degree().
  UPoly without_zero_root() const;

  std::string to_string(const std::string& var = "u") const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// s, t with s*a + t*b = gcd(a, b) (monic).
struct ExtendedGcd {
  UPoly gcd, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// Unique polynomial of degree < xs.size() through the points (xs distinct).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace milnor
