/*
 * spectrum.hpp
 * ------------
 * Elements of Z[Q] (finite sums of t^q with integer multiplicities) and the
 * Hodge-spectrum realization of class expressions, normalized by
 *
 *     Sp(pt) = 1,  Sp(L) = t,  Sp(T^r) = (t - 1)^r,
 *     Sp(O_e) = 1 + t^(1/e) + ... + t^((e-1)/e),
 *
 * extended multiplicatively over canonical products and linearly over sums.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "milnor/arith.hpp"
#include "milnor/motivic.hpp"

namespace milnor {

class SpectrumPoly {
 public:
  using TermMap = std::map<Rational, std::int64_t>;

  SpectrumPoly() = default;
  /// m * t^q
  static SpectrumPoly term(const Rational& q, std::int64_t m = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t multiplicity(const Rational& q) const;

  SpectrumPoly operator+(const SpectrumPoly& o) const;
  SpectrumPoly operator-(const SpectrumPoly& o) const;
  SpectrumPoly operator-() const;
  SpectrumPoly operator*(std::int64_t k) const;
  SpectrumPoly operator*(const SpectrumPoly& o) const;

  /// Terms `c*t^(p/q)` in ascending exponent order; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const SpectrumPoly&, const SpectrumPoly&) = default;

 private:
  void add(const Rational& q, std::int64_t m);
  TermMap terms_;
};

/// Inverse of SpectrumPoly::to_string.
SpectrumPoly parse_spectrum(std::string_view text);

struct SpectrumResult {
  SpectrumPoly value;
  /// Opaque generators excluded from `value`.
  ClassExpr remainder;
  bool partial = false;
  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

SpectrumPoly sp_of_generator(const ProductKey& g);
SpectrumResult sp_of_class(const ClassExpr& x);

/// Evaluation at t = 1.
std::int64_t mass(const SpectrumPoly& s);
/// Throws DomainError when the spectrum is partial.
std::int64_t mass(const SpectrumResult& s);

/// chi_c specialization: pt -> 1, T^r -> 0 (r >= 1), L -> 1, O_e -> e.
/// Throws DomainError on opaque generators.
std::int64_t euler_specialization(const ClassExpr& x);

}  // namespace milnor
