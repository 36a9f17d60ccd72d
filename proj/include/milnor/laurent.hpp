/*
 * laurent.hpp
 * -----------
 * Exact multivariate Laurent polynomials with rational coefficients.
 *
 * A LaurentPoly is an ordered list of variable names plus a map from integer
 * exponent vectors to nonzero rational coefficients. Terms are kept in
 * graded-lexicographic order (higher total degree first, then lexicographically
 * larger exponent first) so that formatting is deterministic, e.g.
 *
 *     x + y + x^-1*y^-1    ->  {(1,0): 1, (0,1): 1, (-1,-1): 1}
 */
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "milnor/arith.hpp"

namespace milnor {

/// Integer point of Z^d. Used both for monomial exponents and for weights.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : entries_(dim, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  /// Sum of entries (total degree).
  std::int64_t degree() const;
  /// gcd of the entries; 0 for the zero vector.
  std::int64_t content() const;
  std::int64_t dot(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t k) const;

  std::string to_string() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Graded-lex order: larger total degree first, then lexicographically larger.
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexGreater>;

  /// Zero polynomial in the given variables. Names must be distinct
  /// identifiers and there must be at least one.
  explicit LaurentPoly(std::vector<std::string> variables);
  LaurentPoly(std::vector<std::string> variables, TermMap terms);

  std::size_t dimension() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;
  Rational coefficient(const ExponentVector& exponent) const;

  /// Adds c*x^exponent, dropping the term if the sum cancels.
  void add_term(const ExponentVector& exponent, const Rational& c);

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Parses `text` over the ordered variable list. Accepted grammar:
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := item ('*'? item)*         (juxtaposition only after a coefficient)
///   item   := coeff | var ['^' int] | var '^(' int ')'
///   coeff  := int ['/' int]
/// Throws ParseError / UnknownVariableError. The zero polynomial parses.
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& variables);

/// Splits "x,y,z" into names; rejects empty or duplicate names.
std::vector<std::string> parse_variable_list(std::string_view list);

/// Exponents carrying a nonzero coefficient.
std::set<ExponentVector> support(const LaurentPoly& f);

/// Sum of the terms of f whose exponent lies in `points`.
LaurentPoly restrict_to_points(const LaurentPoly& f, std::span<const ExponentVector> points);

struct ConstantZero {
  friend bool operator==(const ConstantZero&, const ConstantZero&) = default;
};
struct ConstantValue {
  Rational value;
  friend bool operator==(const ConstantValue&, const ConstantValue&) = default;
};
using StratumRestriction = std::variant<LaurentPoly, ConstantZero, ConstantValue>;

/// Substitutes 0 for the variables at `zeroed` (indices). Terms with positive
/// exponent in a zeroed variable vanish; the survivors are re-expressed over
/// the remaining variables. Throws DomainError if some term has a negative
/// exponent in a zeroed variable.
StratumRestriction stratum_restriction(const LaurentPoly& f, const std::vector<std::size_t>& zeroed);

}  // namespace milnor
