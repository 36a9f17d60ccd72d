/*
 * arith.hpp
 * ---------
 * Exact scalar types shared by every module: arbitrary-precision integers and
 * rationals (GMP), overflow-checked 64-bit exponent arithmetic, and the error
 * hierarchy thrown by the library.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace milnor {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit exponent arithmetic left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Zero or constant polynomial handed to an analysis entry point.
class ConstantInputError : public Error {
 public:
  using Error::Error;
};

/// A precondition on geometric input does not hold (face not in the
/// polytope, weight outside the cone, Laurent input in affine mode, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

inline std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw OverflowError("value " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

/// Non-negative gcd; gcd(0, 0) = 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), BigInt(static_cast<long>(a)).get_mpz_t(),
          BigInt(static_cast<long>(b)).get_mpz_t());
  return to_int64(g);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace milnor
