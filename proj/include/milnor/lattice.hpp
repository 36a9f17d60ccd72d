/*
 * lattice.hpp
 * -----------
 * Integer linear algebra on small lattices: Hermite normal form with
 * unimodular transforms, integer kernels, saturation, unimodular completion,
 * and Smith invariants. Everything is exact (GMP integers internally).
 */
#pragma once

#include <vector>

#include "milnor/arith.hpp"
#include "milnor/laurent.hpp"

namespace milnor {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix to_matrix(const std::vector<ExponentVector>& rows, std::size_t cols);
std::vector<ExponentVector> from_matrix(const IntMatrix& m);

struct EchelonForm {
  IntMatrix echelon;    // m x n, Hermite normal form (zero rows last)
  IntMatrix transform;  // m x m unimodular, transform * input = echelon
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: positive pivots, entries above each pivot
/// reduced into [0, pivot).
EchelonForm hermite_normal_form(const IntMatrix& m);

std::size_t rank(const std::vector<ExponentVector>& vectors, std::size_t dim);

/// Basis of {x in Z^dim : r.x = 0 for every row r}. The result is saturated.
std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& rows, std::size_t dim);

/// Hermite-reduced basis of span_R(generators) intersected with Z^dim.
std::vector<ExponentVector> saturated_basis(const std::vector<ExponentVector>& generators, std::size_t dim);

/// d x d unimodular matrix whose first k rows are `basis` (which must be a
/// saturated basis), together with its integer inverse.
struct UnimodularFrame {
  IntMatrix matrix;
  IntMatrix inverse;
};
UnimodularFrame complete_to_unimodular(const std::vector<ExponentVector>& basis, std::size_t dim);

/// Coordinates c with x = sum_i c_i * frame.matrix[i] (row combination).
std::vector<BigInt> frame_coordinates(const UnimodularFrame& frame, const ExponentVector& x);

/// Smith invariant factors s_1 | s_2 | ... of the row lattice, from
/// determinantal divisors. A full-rank basis is saturated iff all are 1.
std::vector<BigInt> smith_invariants(const std::vector<ExponentVector>& rows, std::size_t dim);

/// Exact determinant of a square integer matrix.
BigInt determinant(const IntMatrix& m);

/// Primitive vector (content 1) with the same direction; zero stays zero.
ExponentVector primitive(const ExponentVector& v);

}  // namespace milnor
