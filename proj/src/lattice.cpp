#include "milnor/lattice.hpp"

#include <algorithm>
#include <functional>

namespace milnor {

IntMatrix to_matrix(const std::vector<ExponentVector>& rows, std::size_t cols) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DomainError("row has wrong dimension");
    std::vector<BigInt> row;
    row.reserve(cols);
    for (auto v : r) row.emplace_back(static_cast<long>(v));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<ExponentVector> from_matrix(const IntMatrix& m) {
  std::vector<ExponentVector> out;
  for (const auto& row : m) {
    ExponentVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) v[j] = to_int64(row[j]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// row_a -= q * row_b
void axpy(std::vector<BigInt>& a, const std::vector<BigInt>& b, const BigInt& q) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

EchelonForm hermite_normal_form(const IntMatrix& input) {
  EchelonForm out;
  out.echelon = input;
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  out.transform = identity(rows);
  auto& e = out.echelon;
  auto& u = out.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // smallest nonzero magnitude at or below r
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (e[i][c] != 0 && (best == rows || abs(e[i][c]) < abs(e[best][c]))) best = i;
      if (best == rows) break;
      std::swap(e[r], e[best]);
      std::swap(u[r], u[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (e[i][c] == 0) continue;
        BigInt q = floor_div(e[i][c], e[r][c]);
        axpy(e[i], e[r], q);
        axpy(u[i], u[r], q);
        if (e[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (e[r][c] == 0) continue;
    if (e[r][c] < 0) {
      for (auto& v : e[r]) v = -v;
      for (auto& v : u[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(e[i][c], e[r][c]);
      if (q != 0) {
        axpy(e[i], e[r], q);
        axpy(u[i], u[r], q);
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const std::vector<ExponentVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return hermite_normal_form(to_matrix(vectors, dim)).rank;
}

std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& rows, std::size_t dim) {
  // Row-reduce the transpose: rows of the transform past the rank annihilate it.
  IntMatrix t(dim, std::vector<BigInt>(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw DomainError("row has wrong dimension");
    for (std::size_t j = 0; j < dim; ++j) t[j][i] = static_cast<long>(rows[i][j]);
  }
  if (rows.empty()) return from_matrix(identity(dim));
  auto hnf = hermite_normal_form(t);
  IntMatrix kernel(hnf.transform.begin() + static_cast<long>(hnf.rank), hnf.transform.end());
  if (kernel.empty()) return {};
  auto reduced = hermite_normal_form(kernel);
  reduced.echelon.resize(reduced.rank);
  return from_matrix(reduced.echelon);
}

std::vector<ExponentVector> saturated_basis(const std::vector<ExponentVector>& generators, std::size_t dim) {
  return integer_kernel(integer_kernel(generators, dim), dim);
}

namespace {

// Inverse of a unimodular integer matrix via exact rational elimination.
IntMatrix invert_unimodular(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InternalError("singular matrix in unimodular inversion");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = a[i][n + j];
      if (q.get_den() != 1) throw InternalError("matrix is not unimodular");
      inv[i][j] = q.get_num();
    }
  return inv;
}

}  // namespace

UnimodularFrame complete_to_unimodular(const std::vector<ExponentVector>& basis, std::size_t dim) {
  const std::size_t k = basis.size();
  IntMatrix t(dim, std::vector<BigInt>(k, 0));  // W^T
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < dim; ++j) t[j][i] = static_cast<long>(basis[i][j]);
  IntMatrix completion;
  if (k == 0) {
    completion = identity(dim);
  } else {
    auto hnf = hermite_normal_form(t);
    if (hnf.rank != k) throw DomainError("basis vectors are linearly dependent");
    // U W^T = [H; 0]; with V = U^-1 the columns k.. of V complete W.
    IntMatrix v = invert_unimodular(hnf.transform);
    completion = to_matrix(basis, dim);
    for (std::size_t c = k; c < dim; ++c) {
      std::vector<BigInt> row(dim);
      for (std::size_t r = 0; r < dim; ++r) row[r] = v[r][c];
      completion.push_back(std::move(row));
    }
  }
  BigInt det = determinant(completion);
  if (det != 1 && det != -1) throw DomainError("basis is not saturated; cannot complete to a unimodular frame");
  return {completion, invert_unimodular(completion)};
}

std::vector<BigInt> frame_coordinates(const UnimodularFrame& frame, const ExponentVector& x) {
  // x = c M  =>  c = x M^{-1}
  const std::size_t n = frame.matrix.size();
  std::vector<BigInt> c(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) c[j] += BigInt(static_cast<long>(x[i])) * frame.inverse[i][j];
  return c;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

std::vector<BigInt> smith_invariants(const std::vector<ExponentVector>& rows, std::size_t dim) {
  const IntMatrix m = to_matrix(rows, dim);
  const std::size_t r = rank(rows, dim);
  std::vector<BigInt> divisors{BigInt(1)};  // d_0 = 1
  for (std::size_t k = 1; k <= r; ++k) {
    BigInt g = 0;
    std::vector<std::size_t> ri, ci;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, std::function<void()>)> choose =
        [&](std::size_t start, std::vector<std::size_t>& acc, std::size_t limit, std::function<void()> fn) {
          if (acc.size() == k) {
            fn();
            return;
          }
          for (std::size_t i = start; i < limit; ++i) {
            acc.push_back(i);
            choose(i + 1, acc, limit, fn);
            acc.pop_back();
          }
        };
    choose(0, ri, m.size(), [&] {
      choose(0, ci, dim, [&] {
        IntMatrix minor(k, std::vector<BigInt>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor[a][b] = m[ri[a]][ci[b]];
        BigInt d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    divisors.push_back(g);
  }
  std::vector<BigInt> inv;
  for (std::size_t k = 1; k < divisors.size(); ++k) inv.push_back(divisors[k] / divisors[k - 1]);
  return inv;
}

ExponentVector primitive(const ExponentVector& v) {
  const auto g = v.content();
  if (g == 0) return v;
  ExponentVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace milnor
