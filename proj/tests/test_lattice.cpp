#include <functional>
#include <random>

#include "doctest.h"
#include "milnor/lattice.hpp"

using namespace milnor;

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<BigInt>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<ExponentVector> random_rows(std::mt19937_64& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  std::vector<ExponentVector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    ExponentVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = u(rng);
    rows.push_back(v);
  }
  return rows;
}

// Brute-force gcd of all k x k minors.
BigInt minor_gcd(const IntMatrix& a, std::size_t k) {
  const std::size_t m = a.size(), n = a[0].size();
  BigInt g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t)> rows_rec, cols_rec;
  auto eval = [&] {
    IntMatrix sub(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
    g = gcd(g, BigInt(abs(determinant(sub))));
  };
  cols_rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) return eval();
    for (std::size_t j = start; j < n; ++j) {
      cs[depth] = j;
      cols_rec(j + 1, depth + 1);
    }
  };
  rows_rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) return cols_rec(0, 0);
    for (std::size_t i = start; i < m; ++i) {
      rs[depth] = i;
      rows_rec(i + 1, depth + 1);
    }
  };
  rows_rec(0, 0);
  return g;
}

}  // namespace

TEST_CASE("hermite normal form: transform is unimodular and reproduces the echelon") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const auto rows = random_rows(rng, m, n, 5);
    const IntMatrix a = to_matrix(rows, n);
    const auto h = hermite_normal_form(a);
    CHECK(multiply(h.transform, a) == h.echelon);
    CHECK(abs(determinant(h.transform)) == 1);
    CHECK(h.rank == rank(rows, n));
    // pivots positive, entries above pivots reduced
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rank; ++i) {
      while (h.echelon[i][col] == 0) ++col;
      CHECK(h.echelon[i][col] > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.echelon[k][col] >= 0);
        CHECK(h.echelon[k][col] < h.echelon[i][col]);
      }
      ++col;
    }
    for (std::size_t i = h.rank; i < m; ++i)
      for (const auto& x : h.echelon[i]) CHECK(x == 0);
  }
}

TEST_CASE("integer kernel is orthogonal, of full rank and saturated") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 2 + rng() % 3;
    const auto rows = random_rows(rng, m, n, 4);
    const auto ker = integer_kernel(rows, n);
    CHECK(ker.size() == n - rank(rows, n));
    for (const auto& k : ker)
      for (const auto& r : rows) CHECK(k.dot(r) == 0);
    if (!ker.empty()) {
      const auto inv = smith_invariants(ker, n);
      for (const auto& d : inv) CHECK(d == 1);
    }
  }
}

TEST_CASE("smith invariants match determinantal divisors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
    const auto rows = random_rows(rng, m, n, 6);
    const auto inv = smith_invariants(rows, n);
    const IntMatrix a = to_matrix(rows, n);
    BigInt prev = 1, prod = 1;
    for (std::size_t k = 1; k <= inv.size(); ++k) {
      prod *= inv[k - 1];
      CHECK(prod == minor_gcd(a, k));
      if (k > 1) CHECK(inv[k - 1] % inv[k - 2] == 0);
      prev = prod;
    }
  }
  CHECK(smith_invariants({{2, 0}, {0, 3}}, 2) == std::vector<BigInt>{1, 6});
}

TEST_CASE("saturation and unimodular completion") {
  auto sat = saturated_basis({{2, 2, 0}}, 3);
  REQUIRE(sat.size() == 1);
  CHECK((sat[0] == ExponentVector{1, 1, 0} || sat[0] == ExponentVector{-1, -1, 0}));

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    auto basis = saturated_basis(random_rows(rng, 1 + rng() % (n - 1), n, 4), n);
    if (basis.empty()) continue;
    const auto frame = complete_to_unimodular(basis, n);
    CHECK(abs(determinant(frame.matrix)) == 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(frame.matrix[i][j] == basis[i][j]);
    // coordinates reproduce the point
    ExponentVector x = random_rows(rng, 1, n, 7)[0];
    const auto c = frame_coordinates(frame, x);
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t i = 0; i < n; ++i) s += c[i] * frame.matrix[i][j];
      CHECK(s == x[j]);
    }
  }
  CHECK_THROWS(complete_to_unimodular({{2, 0}}, 2));
}

TEST_CASE("primitive") {
  CHECK(primitive(ExponentVector{4, -6}) == ExponentVector{2, -3});
  CHECK(primitive(ExponentVector{0, 5}) == ExponentVector{0, 1});
}
