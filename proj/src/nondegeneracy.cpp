#include "milnor/nondegeneracy.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "milnor/lattice.hpp"

namespace milnor {

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::ExactNondegenerate: return "exact-nondegenerate";
    case CertificateStatus::ExactDegenerate: return "exact-degenerate";
    case CertificateStatus::ProbablyNondegenerate: return "probably-nondegenerate";
    case CertificateStatus::Unknown: return "unknown";
  }
  return "unknown";
}

CertificateStatus parse_certificate_status(const std::string& s) {
  if (s == "exact-nondegenerate") return CertificateStatus::ExactNondegenerate;
  if (s == "exact-degenerate") return CertificateStatus::ExactDegenerate;
  if (s == "probably-nondegenerate") return CertificateStatus::ProbablyNondegenerate;
  if (s == "unknown") return CertificateStatus::Unknown;
  throw DomainError("unknown certificate status '" + s + "'");
}

FaceCoordinates face_coordinates(const LaurentPoly& f, const Face& face) {
  if (!face.base_point) throw DomainError("face coordinates of the empty face");
  const std::size_t d = f.dimension();
  const std::size_t k = face.direction_basis.size();
  const auto frame = complete_to_unimodular(face.direction_basis, d);
  FaceCoordinates out;
  out.dim = k;
  for (const auto& p : face.lattice_points) {
    const Rational c = f.coefficient(p);
    if (c == 0) continue;
    const auto coords = frame_coordinates(frame, p - *face.base_point);
    std::vector<std::int64_t> local(k);
    for (std::size_t i = 0; i < k; ++i) local[i] = to_int64(coords[i]);
    for (std::size_t i = k; i < d; ++i)
      if (coords[i] != 0) throw InternalError("face point outside the face's direction lattice");
    out.terms.emplace_back(std::move(local), c);
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t lo = INT64_MAX;
    for (const auto& t : out.terms) lo = std::min(lo, t.first[i]);
    for (auto& t : out.terms) t.first[i] = checked::sub(t.first[i], lo);
  }
  return out;
}

UPoly edge_polynomial(const LaurentPoly& f, const Face& edge) {
  if (edge.dim != 1) throw DomainError("edge_polynomial expects a one-dimensional face");
  const auto fc = face_coordinates(f, edge);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : fc.terms) {
    const auto k = static_cast<std::size_t>(e[0]);
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] += c;
  }
  return UPoly(std::move(coeffs));
}

namespace {

// Polynomial in y2 with coefficients in Q[y1] (index = power of y2).
using BiPoly = std::vector<UPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int y1_degree(const BiPoly& p) {
  int d = -1;
  for (const auto& c : p) d = std::max(d, c.degree());
  return d;
}

BiPoly d_dy1(const BiPoly& p) {
  BiPoly r;
  for (const auto& c : p) r.push_back(c.derivative());
  trim(r);
  return r;
}

BiPoly d_dy2(const BiPoly& p) {
  BiPoly r;
  for (std::size_t j = 1; j < p.size(); ++j) r.push_back(p[j] * Rational(static_cast<long>(j)));
  trim(r);
  return r;
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
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
  return det;
}

// Resultant in y2 with formal degrees deg(a), deg(b), by evaluation at
// y1 = 0..D and interpolation (the formal Sylvester determinant commutes
// with evaluation).
UPoly resultant_y2(const BiPoly& a, const BiPoly& b) {
  const std::size_t n = a.size() - 1;
  const std::size_t m = b.size() - 1;
  const int bound = static_cast<int>(n) * std::max(0, y1_degree(b)) + static_cast<int>(m) * std::max(0, y1_degree(a));
  std::vector<Rational> xs, ys;
  for (int s = 0; s <= bound; ++s) {
    const Rational x(s);
    const std::size_t size = n + m;
    std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size, 0));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j <= n; ++j) syl[r][r + j] = a[n - j].evaluate(x);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j <= m; ++j) syl[m + r][r + j] = b[m - j].evaluate(x);
    xs.push_back(x);
    ys.push_back(det_rational(std::move(syl)));
  }
  return interpolate(xs, ys);
}

// Signals that the current modulus factors as factor * (m / factor).
struct SplitSignal {
  UPoly factor;
};

enum class Residue { Zero, Unit };

Residue classify(const UPoly& c, const UPoly& m) {
  const UPoly r = c % m;
  if (r.is_zero()) return Residue::Zero;
  const UPoly g = gcd(r, m);
  if (g.degree() == 0) return Residue::Unit;
  throw SplitSignal{g};
}

void normalize(BiPoly& p, const UPoly& m) {
  for (auto& c : p) c = c % m;
  while (!p.empty()) {
    if (classify(p.back(), m) == Residue::Zero)
      p.pop_back();
    else
      break;
  }
}

UPoly inverse_mod(const UPoly& c, const UPoly& m) {
  const auto eg = extended_gcd(c % m, m);
  return eg.s % m;
}

BiPoly remainder(BiPoly a, const BiPoly& b, const UPoly& m) {
  const UPoly inv = inverse_mod(b.back(), m);
  normalize(a, m);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const UPoly factor = (a.back() * inv) % m;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] - factor * b[j]) % m;
    a.pop_back();
    normalize(a, m);
  }
  return a;
}

BiPoly gcd_mod(BiPoly a, BiPoly b, const UPoly& m) {
  normalize(a, m);
  normalize(b, m);
  while (!b.empty()) {
    BiPoly r = remainder(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string bipoly_to_string(const BiPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = p.size(); j-- > 0;) {
    if (p[j].is_zero()) continue;
    os << (first ? "" : " + ") << '(' << p[j].to_string("y1") << ')';
    if (j > 0) os << "*y2" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return os.str();
}

}  // namespace

std::optional<std::string> bivariate_torus_singularity(const std::vector<std::vector<Rational>>& coeffs) {
  BiPoly g;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      if (coeffs[i][j] == 0) continue;
      if (g.size() <= j) g.resize(j + 1);
      g[j] = g[j] + UPoly::monomial(coeffs[i][j], i);
    }
  trim(g);
  if (g.size() <= 1) {
    // g depends on y1 only: swap the roles of the variables.
    std::vector<std::vector<Rational>> t;
    bool any_y1 = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t j = 0; j < coeffs[i].size(); ++j)
        if (coeffs[i][j] != 0) {
          if (i > 0) any_y1 = true;
          if (t.size() <= j) t.resize(j + 1);
          if (t[j].size() <= i) t[j].resize(i + 1, 0);
          t[j][i] = coeffs[i][j];
        }
    if (!any_y1) return std::nullopt;  // nonzero constant or zero-free on the torus
    return bivariate_torus_singularity(t);
  }

  const BiPoly g1 = d_dy1(g);
  const BiPoly g2 = d_dy2(g);
  const UPoly res = resultant_y2(g, g2);
  if (res.is_zero()) return std::string("repeated factor: Res_y2(g, dg/dy2) vanishes identically");
  const UPoly candidates = squarefree_part(res).without_zero_root().monic();
  if (candidates.degree() <= 0) return std::nullopt;

  std::vector<UPoly> work{candidates};
  while (!work.empty()) {
    const UPoly m = work.back();
    work.pop_back();
    try {
      BiPoly h = gcd_mod(gcd_mod(g, g1, m), g2, m);
      while (!h.empty() && classify(h.front(), m) == Residue::Zero) h.erase(h.begin());
      if (h.empty() || h.size() >= 2)
        return "common root with y1 a root of " + m.to_string("y1") + ", y2 a root of " + bipoly_to_string(h);
    } catch (const SplitSignal& s) {
      work.push_back(s.factor.monic());
      work.push_back((m / s.factor).monic());
    }
  }
  return std::nullopt;
}

namespace {

using Complex = std::complex<double>;

// Randomized Gauss-Newton search for a torus point with g = y_i dg/dy_i = 0.
bool numeric_critical_point(const FaceCoordinates& fc, std::mt19937_64& rng, std::size_t trials) {
  const std::size_t k = fc.dim;
  std::vector<std::vector<double>> exps;
  std::vector<double> cs;
  for (const auto& [e, c] : fc.terms) {
    exps.emplace_back(e.begin(), e.end());
    cs.push_back(c.get_d());
  }
  double scale = 0;
  for (double c : cs) scale = std::max(scale, std::abs(c));
  std::uniform_real_distribution<double> radius(0.5, 2.0), angle(0.0, 2 * M_PI);

  for (std::size_t t = 0; t < trials; ++t) {
    Eigen::VectorXcd y(static_cast<long>(k));
    for (std::size_t i = 0; i < k; ++i) y[static_cast<long>(i)] = std::polar(radius(rng), angle(rng));
    for (int iter = 0; iter < 80; ++iter) {
      Eigen::VectorXcd F = Eigen::VectorXcd::Zero(static_cast<long>(k + 1));
      Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(static_cast<long>(k + 1), static_cast<long>(k));
      for (std::size_t term = 0; term < cs.size(); ++term) {
        Complex mono = cs[term];
        for (std::size_t i = 0; i < k; ++i) mono *= std::pow(y[static_cast<long>(i)], exps[term][i]);
        F[0] += mono;
        for (std::size_t j = 0; j < k; ++j) {
          const Complex dlog = exps[term][j] / y[static_cast<long>(j)];
          J(0, static_cast<long>(j)) += mono * dlog;
        }
        for (std::size_t i = 0; i < k; ++i) {
          F[static_cast<long>(i + 1)] += exps[term][i] * mono;
          for (std::size_t j = 0; j < k; ++j)
            J(static_cast<long>(i + 1), static_cast<long>(j)) += exps[term][i] * mono * exps[term][j] / y[static_cast<long>(j)];
        }
      }
      if (F.norm() < 1e-11 * scale) {
        bool in_torus = true;
        for (std::size_t i = 0; i < k; ++i) {
          const double r = std::abs(y[static_cast<long>(i)]);
          if (r < 1e-6 || r > 1e6) in_torus = false;
        }
        if (in_torus) return true;
        break;
      }
      const Eigen::VectorXcd step = J.colPivHouseholderQr().solve(-F);
      if (!step.allFinite()) break;
      y += step;
      if (!y.allFinite()) break;
    }
  }
  return false;
}

}  // namespace

Certificate check_face(const LaurentPoly& f, const Face& face, const NondegeneracyOptions& options) {
  Certificate cert;
  cert.face_id = face.id;
  if (face.dim < 0) throw DomainError("cannot certify the empty face");
  if (face.dim == 0) {
    cert.status = CertificateStatus::ExactNondegenerate;
    cert.detail = "vertex: monomial has no zeros on the torus";
    return cert;
  }
  if (face.dim == 1) {
    const UPoly q = edge_polynomial(f, face);
    const UPoly g = gcd(q, q.derivative());
    if (g.degree() > 0) {
      cert.status = CertificateStatus::ExactDegenerate;
      cert.detail = "edge: reduced polynomial q(u) = " + q.to_string() + " has repeated roots";
      std::string w = "repeated factor " + g.to_string();
      if (g.degree() == 1) w += " (double root u = " + Rational(-g.coeff(0)).get_str() + ")";
      cert.witness = w;
    } else {
      cert.status = CertificateStatus::ExactNondegenerate;
      cert.detail = "edge: reduced polynomial q(u) = " + q.to_string() + " is squarefree";
    }
    return cert;
  }
  const auto fc = face_coordinates(f, face);
  if (face.dim == 2) {
    std::vector<std::vector<Rational>> coeffs;
    for (const auto& [e, c] : fc.terms) {
      const auto i = static_cast<std::size_t>(e[0]);
      const auto j = static_cast<std::size_t>(e[1]);
      if (coeffs.size() <= i) coeffs.resize(i + 1);
      if (coeffs[i].size() <= j) coeffs[i].resize(j + 1, 0);
      coeffs[i][j] += c;
    }
    auto witness = bivariate_torus_singularity(coeffs);
    if (witness) {
      cert.status = CertificateStatus::ExactDegenerate;
      cert.detail = "2-face: critical point of f_gamma on the torus";
      cert.witness = *witness;
    } else {
      cert.status = CertificateStatus::ExactNondegenerate;
      cert.detail = "2-face: resultant elimination finds no torus critical point";
    }
    return cert;
  }
  std::mt19937_64 rng(options.seed + face.id);
  cert.seed = options.seed;
  cert.trials = options.trials;
  if (numeric_critical_point(fc, rng, options.trials)) {
    cert.status = CertificateStatus::Unknown;
    cert.detail = "randomized search converged to a numerical critical point; not certified";
  } else {
    cert.status = CertificateStatus::ProbablyNondegenerate;
    cert.detail = "no torus critical point in " + std::to_string(options.trials) + " random Gauss-Newton trials";
  }
  return cert;
}

namespace {
int strength(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::ExactDegenerate: return 0;
    case CertificateStatus::Unknown: return 1;
    case CertificateStatus::ProbablyNondegenerate: return 2;
    case CertificateStatus::ExactNondegenerate: return 3;
  }
  return 1;
}
}  // namespace

NondegeneracyReport check_all(const LaurentPoly& f, const FaceLattice& lattice, const NondegeneracyOptions& options) {
  NondegeneracyReport out;
  for (const auto& face : faces_gamma(lattice)) {
    out.certificates.push_back(check_face(f, face, options));
    if (strength(out.certificates.back().status) < strength(out.overall)) out.overall = out.certificates.back().status;
  }
  return out;
}

}  // namespace milnor
