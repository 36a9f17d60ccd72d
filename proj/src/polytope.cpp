#include "milnor/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "milnor/lattice.hpp"

namespace milnor {

namespace {

using Wide = __int128;

Wide det_wide(const std::vector<std::vector<Wide>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Wide total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Wide>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[r - 1].push_back(m[r][j]);
    const Wide term = m[0][c] * det_wide(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

std::int64_t narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
    throw OverflowError("coordinate overflow in hull computation");
  return static_cast<std::int64_t>(v);
}

// Vector orthogonal to the k-1 rows of `rows` in Z^k (generalized cross product).
std::vector<Wide> cross(const std::vector<std::vector<Wide>>& rows, std::size_t k) {
  std::vector<Wide> n(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Wide>> minor(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) minor[r].push_back(rows[r][c]);
    const Wide d = det_wide(minor);
    n[j] = (j % 2 == 0) ? d : -d;
  }
  return n;
}

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Polytope Polytope::hull(std::vector<ExponentVector> points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw DomainError("points of mixed dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.ambient_dim_ = d;
  out.points_ = points;
  const ExponentVector& p0 = points.front();

  std::vector<ExponentVector> diffs;
  for (const auto& p : points) diffs.push_back(p - p0);
  const auto span = saturated_basis(diffs, d);
  const std::size_t k = span.size();
  out.dim_ = k;
  for (const auto& n : integer_kernel(span, d)) out.equations_.push_back({n, n.dot(p0)});

  if (k == 0) {
    out.vertices_ = {p0};
    return out;
  }

  const auto frame = complete_to_unimodular(span, d);
  std::vector<std::vector<Wide>> y(points.size(), std::vector<Wide>(k));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto c = frame_coordinates(frame, diffs[i]);
    for (std::size_t j = 0; j < k; ++j) y[i][j] = to_int64(c[j]);
  }

  // Facets in frame coordinates: primitive inner normal -> offset.
  std::map<std::vector<std::int64_t>, std::int64_t> local;
  for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Wide>> rows;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Wide> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = y[idx[r]][j] - y[idx[0]][j];
      rows.push_back(std::move(row));
    }
    auto n = cross(rows, k);
    ExponentVector normal(k);
    for (std::size_t j = 0; j < k; ++j) normal[j] = narrow(n[j]);
    if (normal.is_zero()) return;
    normal = primitive(normal);
    auto value = [&](std::size_t i) {
      Wide s = 0;
      for (std::size_t j = 0; j < k; ++j) s += static_cast<Wide>(normal[j]) * y[i][j];
      return s;
    };
    const Wide c = value(idx[0]);
    bool above = true, below = true;
    for (std::size_t i = 0; i < points.size() && (above || below); ++i) {
      const Wide v = value(i);
      if (v < c) above = false;
      if (v > c) below = false;
    }
    if (above)
      local.emplace(normal.entries(), narrow(c));
    else if (below)
      local.emplace((-normal).entries(), narrow(-c));
  });

  // Lift to ambient normals inside the span: n = W^T z with (W W^T) z = m.
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram[a][b] = Rational(static_cast<long>(span[a].dot(span[b])));
  for (const auto& [m, c] : local) {
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) aug[a][b] = gram[a][b];
      aug[a][k] = Rational(static_cast<long>(m[a]));
    }
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t p = col;
      while (aug[p][col] == 0) ++p;
      std::swap(aug[p], aug[col]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == col || aug[r][col] == 0) continue;
        Rational f = aug[r][col] / aug[col][col];
        for (std::size_t j = col; j <= k; ++j) aug[r][j] -= f * aug[col][j];
      }
    }
    std::vector<Rational> normal(d, 0);
    for (std::size_t a = 0; a < k; ++a) {
      Rational z = aug[a][k] / aug[a][a];
      for (std::size_t j = 0; j < d; ++j) normal[j] += z * static_cast<long>(span[a][j]);
    }
    BigInt lcm = 1;
    for (const auto& q : normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    ExponentVector n(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rational scaled = normal[j] * lcm;
      n[j] = to_int64(scaled.get_num());
    }
    n = primitive(n);
    // Offset from any point on the facet.
    std::int64_t offset = 0;
    bool found = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      Wide s = 0;
      for (std::size_t j = 0; j < k; ++j) s += static_cast<Wide>(m[j]) * y[i][j];
      if (s == c) {
        offset = n.dot(points[i]);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("facet without points");
    out.facets_.push_back({n, offset});
  }
  std::sort(out.facets_.begin(), out.facets_.end(),
            [](const Facet& a, const Facet& b) { return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset); });

  for (const auto& p : points) {
    std::vector<ExponentVector> tight;
    for (const auto& f : out.facets_)
      if (f.slack(p) == 0) tight.push_back(f.normal);
    if (!tight.empty() && rank(tight, d) == k) out.vertices_.push_back(p);
  }
  return out;
}

bool Polytope::contains(const ExponentVector& x) const {
  if (x.size() != ambient_dim_) return false;
  for (const auto& e : equations_)
    if (e.normal.dot(x) != e.value) return false;
  for (const auto& f : facets_)
    if (f.slack(x) < 0) return false;
  return true;
}

bool Polytope::relative_interior_contains(const ExponentVector& x) const {
  if (!contains(x)) return false;
  if (dim_ == 0) return true;
  for (const auto& f : facets_)
    if (f.slack(x) == 0) return false;
  return true;
}

FaceLattice FaceLattice::build(const Polytope& p) {
  const auto& pts = p.points();
  const std::size_t d = p.ambient_dim();
  std::map<ExponentVector, std::size_t> vertex_index;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) vertex_index[p.vertices()[i]] = i;

  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& f : p.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (f.slack(pts[i]) == 0) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }

  std::set<std::vector<std::size_t>> sets;
  std::vector<std::vector<std::size_t>> work;
  for (const auto& s : facet_sets)
    if (sets.insert(s).second) work.push_back(s);
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    for (const auto& f : facet_sets) {
      std::vector<std::size_t> inter;
      std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(inter));
      if (!inter.empty() && sets.insert(inter).second) work.push_back(std::move(inter));
    }
  }
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  sets.insert(all);

  const ExponentVector origin(d);
  const bool origin_in_p = p.contains(origin);

  std::vector<Face> faces;
  faces.push_back(Face{});  // empty face
  for (const auto& s : sets) {
    Face face;
    for (auto i : s) {
      face.lattice_points.push_back(pts[i]);
      auto it = vertex_index.find(pts[i]);
      if (it != vertex_index.end()) {
        face.vertex_indices.push_back(it->second);
        face.vertices.push_back(pts[i]);
      }
    }
    std::vector<ExponentVector> diffs;
    for (const auto& v : face.vertices) diffs.push_back(v - face.vertices.front());
    face.direction_basis = saturated_basis(diffs, d);
    face.dim = static_cast<int>(face.direction_basis.size());
    face.base_point = face.vertices.front();
    if (s.size() != pts.size()) {
      for (std::size_t fi = 0; fi < facet_sets.size(); ++fi)
        if (std::includes(facet_sets[fi].begin(), facet_sets[fi].end(), s.begin(), s.end()))
          face.facet_indices.push_back(fi);
    }
    face.contains_origin = origin_in_p;
    for (auto fi : face.facet_indices)
      if (p.facets()[fi].slack(origin) != 0) face.contains_origin = false;
    for (std::size_t j = 0; j < d && !face.in_coordinate_hyperplane; ++j)
      face.in_coordinate_hyperplane =
          std::all_of(face.vertices.begin(), face.vertices.end(), [j](const ExponentVector& v) { return v[j] == 0; });
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });

  FaceLattice out;
  out.faces_ = std::move(faces);
  out.superfaces_.resize(out.faces_.size());
  for (std::size_t i = 0; i < out.faces_.size(); ++i) {
    out.faces_[i].id = i;
    const auto& vi = out.faces_[i].vertex_indices;
    for (std::size_t j = 0; j < out.faces_.size(); ++j) {
      if (i == j) continue;
      const auto& vj = out.faces_[j].vertex_indices;
      if (vi.size() < vj.size() && std::includes(vj.begin(), vj.end(), vi.begin(), vi.end()))
        out.superfaces_[i].push_back(j);
    }
  }
  return out;
}

bool FaceLattice::is_subface(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  const auto& s = superfaces_.at(a);
  return std::find(s.begin(), s.end(), b) != s.end();
}

std::vector<std::size_t> FaceLattice::facets_of(std::size_t id) const {
  std::vector<std::size_t> out;
  const int target = faces_.at(id).dim - 1;
  for (const auto& f : faces_)
    if (f.dim == target && f.id != id && is_subface(f.id, id)) out.push_back(f.id);
  return out;
}

std::optional<std::size_t> FaceLattice::find_by_vertices(const std::vector<ExponentVector>& vertices) const {
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& f : faces_)
    if (f.vertices == sorted) return f.id;
  return std::nullopt;
}

long FaceLattice::euler_poincare_sum() const {
  long s = 0;
  for (const auto& f : faces_) s += (f.dim % 2 == 0) ? 1 : -1;
  return s;
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const FaceLattice& lattice, std::size_t face_id,
                                                            std::optional<std::size_t> first) {
  const Face& g = lattice.face(face_id);
  if (g.dim < 0) return {};
  if (g.vertex_indices.size() == static_cast<std::size_t>(g.dim) + 1) return {g.vertex_indices};
  std::size_t pull = g.vertex_indices.front();
  if (first && std::find(g.vertex_indices.begin(), g.vertex_indices.end(), *first) != g.vertex_indices.end())
    pull = *first;
  std::vector<std::vector<std::size_t>> out;
  for (auto sub : lattice.facets_of(face_id)) {
    const auto& sv = lattice.face(sub).vertex_indices;
    if (std::find(sv.begin(), sv.end(), pull) != sv.end()) continue;
    for (auto simplex : pulling_triangulation(lattice, sub, first)) {
      simplex.push_back(pull);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope newton_polytope_at_infinity(const LaurentPoly& f) {
  if (f.is_constant()) throw ConstantInputError("polynomial is constant: " + f.to_string());
  const auto supp = support(f);
  std::vector<ExponentVector> pts(supp.begin(), supp.end());
  pts.emplace_back(f.dimension());
  return Polytope::hull(std::move(pts));
}

FaceLattice face_lattice(const Polytope& p) { return FaceLattice::build(p); }

std::vector<Face> faces_gamma(const FaceLattice& lattice) {
  std::vector<Face> out;
  for (const auto& f : lattice.faces())
    if (f.dim >= 0 && !f.contains_origin) out.push_back(f);
  return out;
}

bool is_commode(const Polytope& p) {
  if (!p.full_dimensional()) return false;
  const ExponentVector origin(p.ambient_dim());
  for (const auto& f : p.facets())
    if (f.slack(origin) <= 0) return false;
  return true;
}

Rational normalized_volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  const auto lattice = face_lattice(p);
  const std::size_t d = p.ambient_dim();
  BigInt total = 0;
  for (const auto& simplex : pulling_triangulation(lattice, lattice.polytope_id())) {
    std::vector<ExponentVector> edges;
    const auto& v0 = p.vertices()[simplex.front()];
    for (std::size_t i = 1; i < simplex.size(); ++i) edges.push_back(p.vertices()[simplex[i]] - v0);
    total += abs(determinant(to_matrix(edges, d)));
  }
  return Rational(total);
}

LaurentPoly face_restriction(const LaurentPoly& f, const Polytope& newton, const Face& face) {
  auto pts = support(f);
  pts.insert(ExponentVector(f.dimension()));
  if (!std::equal(pts.begin(), pts.end(), newton.points().begin(), newton.points().end()))
    throw DomainError("polytope is not the Newton polytope at infinity of " + f.to_string());
  for (const auto& v : face.vertices)
    if (std::find(newton.vertices().begin(), newton.vertices().end(), v) == newton.vertices().end())
      throw DomainError("face vertex " + v.to_string() + " is not a vertex of the Newton polytope");
  std::vector<ExponentVector> on_face;
  for (const auto& p : newton.points()) {
    bool on = true;
    for (auto fi : face.facet_indices)
      if (fi >= newton.facets().size() || newton.facets()[fi].slack(p) != 0) on = false;
    if (on) on_face.push_back(p);
  }
  if (on_face != face.lattice_points) throw DomainError("face does not belong to the Newton polytope of f");
  return restrict_to_points(f, face.lattice_points);
}

}  // namespace milnor
