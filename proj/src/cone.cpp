#include "milnor/cone.hpp"

#include <algorithm>
#include <set>

#include "milnor/lattice.hpp"

namespace milnor {

namespace {

// Coefficients c with sum_i c_i rows[i] = w, if any (rows independent).
std::optional<std::vector<Rational>> solve_row_combination(const std::vector<ExponentVector>& rows,
                                                           const ExponentVector& w) {
  const std::size_t m = rows.size();
  const std::size_t d = w.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(m + 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = static_cast<long>(rows[i][j]);
    a[j][m] = static_cast<long>(w[j]);
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < m && r < d; ++c) {
    std::size_t p = r;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < d; ++i)
    if (a[i][m] != 0) return std::nullopt;
  std::vector<Rational> coeffs(m, 0);
  for (std::size_t i = 0; i < r; ++i) coeffs[pivot_col[i]] = a[i][m] / a[i][pivot_col[i]];
  return coeffs;
}

Polytope pointed_hull(std::size_t d, const std::vector<ExponentVector>& rays) {
  std::vector<ExponentVector> pts = rays;
  pts.emplace_back(d);
  return Polytope::hull(std::move(pts));
}

}  // namespace

RationalCone::RationalCone(std::size_t ambient_dim, std::vector<ExponentVector> rays,
                           std::vector<ExponentVector> lineality, bool open)
    : ambient_dim_(ambient_dim) {
  for (auto& r : rays) {
    if (r.size() != ambient_dim) throw DomainError("ray has wrong dimension");
    if (r.is_zero()) throw DomainError("zero ray generator");
    rays_.push_back(primitive(r));
  }
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
  for (auto& l : lineality)
    if (l.size() != ambient_dim) throw DomainError("lineality vector has wrong dimension");
  lineality_ = std::move(lineality);

  pointed_dim_ = rank(rays_, ambient_dim);
  std::vector<ExponentVector> all = rays_;
  all.insert(all.end(), lineality_.begin(), lineality_.end());
  if (rank(all, ambient_dim) != pointed_dim_ + lineality_.size() || rank(lineality_, ambient_dim) != lineality_.size())
    throw DomainError("lineality basis is not independent of the ray generators");

  if (!rays_.empty()) {
    const auto hull = pointed_hull(ambient_dim, rays_);
    const ExponentVector origin(ambient_dim);
    if (std::find(hull.vertices().begin(), hull.vertices().end(), origin) == hull.vertices().end())
      throw DomainError("ray generators do not span a pointed cone");
    for (const auto& f : hull.facets())
      if (f.offset == 0) facets_.push_back(f);
  }
  open_.assign(facets_.size(), open);
}

RationalCone RationalCone::relatively_open(std::size_t ambient_dim, std::vector<ExponentVector> rays,
                                           std::vector<ExponentVector> lineality) {
  return RationalCone(ambient_dim, std::move(rays), std::move(lineality), true);
}

RationalCone RationalCone::closed(std::size_t ambient_dim, std::vector<ExponentVector> rays,
                                  std::vector<ExponentVector> lineality) {
  return RationalCone(ambient_dim, std::move(rays), std::move(lineality), false);
}

RationalCone RationalCone::with_open_facets(std::vector<bool> open) const {
  if (open.size() != facets_.size()) throw DomainError("facet flag count does not match the cone's facets");
  RationalCone out = *this;
  out.open_ = std::move(open);
  return out;
}

bool RationalCone::is_relatively_open() const {
  return std::all_of(open_.begin(), open_.end(), [](bool b) { return b; });
}

bool RationalCone::contains(const ExponentVector& w) const {
  if (w.size() != ambient_dim_) return false;
  const auto span = saturated_basis(rays_, ambient_dim_);
  std::vector<ExponentVector> rows = span;
  rows.insert(rows.end(), lineality_.begin(), lineality_.end());
  const auto coeffs = solve_row_combination(rows, w);
  if (!coeffs) return false;
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    Rational value = 0;
    for (std::size_t i = 0; i < span.size(); ++i) value += (*coeffs)[i] * static_cast<long>(facets_[fi].normal.dot(span[i]));
    if (value < 0 || (open_[fi] && value == 0)) return false;
  }
  // Only the apex remains when the pointed part has no facets.
  return true;
}

std::vector<std::vector<std::size_t>> cone_cells(const RationalCone& c) {
  std::set<std::vector<std::size_t>> cells{{}};
  if (c.rays().empty()) return {cells.begin(), cells.end()};
  const auto hull = pointed_hull(c.ambient_dim(), c.rays());
  const auto lattice = face_lattice(hull);
  const ExponentVector origin(c.ambient_dim());
  const auto& verts = hull.vertices();
  const auto apex = static_cast<std::size_t>(std::find(verts.begin(), verts.end(), origin) - verts.begin());

  // vertex index of the hull -> index into c.rays()
  std::vector<std::size_t> ray_of(verts.size(), 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (v == apex) continue;
    ray_of[v] = static_cast<std::size_t>(std::find(c.rays().begin(), c.rays().end(), verts[v]) - c.rays().begin());
  }

  for (const auto& simplex : pulling_triangulation(lattice, lattice.polytope_id(), apex)) {
    std::vector<std::size_t> rays;
    for (auto v : simplex)
      if (v != apex) rays.push_back(ray_of[v]);
    if (rays.size() != c.pointed_dim()) throw InternalError("triangulation simplex of wrong dimension");
    const std::size_t n = rays.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> cell;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) cell.push_back(rays[i]);
      std::sort(cell.begin(), cell.end());
      cells.insert(std::move(cell));
    }
  }
  return {cells.begin(), cells.end()};
}

int euler_compact(const RationalCone& c) {
  int total = 0;
  for (const auto& cell : cone_cells(c)) {
    bool excluded = false;
    for (std::size_t fi = 0; fi < c.facets().size() && !excluded; ++fi) {
      if (!c.open_facets()[fi]) continue;
      excluded = std::all_of(cell.begin(), cell.end(),
                             [&](std::size_t r) { return c.facets()[fi].normal.dot(c.rays()[r]) == 0; });
    }
    if (!excluded) total += (cell.size() % 2 == 0) ? 1 : -1;
  }
  return (c.lineality().size() % 2 == 0) ? total : -total;
}

RationalCone normal_cone(const Face& face, const Polytope& p) {
  if (face.dim < 0) throw DomainError("normal cone of the empty face");
  if (face.contains_origin) throw DomainError("face contains the origin");
  std::vector<ExponentVector> rays;
  for (auto fi : face.facet_indices) rays.push_back(-p.facets().at(fi).normal);
  std::vector<ExponentVector> lineality;
  for (const auto& e : p.equations()) lineality.push_back(e.normal);
  return RationalCone::relatively_open(p.ambient_dim(), std::move(rays), std::move(lineality));
}

bool in_normal_cone(const Face& face, const Polytope& p, const ExponentVector& w) {
  if (face.vertices.empty() || w.size() != p.ambient_dim()) return false;
  const auto top = w.dot(face.vertices.front());
  for (const auto& v : face.vertices)
    if (w.dot(v) != top) return false;
  for (const auto& v : p.vertices()) {
    if (std::find(face.vertices.begin(), face.vertices.end(), v) != face.vertices.end()) continue;
    if (w.dot(v) >= top) return false;
  }
  return true;
}

int chi_commode(const Face& face, const Polytope& p) {
  if (!is_commode(p)) throw DomainError("commode closed form requires the origin in the interior");
  if (face.in_coordinate_hyperplane) return 0;
  return ((p.ambient_dim() - static_cast<std::size_t>(face.dim)) % 2 == 0) ? 1 : -1;
}

std::string to_string(ChiConvention c) {
  switch (c) {
    case ChiConvention::CommodeOnly: return "commode-only";
    case ChiConvention::ConeChi: return "cone-chi";
    case ChiConvention::Calibrated: return "calibrated";
  }
  return "cone-chi";
}

ChiConvention parse_chi_convention(std::string_view s) {
  if (s == "commode-only") return ChiConvention::CommodeOnly;
  if (s == "cone-chi") return ChiConvention::ConeChi;
  if (s == "calibrated") return ChiConvention::Calibrated;
  throw DomainError("unknown chi convention '" + std::string(s) + "'");
}

ChiReport chi(const Face& face, const Polytope& p, ChiConvention convention) {
  ChiReport r;
  r.face_id = face.id;
  r.convention = convention;
  r.chi_cone = euler_compact(normal_cone(face, p));
  if (is_commode(p)) {
    r.chi_closed_form = chi_commode(face, p);
    r.chi_used = r.chi_closed_form;
    return r;
  }
  switch (convention) {
    case ChiConvention::CommodeOnly: break;
    case ChiConvention::ConeChi: r.chi_used = r.chi_cone; break;
    case ChiConvention::Calibrated: r.chi_used = kCalibratedSign * r.chi_cone; break;
  }
  return r;
}

namespace {

std::int64_t inf_norm(const ExponentVector& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max(m, x < 0 ? checked::neg(x) : x);
  return m;
}

// Calls fn on every vector of [-r, r]^d with infinity norm exactly r, in
// lexicographic order, until fn returns true.
template <class Fn>
bool scan_shell(std::size_t d, std::int64_t r, Fn&& fn) {
  ExponentVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = -r;
  while (true) {
    if (inf_norm(v) == r && fn(v)) return true;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (v[i] < r) {
        ++v[i];
        for (std::size_t j = i + 1; j < d; ++j) v[j] = -r;
        break;
      }
      if (i == 0) return false;
    }
    if (d == 0) return false;
  }
}

ExponentVector interior_witness(const RationalCone& c) {
  ExponentVector s(c.ambient_dim());
  for (const auto& r : c.rays()) s = s + r;
  return s;
}

}  // namespace

ExponentVector sample_weight(const Face& face, const Polytope& p) {
  const auto cone = normal_cone(face, p);
  const auto bound = std::max<std::int64_t>(1, inf_norm(interior_witness(cone)));
  std::optional<ExponentVector> found;
  for (std::int64_t r = 1; r <= bound && !found; ++r)
    scan_shell(p.ambient_dim(), r, [&](const ExponentVector& w) {
      if (!in_normal_cone(face, p, w)) return false;
      found = w;
      return true;
    });
  if (!found) throw InternalError("no lattice point found in the normal cone");
  return *found;
}

ExponentVector second_sample_weight(const Face& face, const Polytope& p, const ExponentVector& first) {
  const auto cone = normal_cone(face, p);
  if (cone.dim() <= 1) return first.scaled(2);
  std::int64_t extra = 1;
  for (const auto& r : cone.rays()) extra = std::max(extra, inf_norm(r));
  for (const auto& l : cone.lineality()) extra = std::max(extra, inf_norm(l));
  const auto bound = checked::add(inf_norm(first), extra);
  auto parallel = [&](const ExponentVector& w) { return rank({first, w}, first.size()) < 2; };
  std::optional<ExponentVector> found;
  for (std::int64_t r = std::max<std::int64_t>(1, inf_norm(first)); r <= bound && !found; ++r)
    scan_shell(p.ambient_dim(), r, [&](const ExponentVector& w) {
      if (parallel(w) || !in_normal_cone(face, p, w)) return false;
      found = w;
      return true;
    });
  if (!found) throw InternalError("no second lattice point found in the normal cone");
  return *found;
}

std::int64_t face_degree(const Face& face, const ExponentVector& w) {
  if (face.lattice_points.empty()) throw DomainError("face degree of the empty face");
  const auto n = w.dot(face.lattice_points.front());
  for (const auto& a : face.lattice_points)
    if (w.dot(a) != n) throw DomainError("weight " + w.to_string() + " is not constant on the face");
  if (n <= 0) throw DomainError("weight " + w.to_string() + " gives non-positive degree on the face");
  return n;
}

}  // namespace milnor
