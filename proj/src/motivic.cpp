#include "milnor/motivic.hpp"

#include <numeric>
#include <sstream>

#include "milnor/cone.hpp"
#include "milnor/lattice.hpp"
#include "milnor/nondegeneracy.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

namespace {

std::string product_name(const ProductKey& k) {
  std::vector<std::string> parts;
  if (k.orbit != 1) parts.push_back("O_" + std::to_string(k.orbit));
  if (k.torus != 0) parts.push_back("T^" + std::to_string(k.torus));
  if (k.lefschetz != 0) parts.push_back("L^" + std::to_string(k.lefschetz));
  if (parts.empty()) return "pt";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

}  // namespace

std::string to_string(const GeneratorKey& g) {
  if (const auto* p = std::get_if<ProductKey>(&g)) return product_name(*p);
  const auto& o = std::get<OpaqueKey>(g);
  std::string s = "Opaque{";
  for (std::size_t i = 0; i < o.face_vertices.size(); ++i) {
    if (i) s += ",";
    s += o.face_vertices[i].to_string();
  }
  s += "; d=" + std::to_string(o.ambient_dim) + "; " + o.face_polynomial + "}";
  return s;
}

ClassExpr ClassExpr::generator(GeneratorKey g, std::int64_t coeff) {
  if (const auto* p = std::get_if<ProductKey>(&g)) {
    if (p->orbit < 1) throw DomainError("orbit order must be positive");
    if (p->torus < 0 || p->lefschetz < 0) throw DomainError("negative torus or Lefschetz exponent");
  }
  ClassExpr x;
  x.add(g, coeff);
  return x;
}

void ClassExpr::add(const GeneratorKey& g, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

bool ClassExpr::has_opaque() const {
  for (const auto& [g, c] : terms_)
    if (std::holds_alternative<OpaqueKey>(g)) return true;
  return false;
}

std::int64_t ClassExpr::coefficient(const GeneratorKey& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

ClassExpr ClassExpr::operator+(const ClassExpr& o) const {
  ClassExpr r = *this;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

ClassExpr ClassExpr::operator-(const ClassExpr& o) const { return *this + (-o); }

ClassExpr ClassExpr::operator-() const { return *this * std::int64_t{-1}; }

ClassExpr ClassExpr::operator*(std::int64_t k) const {
  ClassExpr r;
  for (const auto& [g, c] : terms_) r.add(g, checked::mul(c, k));
  return r;
}

ClassExpr ClassExpr::operator*(const ClassExpr& o) const {
  ClassExpr r;
  for (const auto& [g1, c1] : terms_) {
    for (const auto& [g2, c2] : o.terms_) {
      const auto* p1 = std::get_if<ProductKey>(&g1);
      const auto* p2 = std::get_if<ProductKey>(&g2);
      if (!p1 || !p2) throw DomainError("product with an opaque class is not supported");
      if (p1->orbit != 1 && p2->orbit != 1)
        throw DomainError("product of two nontrivial orbits is not supported");
      ProductKey k{p1->orbit * p2->orbit, checked::add(p1->torus, p2->torus),
                   checked::add(p1->lefschetz, p2->lefschetz)};
      r.add(k, checked::mul(c1, c2));
    }
  }
  return r;
}

ClassExpr ClassExpr::product_part() const {
  ClassExpr r;
  for (const auto& [g, c] : terms_)
    if (std::holds_alternative<ProductKey>(g)) r.add(g, c);
  return r;
}

ClassExpr ClassExpr::opaque_part() const {
  ClassExpr r;
  for (const auto& [g, c] : terms_)
    if (std::holds_alternative<OpaqueKey>(g)) r.add(g, c);
  return r;
}

std::string ClassExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) s += std::to_string(a) + "*";
    s += milnor::to_string(g);
    first = false;
  }
  return s;
}

ClassExpr reduce_vertex_fiber(const LaurentPoly& f_gamma, const ExponentVector& weight) {
  if (f_gamma.terms().size() != 1) throw DomainError("vertex fiber expects a single term");
  const auto& a = f_gamma.terms().begin()->first;
  if (a.is_zero()) throw DomainError("vertex fiber of a constant term");
  if (weight.size() != a.size()) throw DomainError("weight dimension mismatch");
  if (a.dot(weight) <= 0) throw DomainError("weight degree N must be positive");
  const auto d = static_cast<std::int64_t>(a.size());
  return ClassExpr::generator(ProductKey{a.content(), d - 1, 0});
}

EdgeData edge_data(const LaurentPoly& f, const Face& edge) {
  if (edge.dim != 1 || !edge.base_point) throw DomainError("edge_data expects a one-dimensional face");
  const auto d = edge.vertices.front().size();
  if (d < 2) throw InternalError("edge face in dimension one");
  const UPoly q = edge_polynomial(f, edge);
  EdgeData out;
  out.lattice_length = q.degree();
  out.distinct_roots = squarefree_part(q).degree();

  const auto frame = complete_to_unimodular({edge.direction_basis.front()}, d);
  const auto coords = frame_coordinates(frame, *edge.base_point);
  BigInt g = 0;
  for (std::size_t i = 1; i < coords.size(); ++i) g = gcd(g, BigInt(coords[i]));
  // A zero residue means the edge line passes through the origin, which
  // cannot happen for a face of the polyhedron at infinity not containing 0.
  if (g == 0) throw InternalError("edge line through the origin has no reduced fiber formula");
  out.offset_content = to_int64(g);
  return out;
}

ClassExpr reduce_edge_fiber(const LaurentPoly& f, const Face& edge, const ExponentVector& weight,
                            bool allow_degenerate) {
  const std::int64_t n = face_degree(edge, weight);
  const EdgeData e = edge_data(f, edge);
  if (n % e.offset_content != 0) throw InternalError("edge degree not divisible by its offset content");
  std::int64_t ell = e.lattice_length;
  if (e.distinct_roots != e.lattice_length) {
    if (!allow_degenerate)
      throw DegenerateFaceError("edge " + edge.vertices.front().to_string() + "-" +
                                edge.vertices.back().to_string() + " is degenerate (repeated roots)");
    ell = e.distinct_roots;
  }
  const auto d = static_cast<std::int64_t>(edge.vertices.front().size());
  return ClassExpr::generator(ProductKey{e.offset_content, d - 1, 0}) -
         ClassExpr::generator(ProductKey{e.offset_content, d - 2, 0}) * ell;
}

ClassExpr fiber_class(const LaurentPoly& f, const Face& face, const ExponentVector& weight,
                      bool allow_degenerate) {
  if (face.dim < 0 || face.contains_origin) throw DomainError("fiber_class expects a face of Gamma_-");
  const LaurentPoly f_gamma = restrict_to_points(f, face.lattice_points);
  if (face.dim == 0) return reduce_vertex_fiber(f_gamma, weight);
  if (face.dim == 1) return reduce_edge_fiber(f, face, weight, allow_degenerate);
  face_degree(face, weight);  // validates the weight
  return ClassExpr::generator(OpaqueKey{face.vertices, face.vertices.front().size(), f_gamma.to_string()});
}

ClassExpr assemble_s_infinity(const std::vector<FaceContribution>& faces) {
  ClassExpr s;
  for (const auto& row : faces) s = s - row.fiber * static_cast<std::int64_t>(row.chi);
  return s;
}

std::string total_space_symbol(const LaurentPoly& f_gamma, const ExponentVector& weight) {
  const std::string p = f_gamma.to_string();
  std::ostringstream os;
  os << "[G_m^" << f_gamma.dimension() << " \\ {" << p << " = 0}, (" << p << ")^-1, sigma(w="
     << weight.to_string() << ")]";
  return os.str();
}

}  // namespace milnor
