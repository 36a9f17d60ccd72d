#include "milnor/upoly.hpp"

#include <sstream>

namespace milnor {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, 0);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

void UPoly::divmod(const UPoly& divisor, UPoly& quotient, UPoly& remainder) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  const int nd = degree();
  std::vector<Rational> q(nd >= dd ? static_cast<std::size_t>(nd - dd + 1) : 0, 0);
  const Rational lead = divisor.leading();
  for (int k = nd; k >= dd; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / lead;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
  }
  quotient = UPoly(std::move(q));
  remainder = UPoly(std::move(rem));
}

UPoly UPoly::operator/(const UPoly& o) const {
  UPoly q, r;
  divmod(o, q, r);
  return q;
}

UPoly UPoly::operator%(const UPoly& o) const {
  UPoly q, r;
  divmod(o, q, r);
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::size_t UPoly::low_degree() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

UPoly UPoly::without_zero_root() const {
  return UPoly(std::vector<Rational>(c_.begin() + static_cast<long>(low_degree()), c_.end()));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    UPoly q, r;
    r0.divmod(r1, q, r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly{}, UPoly{}, UPoly{}};
  const Rational inv = Rational(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;  // Newton divided differences
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UPoly result;
  UPoly basis = UPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result = result + basis * dd[i];
    basis = basis * UPoly({-xs[i], Rational(1)});
  }
  return result;
}

}  // namespace milnor
