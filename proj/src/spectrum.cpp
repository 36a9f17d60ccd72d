#include "milnor/spectrum.hpp"

#include <cctype>

namespace milnor {

SpectrumPoly SpectrumPoly::term(const Rational& q, std::int64_t m) {
  SpectrumPoly s;
  s.add(q, m);
  return s;
}

void SpectrumPoly::add(const Rational& q, std::int64_t m) {
  if (m == 0) return;
  Rational key = q;
  key.canonicalize();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, m);
    return;
  }
  it->second = checked::add(it->second, m);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t SpectrumPoly::multiplicity(const Rational& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? 0 : it->second;
}

SpectrumPoly SpectrumPoly::operator+(const SpectrumPoly& o) const {
  SpectrumPoly r = *this;
  for (const auto& [q, m] : o.terms_) r.add(q, m);
  return r;
}

SpectrumPoly SpectrumPoly::operator-(const SpectrumPoly& o) const { return *this + (-o); }

SpectrumPoly SpectrumPoly::operator-() const { return *this * std::int64_t{-1}; }

SpectrumPoly SpectrumPoly::operator*(std::int64_t k) const {
  SpectrumPoly r;
  for (const auto& [q, m] : terms_) r.add(q, checked::mul(m, k));
  return r;
}

SpectrumPoly SpectrumPoly::operator*(const SpectrumPoly& o) const {
  SpectrumPoly r;
  for (const auto& [q1, m1] : terms_)
    for (const auto& [q2, m2] : o.terms_) r.add(Rational(q1 + q2), checked::mul(m1, m2));
  return r;
}

std::string SpectrumPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [q, m] : terms_) {
    if (first) {
      s += std::to_string(m);
    } else {
      s += m < 0 ? " - " : " + ";
      s += std::to_string(m < 0 ? -m : m);
    }
    s += "*t^(" + milnor::to_string(q) + ")";
    first = false;
  }
  return s;
}

namespace {

class SpectrumParser {
 public:
  explicit SpectrumParser(std::string_view s) : s_(s) {}

  SpectrumPoly parse() {
    skip();
    if (s_.substr(pos_) == "0") return {};
    SpectrumPoly out;
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const BigInt m = integer();
      expect("*t^(");
      BigInt num = signed_integer();
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      expect(")");
      Rational q(num, den);
      q.canonicalize();
      out = out + SpectrumPoly::term(q, checked::mul(sign, to_int64(m)));
      first = false;
    }
    if (first) fail("empty spectrum");
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("spectrum: " + what, pos_);
  }
  void expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }
  BigInt signed_integer() {
    if (peek() == '-') {
      ++pos_;
      return -integer();
    }
    return integer();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SpectrumPoly parse_spectrum(std::string_view text) { return SpectrumParser(text).parse(); }

SpectrumPoly sp_of_generator(const ProductKey& g) {
  SpectrumPoly orbit;
  for (std::int64_t j = 0; j < g.orbit; ++j) orbit = orbit + SpectrumPoly::term(Rational(j, g.orbit));
  const SpectrumPoly t_minus_1 = SpectrumPoly::term(1) - SpectrumPoly::term(0);
  SpectrumPoly r = orbit;
  for (std::int64_t i = 0; i < g.torus; ++i) r = r * t_minus_1;
  return r * SpectrumPoly::term(Rational(g.lefschetz));
}

SpectrumResult sp_of_class(const ClassExpr& x) {
  SpectrumResult out;
  for (const auto& [g, c] : x.terms()) {
    if (const auto* p = std::get_if<ProductKey>(&g)) {
      out.value = out.value + sp_of_generator(*p) * c;
    } else {
      out.remainder = out.remainder + ClassExpr::generator(g, c);
    }
  }
  out.partial = !out.remainder.is_zero();
  return out;
}

std::int64_t mass(const SpectrumPoly& s) {
  std::int64_t m = 0;
  for (const auto& [q, k] : s.terms()) m = checked::add(m, k);
  return m;
}

std::int64_t mass(const SpectrumResult& s) {
  if (s.partial) throw DomainError("mass of a partial spectrum");
  return mass(s.value);
}

std::int64_t euler_specialization(const ClassExpr& x) {
  std::int64_t total = 0;
  for (const auto& [g, c] : x.terms()) {
    const auto* p = std::get_if<ProductKey>(&g);
    if (!p) throw DomainError("euler specialization of an opaque class");
    if (p->torus > 0) continue;
    total = checked::add(total, checked::mul(c, p->orbit));
  }
  return total;
}

}  // namespace milnor
