#include "milnor/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace milnor {

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t ExponentVector::degree() const {
  std::int64_t s = 0;
  for (auto v : entries_) s = checked::add(s, v);
  return s;
}

std::int64_t ExponentVector::content() const {
  std::int64_t g = 0;
  for (auto v : entries_) g = gcd64(g, v);
  return g;
}

std::int64_t ExponentVector::dot(const ExponentVector& other) const {
  if (other.size() != size()) throw DomainError("dimension mismatch in inner product");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) s = checked::add(s, checked::mul(entries_[i], other[i]));
  return s;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) throw DomainError("dimension mismatch");
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::add(entries_[i], other[i]);
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (other.size() != size()) throw DomainError("dimension mismatch");
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::sub(entries_[i], other[i]);
  return r;
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::mul(entries_[i], k);
  return r;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

bool GradedLexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void validate_variables(const std::vector<std::string>& vars) {
  if (vars.empty()) throw DomainError("a polynomial needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  validate_variables(variables_);
}

LaurentPoly::LaurentPoly(std::vector<std::string> variables, TermMap terms)
    : variables_(std::move(variables)) {
  validate_variables(variables_);
  for (auto& [e, c] : terms) add_term(e, c);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto v : e)
      if (v < 0) return false;
  return true;
}

Rational LaurentPoly::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& exponent, const Rational& c) {
  if (exponent.size() != dimension()) throw DomainError("exponent vector has wrong dimension");
  if (c == 0) return;
  Rational canon = c;
  canon.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, canon);
  if (!inserted) {
    it->second += canon;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        factors.push_back(variables_[i]);
      else
        factors.push_back(variables_[i] + "^" + std::to_string(e[i]));
    }
    const bool unit = (mag == 1);
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly out(vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [exp, coeff] = term();
      if (sign < 0) coeff = -coeff;
      out.add_term(exp, coeff);
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<ExponentVector, Rational> term() {
    ExponentVector exp(vars_.size());
    Rational coeff(1);
    bool any = false;
    bool last_was_coeff = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (any && !last_was_star_) throw ParseError("expected '*' before coefficient", pos_);
        coeff *= coefficient();
        last_was_coeff = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        if (any && !last_was_star_ && !last_was_coeff) throw ParseError("expected '*' between factors", pos_);
        factor(exp);
        last_was_coeff = false;
      } else {
        throw ParseError(any ? "expected factor after '*'" : "expected term", pos_);
      }
      any = true;
      last_was_star_ = false;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        last_was_star_ = true;
        continue;
      }
      // Juxtaposition "3x" is allowed directly after a coefficient.
      if (last_was_coeff && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) continue;
      break;
    }
    return {exp, coeff};
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Rational coefficient() {
    BigInt num = integer();
    skip_ws();
    if (peek() == '/') {
      const std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      BigInt den = integer();
      if (den == 0) throw ParseError("division by zero", slash);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  std::int64_t exponent() {
    skip_ws();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = (peek() == '-');
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    std::int64_t value = 0;
    auto digits = text_.substr(start, pos_ - start);
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec != std::errc()) throw ParseError("exponent out of 63-bit range", start);
    if (negative) value = -value;
    if (paren) {
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return value;
  }

  void factor(ExponentVector& exp) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariableError(name, start);
    std::int64_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      power = exponent();
    }
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    exp[idx] = checked::add(exp[idx], power);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  bool last_was_star_ = false;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& variables) {
  validate_variables(variables);
  return Parser(text, variables).run();
}

std::vector<std::string> parse_variable_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name(list.substr(start, comma - start));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    out.push_back(name);
    start = comma + 1;
  }
  validate_variables(out);
  return out;
}

std::set<ExponentVector> support(const LaurentPoly& f) {
  std::set<ExponentVector> out;
  for (const auto& [e, c] : f.terms()) out.insert(e);
  return out;
}

LaurentPoly restrict_to_points(const LaurentPoly& f, std::span<const ExponentVector> points) {
  LaurentPoly out(f.variables());
  for (const auto& p : points) {
    auto c = f.coefficient(p);
    if (c != 0) out.add_term(p, c);
  }
  return out;
}

StratumRestriction stratum_restriction(const LaurentPoly& f, const std::vector<std::size_t>& zeroed) {
  std::vector<bool> is_zeroed(f.dimension(), false);
  for (auto i : zeroed) {
    if (i >= f.dimension()) throw DomainError("zeroed variable index out of range");
    is_zeroed[i] = true;
  }
  std::vector<std::string> kept_vars;
  std::vector<std::size_t> kept_idx;
  for (std::size_t i = 0; i < f.dimension(); ++i)
    if (!is_zeroed[i]) {
      kept_vars.push_back(f.variables()[i]);
      kept_idx.push_back(i);
    }

  std::vector<std::pair<ExponentVector, Rational>> survivors;
  for (const auto& [e, c] : f.terms()) {
    bool vanishes = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!is_zeroed[i]) continue;
      if (e[i] < 0)
        throw DomainError("cannot set " + f.variables()[i] + " = 0: term has negative exponent " +
                          std::to_string(e[i]));
      if (e[i] > 0) vanishes = true;
    }
    if (vanishes) continue;
    ExponentVector reduced(kept_idx.size());
    for (std::size_t k = 0; k < kept_idx.size(); ++k) reduced[k] = e[kept_idx[k]];
    survivors.emplace_back(std::move(reduced), c);
  }

  if (survivors.empty()) return ConstantZero{};
  const bool constant = std::all_of(survivors.begin(), survivors.end(),
                                    [](const auto& t) { return t.first.is_zero(); });
  if (constant) return ConstantValue{survivors.front().second};
  LaurentPoly out(kept_vars);
  for (auto& [e, c] : survivors) out.add_term(e, c);
  return out;
}

}  // namespace milnor
