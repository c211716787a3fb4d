#include "stern/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "stern/error.hpp"

namespace stern {

MPoly::MPoly(int vars) : vars_(vars) {
  if (vars < 1) throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one variable");
}

MPoly MPoly::constant(int vars, const Rational& c) {
  MPoly out(vars);
  out.add_term(Exponent(vars, 0), c);
  return out;
}

MPoly MPoly::variable(int vars, int index) {
  MPoly out(vars);
  Exponent e(vars, 0);
  e.at(index) = 1;
  out.add_term(e, Rational(1));
  return out;
}

MPoly MPoly::from_univariate(const Poly& p) {
  MPoly out(1);
  for (int k = 0; k <= p.degree(); ++k) out.add_term({k}, p.coeff(k));
  return out;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coeff(Exponent(vars_, 0)); }

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_) {
    throw Error(ErrorKind::VariableMismatch, "exponent vector has wrong arity");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent MPoly::max_degrees() const {
  Exponent out(vars_, -1);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < vars_; ++i) out[i] = std::max(out[i], e[i]);
  return out;
}

Exponent MPoly::min_degrees() const {
  if (terms_.empty()) return Exponent(vars_, 0);
  Exponent out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < vars_; ++i) out[i] = std::min(out[i], e[i]);
  return out;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::strip_monomial(Exponent* removed) const {
  Exponent m = min_degrees();
  if (removed) *removed = m;
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int i = 0; i < vars_; ++i) f[i] -= m[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::compose_power(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != vars_) throw Error(ErrorKind::VariableMismatch, "compose_power arity");
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int i = 0; i < vars_; ++i) {
      if (k[i] < 1) throw Error(ErrorKind::InvalidArgument, "compose_power needs k >= 1");
      f[i] *= k[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

bool MPoly::is_palindromic() const {
  if (is_zero()) return true;
  MPoly s = strip_monomial();
  Exponent top = s.max_degrees();
  for (const auto& [e, c] : s.terms_) {
    Exponent mirror = e;
    for (int i = 0; i < vars_; ++i) mirror[i] = top[i] - e[i];
    if (s.coeff(mirror) != c) return false;
  }
  return true;
}

bool MPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Poly MPoly::to_univariate() const {
  if (vars_ != 1) throw Error(ErrorKind::VariableMismatch, "polynomial is not univariate");
  std::vector<Rational> v;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(v.size()) <= e[0]) v.resize(e[0] + 1);
    v[e[0]] = c;
  }
  return Poly(std::move(v));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly out = constant(vars_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return out;
}

void MPoly::check_arity(const MPoly& o) const {
  if (o.vars_ != vars_) {
    throw Error(ErrorKind::VariableMismatch,
                "variable counts differ (" + std::to_string(vars_) + " vs " + std::to_string(o.vars_) + ")");
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_arity(o);
  MPoly out(vars_);
  Exponent f(vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < vars_; ++i) f[i] = e1[i] + e2[i];
      out.add_term(f, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << stern::to_string(mag);
      wrote = true;
    }
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x";
      if (vars_ > 1) os << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw Error(ErrorKind::VariableMismatch, "exact_div arity");
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  // Lexicographic division by the leading (largest) term of b.
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  MPoly rem = a;
  MPoly quo(a.vars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent shift(a.vars());
    for (int i = 0; i < a.vars(); ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) {
        throw Error(ErrorKind::DivisionNotExact,
                    "(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
      }
    }
    MPoly t(a.vars());
    t.add_term(shift, rc / lead_c);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int vars) : text_(text), vars_(vars) {}

  MPoly parse() {
    MPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      auto c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor(std::optional<char> c) const {
    return c && (std::isdigit(static_cast<unsigned char>(*c)) || *c == '(' || *c == 'x' || *c == 'y' ||
                 *c == 'z');
  }

  MPoly term() {
    MPoly acc = unary();
    while (true) {
      auto c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        Integer den = integer();
        if (den == 0) fail("division by zero");
        acc *= make_rational(1, den);
      } else if (starts_factor(c)) {
        acc *= unary();  // implicit multiplication: 2x, x1x2
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    auto c = peek();
    if (c == '-') {
      ++pos_;
      return unary() * Rational(-1);
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      Integer e = integer();
      if (e < 0 || e > 100000) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("only rational coefficients are supported");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  MPoly primary() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (*c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) return MPoly::constant(vars_, Rational(integer()));
    if (*c == 'x' || *c == 'y' || *c == 'z') {
      ++pos_;
      int index = (*c == 'x') ? 0 : (*c == 'y' ? 1 : 2);
      if (*c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        index = std::stoi(std::string(text_.substr(start, pos_ - start))) - 1;
        if (index < 0) fail("variables are numbered from x1");
      }
      if (index >= vars_) fail("variable index exceeds arity");
      return MPoly::variable(vars_, index);
    }
    if (std::isalpha(static_cast<unsigned char>(*c))) fail("unsupported symbol (coefficients must be rational)");
    fail("unexpected character");
  }

  std::string_view text_;
  int vars_;
  std::size_t pos_ = 0;
};

int infer_vars(std::string_view text) {
  int vars = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'y') vars = std::max(vars, 2);
    if (c == 'z') vars = std::max(vars, 3);
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i + 1) vars = std::max(vars, std::stoi(std::string(text.substr(i + 1, j - i - 1))));
    }
  }
  return vars;
}

}  // namespace

MPoly parse_poly(std::string_view text, int min_vars) {
  bool is_list = text.find(',') != std::string_view::npos;
  if (!is_list) {
    // A single bare number is also a (constant) coefficient list.
    is_list = text.find_first_not_of("0123456789+-/ ") == std::string_view::npos &&
              text.find_first_of("+-", 1) == std::string_view::npos;
  }
  if (is_list) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      coeffs.push_back(parse_rational(item));
      start = end + 1;
    }
    MPoly uni = MPoly::from_univariate(Poly(std::move(coeffs)));
    if (min_vars <= 1) return uni;
    MPoly out(min_vars);
    for (const auto& [e, c] : uni.terms()) {
      Exponent f(min_vars, 0);
      f[0] = e[0];
      out.add_term(f, c);
    }
    return out;
  }
  int vars = std::max(min_vars, infer_vars(text));
  return PolyParser(text, vars).parse();
}

}  // namespace stern
