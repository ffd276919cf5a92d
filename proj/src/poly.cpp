#include "nforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "nforge/errors.hpp"

namespace nforge {

Poly::Poly(Rat constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(1); }

Poly Poly::monomial(long degree) {
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = 1;
  return Poly(std::move(c));
}

Rat Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return Rat(0);
  return c_[k];
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::pow(long e) const {
  if (e < 0) fail(errc::invalid_argument, "negative polynomial power");
  Poly r(Rat(1));
  Poly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rat> Poly::expand_at(const Rat& center, long order) const {
  // Taylor shift by repeated synthetic division: after dividing by
  // (t - c) in place, slot 0 holds the remainder and the rest the
  // quotient, so the remainders in order are the u^k coefficients.
  std::vector<Rat> w(c_.begin(), c_.end());
  std::vector<Rat> out(order + 1, Rat(0));
  for (long k = 0; k <= order && !w.empty(); ++k) {
    for (long i = static_cast<long>(w.size()) - 2; i >= 0; --i) w[i] += center * w[i + 1];
    out[k] = w.front();
    w.erase(w.begin());
  }
  return out;
}

long Poly::order_at(const Rat& center) const {
  if (is_zero()) return LONG_MAX / 4;  // never attained by a nonzero input
  const auto e = expand_at(center, degree());
  for (long k = 0; k < static_cast<long>(e.size()); ++k)
    if (e[k] != 0) return k;
  return LONG_MAX / 4;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    Rat mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    // remainder of a by b
    Poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const long shift = r.degree() - b.degree();
      Rat factor = r.coeffs().back() / b.coeffs().back();
      std::vector<Rat> sub(shift + b.degree() + 1, Rat(0));
      for (long i = 0; i <= b.degree(); ++i) sub[i + shift] = b.coeffs()[i] * factor;
      r = r - Poly(std::move(sub));
    }
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    // make monic
    std::vector<Rat> c(a.coeffs());
    const Rat lead = c.back();
    for (auto& x : c) x /= lead;
    a = Poly(std::move(c));
  }
  return a;
}

std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  // Clear denominators to a primitive integer polynomial.
  Int den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, Int(c.get_den()));
  std::vector<Int> ic;
  for (const auto& c : p.coeffs()) ic.push_back(Int(c.get_num()) * (den / Int(c.get_den())));
  long lo = 0;
  while (lo < static_cast<long>(ic.size()) && ic[lo] == 0) ++lo;
  // t = 0 root
  if (lo > 0) roots.push_back(Rat(0));
  if (lo >= static_cast<long>(ic.size())) return roots;
  const Int a0 = abs(ic[lo]);
  const Int an = abs(ic.back());
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    for (Int d(1); d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    return out;
  };
  for (const Int& p_div : divisors(a0))
    for (const Int& q_div : divisors(an)) {
      for (int sign : {1, -1}) {
        Rat cand(sign * p_div, q_div);
        cand.canonicalize();
        if (p.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void die(const std::string& msg) {
    fail(errc::parse_error, msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) die("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  Poly number() {
    const long num = integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      // lookahead: only treat as a fraction when a digit follows
      size_t save = pos;
      ++pos;
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        const long den = integer();
        if (den == 0) die("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return Poly(r);
      }
      pos = save;
    }
    return Poly(Rat(num));
  }

  Poly base() {
    skip_ws();
    if (pos >= s.size()) die("unexpected end of input");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (!eat(')')) die("expected ')'");
      return e;
    }
    if (c == 't' || c == 'x' || c == 'u') {  // x and u are accepted aliases
      ++pos;
      return Poly::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '-') {
      ++pos;
      return Poly(Rat(0)) - factor();
    }
    die("unexpected character '" + std::string(1, c) + "'");
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      const long e = integer();
      if (e < 0) die("negative exponent");
      return b.pow(e);
    }
    return b;
  }

  Poly term() {
    Poly p = factor();
    while (peek() == '*') {
      eat('*');
      p = p * factor();
    }
    return p;
  }

  Poly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      eat('-');
      neg = true;
    } else if (peek() == '+') {
      eat('+');
    }
    Poly p = term();
    if (neg) p = Poly(Rat(0)) - p;
    while (true) {
      const char c = peek();
      if (c == '+') {
        eat('+');
        p = p + term();
      } else if (c == '-') {
        eat('-');
        p = p - term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser parser(text);
  Poly p = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.die("trailing input");
  return p;
}

}  // namespace nforge
