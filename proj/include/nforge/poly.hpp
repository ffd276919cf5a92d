#ifndef NFORGE_POLY_HPP
#define NFORGE_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nforge {

using Rat = mpq_class;
using Int = mpz_class;

/// Dense univariate polynomial over Q in the parameter t.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);  // coeffs[k] * t^k

  static Poly variable();             // t
  static Poly monomial(long degree);  // t^degree

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(long k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly pow(long e) const;
  Poly derivative() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;

  /// Coefficients of p(c + u) in u, truncated to u^order inclusive.
  std::vector<Rat> expand_at(const Rat& center, long order) const;

  /// Vanishing order at t = center (degree+1 if identically zero-ish cap).
  long order_at(const Rat& center) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd over Q (Euclid); used for detecting undeclared critical points.
Poly poly_gcd(Poly a, Poly b);

/// Rational roots of p (exact, via the rational root theorem on the
/// primitive integer form).
std::vector<Rat> rational_roots(const Poly& p);

/// Parses the fixed curve-file grammar: integer/rational coefficients,
/// operators + - * ^, variable t, parentheses.  Throws ParseError with
/// the offending position.
Poly parse_poly(const std::string& text);

}  // namespace nforge

#endif
