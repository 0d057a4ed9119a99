#pragma once

#include "chow/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chow {

/// Univariate polynomial in the formal variable `a` with rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant); // NOLINT: constants embed implicitly
  Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {} // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  /// The polynomial `a`.
  static Polynomial variable();

  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(std::size_t power) const;
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational evaluate(const Rational& at) const;
  /// Substitutes another polynomial for `a`.
  [[nodiscard]] Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator/(Polynomial p, const Rational& s) { return p /= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Human-readable form such as "5/216*a^4 - 29/216*a^3 + 2".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Factorization over the rationals into a leading constant, linear factors
/// (a - root)^multiplicity and a residual factor without rational roots.
struct RationalFactorization {
  bool identically_zero = false;
  Rational leading;
  std::vector<std::pair<Rational, int>> roots; // ascending by root
  Polynomial residual;                         // monic, no rational roots
};

RationalFactorization factor_over_rationals(const Polynomial& p);

/// Rebuilds the expanded polynomial from a factorization.
Polynomial expand(const RationalFactorization& f);

std::string to_string(const RationalFactorization& f);

} // namespace chow
