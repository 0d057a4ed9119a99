#pragma once

#include "chow/polynomial.hpp"
#include "chow/rational.hpp"

#include <concepts>
#include <string>

namespace chow {

/// Coefficient domains the class calculus is templated over: exact
/// rationals, or polynomials in the formal rank variable `a`.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Polynomial>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Exact quotient; throws SolverError when `den` does not divide `num`.
inline Rational divide_exact(const Rational& num, const Rational& den) {
  if (den.is_zero()) throw SolverError("division by zero scalar");
  return num / den;
}

inline Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw SolverError("division by zero polynomial");
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw SolverError("polynomial " + to_string(den) + " does not divide " + to_string(num));
  return q;
}

/// binom(upper, m) = upper (upper - 1) ... (upper - m + 1) / m!, valid for
/// symbolic `upper`. binom(upper, 0) = 1 and binom(upper, m < 0) = 0.
template <Scalar S>
S binomial(const S& upper, int m) {
  if (m < 0) return S(Rational(0));
  S acc(Rational(1));
  Rational factorial(1);
  for (int j = 0; j < m; ++j) {
    acc = acc * (upper - S(Rational(j)));
    factorial *= Rational(j + 1);
  }
  return acc / factorial;
}

inline Rational evaluate_at(const Rational& r, const Rational&) { return r; }
inline Rational evaluate_at(const Polynomial& p, const Rational& a) { return p.evaluate(a); }

} // namespace chow
