#include "chow/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace chow {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {Polynomial(), num};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] / d.back();
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += '*';
      out += 'a';
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace

RationalFactorization factor_over_rationals(const Polynomial& p) {
  RationalFactorization out;
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  out.leading = p.leading();
  Polynomial rest = p / p.leading();

  std::vector<std::pair<Rational, int>> roots;
  int zero_mult = 0;
  while (!rest.is_zero() && rest.coefficient(0).is_zero()) {
    rest = divmod(rest, Polynomial::variable()).first;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);

  // Rational root test on the integer-scaled polynomial.
  if (rest.degree() >= 1) {
    BigInt scale = 1;
    for (const auto& c : rest.coefficients()) scale = boost::multiprecision::lcm(scale, c.denominator());
    std::vector<BigInt> ints;
    for (const auto& c : rest.coefficients()) ints.push_back((c * Rational(scale)).numerator());
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& n : nums)
      for (const auto& d : dens)
        for (int s : {1, -1}) candidates.push_back(Rational(n) * Rational(s) / Rational(d));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      const Polynomial linear({-r, Rational(1)});
      while (rest.degree() >= 1 && rest.evaluate(r).is_zero()) {
        rest = divmod(rest, linear).first;
        ++mult;
      }
      if (mult > 0) roots.emplace_back(r, mult);
    }
  }
  std::sort(roots.begin(), roots.end());
  out.roots = std::move(roots);
  out.residual = rest;
  return out;
}

Polynomial expand(const RationalFactorization& f) {
  if (f.identically_zero) return Polynomial();
  Polynomial acc = f.residual * f.leading;
  for (const auto& [root, mult] : f.roots)
    for (int i = 0; i < mult; ++i) acc *= Polynomial({-root, Rational(1)});
  return acc;
}

std::string to_string(const RationalFactorization& f) {
  if (f.identically_zero) return "0";
  std::ostringstream os;
  os << to_string(f.leading);
  for (const auto& [root, mult] : f.roots) {
    os << '*';
    if (root.is_zero()) {
      os << 'a';
    } else {
      os << "(a " << (root.sign() > 0 ? "- " : "+ ") << to_string(abs(root)) << ')';
    }
    if (mult > 1) os << '^' << mult;
  }
  if (!(f.residual == Polynomial(Rational(1)))) os << "*(" << to_string(f.residual) << ')';
  return os.str();
}

} // namespace chow
