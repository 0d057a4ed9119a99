#pragma once

// Independent reference implementations used by the unit and acceptance tests.

#include "chow/riemann_roch.hpp"
#include "chow/schubert.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using chow::Rational;

// Independent oracle: Schur classes in the k x (n-k) box as maps from padded
// partitions to integers, with a hand-rolled Pieri rule and Giambelli's
// determinant sigma_lambda = det(sigma_{lambda_i + j - i}).
using Shape = std::vector<int>; // length k, weakly decreasing
using Vec = std::map<Shape, long long>;

inline void strips(const Shape& lam, int row, int left, int cols, Shape& cur, std::vector<Shape>& out) {
  if (row == static_cast<int>(lam.size())) {
    if (left == 0) out.push_back(cur);
    return;
  }
  // New row length: between lam[row] and min(previous old row length, cols).
  const int upper = row == 0 ? cols : lam[row - 1];
  for (int len = lam[row]; len <= upper && len - lam[row] <= left; ++len) {
    cur[row] = len;
    strips(lam, row + 1, left - (len - lam[row]), cols, cur, out);
  }
}

inline Vec pieri(const Vec& v, int p, int k, int cols) {
  Vec out;
  if (p < 0 || p > cols) return out;
  for (const auto& [lam, c] : v) {
    std::vector<Shape> next;
    Shape cur(k);
    strips(lam, 0, p, cols, cur, next);
    for (const auto& nu : next) out[nu] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Vec oracle_product(const Shape& lam, const Shape& mu, int k, int cols) {
  // Sum over permutations of the Giambelli determinant, each term applied to sigma_mu by Pieri.
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Vec total;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    Vec term{{mu, 1}};
    for (int i = 0; i < k && !term.empty(); ++i) term = pieri(term, lam[i] + perm[i] - i, k, cols);
    for (const auto& [nu, c] : term) total[nu] += inversions % 2 ? -c : c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

// Oracle: truncated multivariate polynomials in Chern roots x_1..x_r and a
// line class l, multiplied directly from the splitting principle.
struct Poly {
  int vars = 0;
  int top = 4;
  std::map<std::vector<int>, Rational> terms;

  static Poly constant(int vars, Rational c) {
    Poly p{vars, 4, {}};
    p.terms[std::vector<int>(vars, 0)] = c;
    return p;
  }
  static Poly var(int vars, int i, Rational c = 1) {
    Poly p{vars, 4, {}};
    std::vector<int> e(vars, 0);
    e[i] = 1;
    p.terms[e] = c;
    return p;
  }
  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [e, c] : o.terms) out.terms[e] += c;
    out.clean();
    return out;
  }
  Poly operator*(const Poly& o) const {
    Poly out{vars, top, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e(vars);
        int deg = 0;
        for (int i = 0; i < vars; ++i) deg += e[i] = e1[i] + e2[i];
        if (deg <= top) out.terms[e] += c1 * c2;
      }
    out.clean();
    return out;
  }
  void clean() {
    for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
};

// Truncated exp(x) and x / (1 - exp(-x)).
inline Poly series(const Poly& x, const std::vector<Rational>& coeffs) {
  Poly out = Poly::constant(x.vars, 0), power = Poly::constant(x.vars, 1);
  for (const auto& c : coeffs) {
    out = out + power * Poly::constant(x.vars, c);
    power = power * x;
  }
  return out;
}
inline const std::vector<Rational> kExp{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)};
inline const std::vector<Rational> kTodd{1, Rational(1, 2), Rational(1, 12), 0, Rational(-1, 720)};

inline Shape pad(const chow::Partition& p, int k) {
  Shape s(k, 0);
  for (int i = 0; i < p.length(); ++i) s[i] = p[i];
  return s;
}

inline Vec as_vec(const chow::SchubertElement& e) {
  Vec out;
  for (const auto& [lam, c] : e.terms()) out[pad(lam, e.shape().rows())] = c.to_int64();
  return out;
}

// Same ring, as a presented ring, to feed the library.
inline chow::RingPtr roots_ring(int rank) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("l");
  return chow::truncated_polynomial_ring(names, 4);
}

inline Poly to_poly(const chow::PresentedElement<Rational>& e, int vars) {
  Poly p{vars, 4, {}};
  for (const auto& [m, c] : e.terms()) p.terms[m] = c;
  return p;
}

inline chow::BundleClass<Rational> from_roots(const chow::RingPtr& ring, int rank) {
  using Q = chow::PresentedElement<Rational>;
  Q c = Q::constant(ring, 1);
  for (int i = 0; i < rank; ++i) c = c * (Q::constant(ring, 1) + Q::generator(ring, "x" + std::to_string(i + 1)));
  return chow::BundleClass<Rational>(Rational(rank), c);
}

} // namespace oracle
