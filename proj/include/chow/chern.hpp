#pragma once

#include "chow/presented.hpp"

#include <array>

namespace chow {

/// Rank and total Chern class of a (virtual) bundle over a presented ring.
template <Scalar S>
struct BundleClass {
  S rank;
  PresentedElement<S> chern;

  BundleClass() = default;
  BundleClass(S rank_, PresentedElement<S> chern_) : rank(std::move(rank_)), chern(std::move(chern_)) {
    if (!(chern.component(0) == PresentedElement<S>::constant(chern.ring(), S(Rational(1)))))
      throw InputError("total Chern class must have degree-0 term 1");
  }

  static BundleClass trivial(const RingPtr& ring, const S& rank) {
    return BundleClass(rank, PresentedElement<S>::constant(ring, S(Rational(1))));
  }

  /// Line bundle with first Chern class `c1`.
  static BundleClass line(const PresentedElement<S>& c1) {
    return BundleClass(S(Rational(1)), PresentedElement<S>::constant(c1.ring(), S(Rational(1))) + c1);
  }

  [[nodiscard]] const RingPtr& ring() const { return chern.ring(); }
  [[nodiscard]] PresentedElement<S> c(int i) const { return chern.component(i); }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// Re-expresses a rational bundle class with scalars in S.
template <Scalar S>
BundleClass<S> lift_scalars(const BundleClass<Rational>& F) {
  return BundleClass<S>(S(F.rank), PresentedElement<S>::from_rational(F.ring(), F.chern));
}

template <Scalar S>
BundleClass<S> whitney_sum(const BundleClass<S>& F, const BundleClass<S>& G) {
  if (F.ring() != G.ring()) throw InputError("Whitney sum of bundles over different rings");
  return BundleClass<S>(F.rank + G.rank, F.chern * G.chern);
}

template <Scalar S>
BundleClass<S> dual(const BundleClass<S>& F) {
  PresentedElement<S> out(F.ring());
  for (int i = 0; i <= F.ring()->top_degree(); ++i) {
    auto ci = F.c(i);
    out += (i % 2 == 0) ? ci : -ci;
  }
  return BundleClass<S>(F.rank, out);
}

/// c_k(F (x) L) = sum_i binom(rank - i, k - i) c_1(L)^{k-i} c_i(F), with the
/// binomial evaluated symbolically when the rank is a polynomial.
template <Scalar S>
BundleClass<S> twist_by_line(const BundleClass<S>& F, const PresentedElement<S>& line_class) {
  if (F.ring() != line_class.ring()) throw InputError("twist by a line class from another ring");
  for (const auto& [m, c] : line_class.terms()) {
    (void)c;
    if (F.ring()->degree(m) != 1) throw InputError("twisting class must be homogeneous of degree 1");
  }
  const int top = F.ring()->top_degree();
  std::vector<PresentedElement<S>> powers{PresentedElement<S>::constant(F.ring(), S(Rational(1)))};
  for (int j = 1; j <= top; ++j) powers.push_back(powers.back() * line_class);

  PresentedElement<S> out(F.ring());
  for (int k = 0; k <= top; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto ci = F.c(i);
      if (ci.is_zero()) continue;
      const S coeff = binomial(F.rank - S(Rational(i)), k - i);
      if (chow::is_zero(coeff)) continue;
      out += (ci * powers[k - i]) * coeff;
    }
  }
  return BundleClass<S>(F.rank, out);
}

/// Power sums p_1..p_4 of the Chern roots via Newton's identities.
template <Scalar S>
std::array<PresentedElement<S>, 5> power_sums(const BundleClass<S>& F) {
  const auto c1 = F.c(1), c2 = F.c(2), c3 = F.c(3), c4 = F.c(4);
  const auto k = [](std::int64_t v) { return S(Rational(v)); };
  std::array<PresentedElement<S>, 5> p;
  p[0] = PresentedElement<S>::constant(F.ring(), F.rank);
  p[1] = c1;
  p[2] = c1 * c1 - c2 * k(2);
  p[3] = c1 * c1 * c1 - c1 * c2 * k(3) + c3 * k(3);
  p[4] = c1 * c1 * c1 * c1 - c1 * c1 * c2 * k(4) + c1 * c3 * k(4) + c2 * c2 * k(2) - c4 * k(4);
  return p;
}

/// ch(F) = rank + sum_j p_j / j!, through degree 4.
template <Scalar S>
PresentedElement<S> chern_character(const BundleClass<S>& F) {
  if (F.ring()->top_degree() > 4) throw InputError("Chern character is implemented through degree 4");
  const auto p = power_sums(F);
  const std::array<std::int64_t, 5> factorial{1, 1, 2, 6, 24};
  PresentedElement<S> out(F.ring());
  for (int j = 0; j <= 4; ++j) out += p[j] * S(Rational(1, factorial[j]));
  return out;
}

/// td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24 - (c1^4 - 4c1^2c2 - 3c2^2 - c1c3 + c4)/720.
template <Scalar S>
PresentedElement<S> todd_class(const BundleClass<S>& tangent) {
  if (tangent.ring()->top_degree() > 4) throw InputError("Todd class is implemented through degree 4");
  const auto c1 = tangent.c(1), c2 = tangent.c(2), c3 = tangent.c(3), c4 = tangent.c(4);
  const auto q = [](std::int64_t n, std::int64_t d) { return S(Rational(n, d)); };
  const auto k = [](std::int64_t v) { return S(Rational(v)); };
  PresentedElement<S> td = PresentedElement<S>::constant(tangent.ring(), k(1));
  td += c1 * q(1, 2);
  td += (c1 * c1 + c2) * q(1, 12);
  td += (c1 * c2) * q(1, 24);
  td -= (c1 * c1 * c1 * c1 - c1 * c1 * c2 * k(4) - c2 * c2 * k(3) - c1 * c3 + c4) * q(1, 720);
  return td;
}

/// Virtual difference F - G (rank subtracts, Chern class divides).
template <Scalar S>
BundleClass<S> virtual_difference(const BundleClass<S>& F, const BundleClass<S>& G) {
  if (F.ring() != G.ring()) throw InputError("difference of bundles over different rings");
  // Invert c(G) = 1 + x as 1 - x + x^2 - ..., truncated at the top degree.
  const auto one = PresentedElement<S>::constant(G.ring(), S(Rational(1)));
  const auto x = G.chern - one;
  PresentedElement<S> inverse = one;
  PresentedElement<S> term = one;
  for (int i = 1; i <= G.ring()->top_degree(); ++i) {
    term = -(term * x);
    inverse += term;
  }
  return BundleClass<S>(F.rank - G.rank, F.chern * inverse);
}

template <Scalar S>
BundleClass<S> pullback(const BundleClass<S>& F, const RingPtr& target) {
  return BundleClass<S>(F.rank, pullback(F.chern, target));
}

/// Convenience overload taking the bundle class directly.
inline RingPtr projective_bundle_ring(const RingPtr& base, const BundleClass<Rational>& bundle,
                                      const std::string& generator_name,
                                      const std::vector<std::string>& base_names = {}) {
  if (!bundle.rank.is_integer()) throw InputError("projective bundle needs an integral rank");
  return projective_bundle_ring(base, static_cast<int>(bundle.rank.to_int64()), bundle.chern, generator_name,
                                base_names);
}

} // namespace chow
