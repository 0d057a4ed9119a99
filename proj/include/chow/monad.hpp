#pragma once

#include "chow/riemann_roch.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chow {

/// Chern data of the monad
///   0 -> p*E1^v(-H) -> p*E0 -> p*E1(H) -> 0,   cohomology E,
/// on Q, for c(E) = 1 + a[P_alpha]. Scalars are rationals for a numeric
/// rank a, or polynomials in a for the symbolic run.
template <Scalar S>
struct MonadConstants {
  S a;
  S d;                     // c1(E1) = d h
  S c;                     // sum of squared Chern roots of E1 = c h^2
  S b;                     // c2(E0) = b h^2
  PresentedElement<S> c1_E1; // on P^2
  PresentedElement<S> c2_E1; // on P^2
};

/// Resolves the unknowns in the order: beta-plane pairing fixes d, vanishing
/// of c4(p*E0) fixes c, alpha-plane pairing fixes b. Each constraint is
/// evaluated at probe values of its unknown, checked to be affine, and solved
/// exactly. Throws SolverError if a constraint is degenerate.
template <Scalar S>
MonadConstants<S> derive_constants(const S& a);

/// E1 on P^2: rank a, c1 = d h, c2 = (d^2 - c)/2 h^2.
template <Scalar S>
BundleClass<S> e1_bundle(const S& a, const S& d, const S& c);

/// p*E1 (x) O(H) on Q; its Chern classes are the e_k.
template <Scalar S>
BundleClass<S> twisted_e1(const S& a, const S& d, const S& c);

/// E on Q: rank 2, c(E) = 1 + a[P_alpha].
template <Scalar S>
BundleClass<S> monad_cohomology_bundle(const S& a);

/// f = c(E) c(p*E1(H)) c(p*E1^v(-H)), which the monad equates with c(p*E0).
template <Scalar S>
PresentedElement<S> monad_chern_product(const S& a, const S& d, const S& c);

template <Scalar S>
struct EulerCharacteristics {
  S chi_E;           // chi(E) on Q
  S chi_sum;         // chi(p*E1(H)) + chi(p*E1^v(-H)) on Q
  S chi_E0;          // chi(E0) on P^2
  S chi_pullback_E0; // chi(p*E0) on Q, equal to chi_E0
};

template <Scalar S>
EulerCharacteristics<S> compute_chis(const MonadConstants<S>& k);

struct PhiResult {
  Polynomial phi; // chi_E0 - (chi_E + chi_sum)
  RationalFactorization factorization;
};

/// Symbolic Phi(a) and its factorization over Q.
PhiResult compute_phi();

enum class Conclusion { ExcludedByPhi, ExcludedByIntegrality, NotExcluded, NotApplicable };

std::string_view to_string(Conclusion c);

struct IntegralityFailure {
  std::int64_t a = 0;
  std::string quantity; // "chi_E" or "chi_E0"
  Rational value;
};

/// Integrality of a derived constant; informational only.
struct SideCondition {
  std::string quantity;
  Rational value;
  bool integral = false;
};

struct MonadVerdict {
  std::optional<std::int64_t> a; // empty for the symbolic run
  Polynomial d, c, b;
  PresentedElement<Polynomial> c1_E1, c2_E1;
  std::array<PresentedElement<Polynomial>, 4> twist_e; // e1..e4
  Polynomial monad_e;                                  // t^4 coefficient of f, after substitution
  bool c2_identity_holds = false; // a[P_alpha] == (b+c)R^2 + 2dRH + aH^2
  bool f_matches_e0 = false;      // f == 1 + b R^2
  Polynomial chi_E, chi_sum, chi_E0, phi;
  std::optional<RationalFactorization> phi_factorization; // symbolic run only
  std::vector<IntegralityFailure> integrality_failures;
  std::vector<SideCondition> side_conditions;
  Conclusion conclusion = Conclusion::NotApplicable;
  std::vector<std::string> assumptions;
};

MonadVerdict monad_verdict_symbolic();
MonadVerdict monad_verdict(std::int64_t a);

/// Verdicts for a = 1..a_max, evaluated concurrently, returned in order.
std::vector<MonadVerdict> verify_nonexistence(std::int64_t a_max);

extern template MonadConstants<Rational> derive_constants(const Rational&);
extern template MonadConstants<Polynomial> derive_constants(const Polynomial&);
extern template EulerCharacteristics<Rational> compute_chis(const MonadConstants<Rational>&);
extern template EulerCharacteristics<Polynomial> compute_chis(const MonadConstants<Polynomial>&);

} // namespace chow
