#pragma once

#include "chow/chern.hpp"

#include <cstdint>
#include <string>

namespace chow {

/// A(P^2) = Q[h]/(h^3), point class h^2.
const RingPtr& projective_plane_ring();

/// A(Q) for Q = P(O(1) + T(-1)) over P^2, generators R (pulled back line
/// class) and H (tautological class), built by projective_bundle_ring.
const RingPtr& q_ring();

/// c(T_P2) from the Euler sequence 0 -> O -> O(1)^3 -> T -> 0.
const BundleClass<Rational>& tangent_class_p2();

/// O(1) + T(-1) on P^2, whose projectivization is Q.
const BundleClass<Rational>& q_defining_bundle();

/// T_{Q/P2} from the relative Euler sequence 0 -> O -> p*W^v (x) O(H) -> T_{Q/P2} -> 0.
const BundleClass<Rational>& relative_tangent_class_q();

/// c(T_Q) = c(T_{Q/P2}) c(p* T_P2).
const BundleClass<Rational>& tangent_class_q();

/// A smooth projective variety as far as Riemann-Roch needs it.
template <Scalar S>
struct VarietyContext {
  RingPtr ring;
  BundleClass<S> tangent;
  int dimension = 0;

  VarietyContext(RingPtr ring_, BundleClass<S> tangent_, int dimension_)
      : ring(std::move(ring_)), tangent(std::move(tangent_)), dimension(dimension_) {
    if (tangent.ring() != ring) throw InputError("tangent class lives over another ring");
    if (!(tangent.rank == S(Rational(dimension)))) throw InputError("tangent rank must equal the dimension");
    if (ring->top_degree() != dimension) throw InputError("ring top degree must equal the dimension");
  }
};

template <Scalar S>
VarietyContext<S> projective_plane_context() {
  return VarietyContext<S>(projective_plane_ring(), lift_scalars<S>(tangent_class_p2()), 2);
}

template <Scalar S>
VarietyContext<S> q_context() {
  return VarietyContext<S>(q_ring(), lift_scalars<S>(tangent_class_q()), 4);
}

/// chi(F) = integral of ch(F) td(T).
template <Scalar S>
S euler_characteristic(const VarietyContext<S>& ctx, const BundleClass<S>& F) {
  if (F.ring() != ctx.ring) throw InputError("bundle is not defined over the variety's ring");
  return (chern_character(F) * todd_class(ctx.tangent)).integrate();
}

/// chi(F (x) G), via ch(F (x) G) = ch(F) ch(G).
template <Scalar S>
S euler_characteristic(const VarietyContext<S>& ctx, const BundleClass<S>& F, const BundleClass<S>& G) {
  if (F.ring() != ctx.ring || G.ring() != ctx.ring) throw InputError("bundle is not defined over the variety's ring");
  return (chern_character(F) * chern_character(G) * todd_class(ctx.tangent)).integrate();
}

/// O(d) on P^2.
BundleClass<Rational> line_bundle_p2(std::int64_t d);

struct PlaneMonadCohomology {
  std::int64_t h1_twist_minus1 = 0; // h^1(E(-1))
  std::int64_t h1_twist_minus2 = 0; // h^1(E(-2))
  std::int64_t h1_omega = 0;        // h^1(E (x) Omega^1)
  std::string assumption;
};

/// h^1 of the twists of a rank-2 bundle with c1 = 0, c2 = a on a plane that
/// is the cohomology of O(-1)^a -> O^{2a+2} -> O(1)^a. The other cohomology
/// groups are taken to vanish, so each h^1 is -chi by Riemann-Roch on P^2.
PlaneMonadCohomology monad_cohomology_counts(std::int64_t a);

/// Pullbacks to Q of the alpha- and beta-plane classes, determined by their
/// pairings with R^2, RH, H^2 (1,1,1 and 0,1,1) rather than written down.
const PresentedElement<Rational>& alpha_plane_class_q();
const PresentedElement<Rational>& beta_plane_class_q();

} // namespace chow
