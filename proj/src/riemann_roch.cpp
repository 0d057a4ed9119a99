#include "chow/riemann_roch.hpp"

namespace chow {

const RingPtr& projective_plane_ring() {
  static const RingPtr ring = [] {
    RingPresentation::Spec spec;
    spec.generators = {{"h", 1}};
    spec.rules = {{{3}, {}}};
    spec.top_degree = 2;
    spec.point = Exponents{2};
    return RingPresentation::create(std::move(spec));
  }();
  return ring;
}

BundleClass<Rational> line_bundle_p2(std::int64_t d) {
  const auto& ring = projective_plane_ring();
  return BundleClass<Rational>::line(PresentedElement<Rational>::generator(ring, "h") * Rational(d));
}

const BundleClass<Rational>& tangent_class_p2() {
  static const BundleClass<Rational> tangent = [] {
    const auto o1 = line_bundle_p2(1);
    const auto sum = whitney_sum(whitney_sum(o1, o1), o1);
    return virtual_difference(sum, BundleClass<Rational>::trivial(projective_plane_ring(), Rational(1)));
  }();
  return tangent;
}

const BundleClass<Rational>& q_defining_bundle() {
  static const BundleClass<Rational> bundle = [] {
    const auto h = PresentedElement<Rational>::generator(projective_plane_ring(), "h");
    return whitney_sum(line_bundle_p2(1), twist_by_line(tangent_class_p2(), -h));
  }();
  return bundle;
}

const RingPtr& q_ring() {
  static const RingPtr ring = projective_bundle_ring(projective_plane_ring(), q_defining_bundle(), "H", {"R"});
  return ring;
}

const BundleClass<Rational>& relative_tangent_class_q() {
  static const BundleClass<Rational> tangent = [] {
    const auto& ring = q_ring();
    const auto H = PresentedElement<Rational>::generator(ring, "H");
    const auto twisted = twist_by_line(dual(pullback(q_defining_bundle(), ring)), H);
    return virtual_difference(twisted, BundleClass<Rational>::trivial(ring, Rational(1)));
  }();
  return tangent;
}

const BundleClass<Rational>& tangent_class_q() {
  static const BundleClass<Rational> tangent =
      whitney_sum(relative_tangent_class_q(), pullback(tangent_class_p2(), q_ring()));
  return tangent;
}

PlaneMonadCohomology monad_cohomology_counts(std::int64_t a) {
  if (a <= 0) throw InputError("monad rank a must be positive, got " + std::to_string(a));
  const auto ctx = projective_plane_context<Rational>();
  const auto& ring = projective_plane_ring();
  const auto h = PresentedElement<Rational>::generator(ring, "h");
  // Rank 2, c1 = 0, c2 = a on the plane.
  const BundleClass<Rational> E(Rational(2), PresentedElement<Rational>::constant(ring, Rational(1)) + h * h * Rational(a));
  const auto omega = dual(tangent_class_p2());

  PlaneMonadCohomology out;
  out.h1_twist_minus1 = (-euler_characteristic(ctx, twist_by_line(E, -h))).to_int64();
  out.h1_twist_minus2 = (-euler_characteristic(ctx, twist_by_line(E, -h * Rational(2)))).to_int64();
  out.h1_omega = (-euler_characteristic(ctx, E, omega)).to_int64();
  out.assumption = "h^0 = h^2 = 0 for E(-1), E(-2) and E (x) Omega^1, as forced by the monad display";
  return out;
}

namespace {

PresentedElement<Rational> solve_plane_class(const Rational& r2, const Rational& rh, const Rational& h2) {
  const auto& ring = q_ring();
  const auto R = PresentedElement<Rational>::generator(ring, "R");
  const auto H = PresentedElement<Rational>::generator(ring, "H");
  return solve_class_by_pairing(ring, 2, {{R * R, r2}, {R * H, rh}, {H * H, h2}});
}

} // namespace

const PresentedElement<Rational>& alpha_plane_class_q() {
  static const PresentedElement<Rational> cls = solve_plane_class(1, 1, 1);
  return cls;
}

const PresentedElement<Rational>& beta_plane_class_q() {
  static const PresentedElement<Rational> cls = solve_plane_class(0, 1, 1);
  return cls;
}

} // namespace chow
