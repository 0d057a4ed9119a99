#include "chow/monad.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace chow {

namespace {

template <Scalar S>
S constant(std::int64_t v) {
  return S(Rational(v));
}

template <Scalar S>
PresentedElement<S> lift(const PresentedElement<Rational>& e) {
  return PresentedElement<S>::from_rational(e.ring(), e);
}

/// Root of an affine function of one unknown, given by probes at 0, 1, 2.
template <Scalar S, class F>
S solve_affine(F&& residual, const char* what) {
  const S g0 = residual(constant<S>(0));
  const S g1 = residual(constant<S>(1));
  const S g2 = residual(constant<S>(2));
  const S slope = g1 - g0;
  if (!(g2 - g0 == slope * constant<S>(2)))
    throw SolverError(std::string("constraint for ") + what + " is not affine in its unknown");
  if (chow::is_zero(slope)) throw SolverError(std::string("constraint for ") + what + " does not involve its unknown");
  return divide_exact(-g0, slope);
}

} // namespace

template <Scalar S>
BundleClass<S> e1_bundle(const S& a, const S& d, const S& c) {
  const auto& ring = projective_plane_ring();
  const auto h = PresentedElement<S>::generator(ring, "h");
  const S c2 = (d * d - c) / Rational(2);
  return BundleClass<S>(a, PresentedElement<S>::constant(ring, constant<S>(1)) + h * d + h * h * c2);
}

template <Scalar S>
BundleClass<S> twisted_e1(const S& a, const S& d, const S& c) {
  const auto& ring = q_ring();
  return twist_by_line(pullback(e1_bundle(a, d, c), ring), PresentedElement<S>::generator(ring, "H"));
}

template <Scalar S>
BundleClass<S> monad_cohomology_bundle(const S& a) {
  const auto& ring = q_ring();
  return BundleClass<S>(constant<S>(2),
                        PresentedElement<S>::constant(ring, constant<S>(1)) + lift<S>(alpha_plane_class_q()) * a);
}

template <Scalar S>
PresentedElement<S> monad_chern_product(const S& a, const S& d, const S& c) {
  const auto twisted = twisted_e1(a, d, c);
  return monad_cohomology_bundle(a).chern * twisted.chern * dual(twisted).chern;
}

template <Scalar S>
MonadConstants<S> derive_constants(const S& a) {
  const auto& ring = q_ring();
  const auto R = PresentedElement<S>::generator(ring, "R");
  const auto P_alpha = lift<S>(alpha_plane_class_q());
  const auto P_beta = lift<S>(beta_plane_class_q());

  // c2(p*E0) = b R^2 must pair to zero with P_beta for b to drop out of the d-constraint.
  if (!chow::is_zero((R * R * P_beta).integrate()))
    throw SolverError("R^2 does not pair to zero with the beta-plane class");
  const S R2_alpha = (R * R * P_alpha).integrate();
  if (chow::is_zero(R2_alpha)) throw SolverError("R^2 pairs to zero with the alpha-plane class");

  MonadConstants<S> k;
  k.a = a;
  // c2(E) . P_beta = 0 with c2(E) = c2(f): fixes d. Independent of c since R^2 P_beta = 0.
  k.d = solve_affine<S>(
      [&](const S& d) { return (monad_chern_product(a, d, constant<S>(0)).component(2) * P_beta).integrate(); }, "d");
  // c4(p*E0) = 0: fixes c.
  k.c = solve_affine<S>([&](const S& c) { return monad_chern_product(a, k.d, c).component(4).integrate(); }, "c");
  // c2(f) . P_alpha = b R^2 . P_alpha: fixes b.
  k.b = divide_exact((monad_chern_product(a, k.d, k.c).component(2) * P_alpha).integrate(), R2_alpha);

  const auto E1 = e1_bundle(a, k.d, k.c);
  k.c1_E1 = E1.c(1);
  k.c2_E1 = E1.c(2);
  return k;
}

template <Scalar S>
EulerCharacteristics<S> compute_chis(const MonadConstants<S>& k) {
  const auto q = q_context<S>();
  const auto p2 = projective_plane_context<S>();
  const auto twisted = twisted_e1(k.a, k.d, k.c);

  EulerCharacteristics<S> out;
  out.chi_E = euler_characteristic(q, monad_cohomology_bundle(k.a));
  out.chi_sum = euler_characteristic(q, twisted) + euler_characteristic(q, dual(twisted));

  const auto h = PresentedElement<S>::generator(projective_plane_ring(), "h");
  const BundleClass<S> E0(k.a * constant<S>(2) + constant<S>(2),
                          PresentedElement<S>::constant(projective_plane_ring(), constant<S>(1)) + h * h * k.b);
  out.chi_E0 = euler_characteristic(p2, E0);
  out.chi_pullback_E0 = euler_characteristic(q, pullback(E0, q_ring()));
  return out;
}

template MonadConstants<Rational> derive_constants(const Rational&);
template MonadConstants<Polynomial> derive_constants(const Polynomial&);
template EulerCharacteristics<Rational> compute_chis(const MonadConstants<Rational>&);
template EulerCharacteristics<Polynomial> compute_chis(const MonadConstants<Polynomial>&);
template BundleClass<Rational> e1_bundle(const Rational&, const Rational&, const Rational&);
template BundleClass<Polynomial> e1_bundle(const Polynomial&, const Polynomial&, const Polynomial&);
template BundleClass<Rational> twisted_e1(const Rational&, const Rational&, const Rational&);
template BundleClass<Polynomial> twisted_e1(const Polynomial&, const Polynomial&, const Polynomial&);
template BundleClass<Rational> monad_cohomology_bundle(const Rational&);
template BundleClass<Polynomial> monad_cohomology_bundle(const Polynomial&);
template PresentedElement<Rational> monad_chern_product(const Rational&, const Rational&, const Rational&);
template PresentedElement<Polynomial> monad_chern_product(const Polynomial&, const Polynomial&, const Polynomial&);

PhiResult compute_phi() {
  const auto k = derive_constants(Polynomial::variable());
  const auto chis = compute_chis(k);
  PhiResult out;
  out.phi = chis.chi_E0 - (chis.chi_E + chis.chi_sum);
  out.factorization = factor_over_rationals(out.phi);
  return out;
}

std::string_view to_string(Conclusion c) {
  switch (c) {
  case Conclusion::ExcludedByPhi: return "excluded_by_phi";
  case Conclusion::ExcludedByIntegrality: return "excluded_by_integrality";
  case Conclusion::NotExcluded: return "not_excluded";
  case Conclusion::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

const std::vector<std::string>& standard_assumptions() {
  static const std::vector<std::string> list{
      "E restricted to each fibre plane is the cohomology of O(-1)^a -> O^{2a+2} -> O(1)^a "
      "(h^0 = h^2 = 0 for the twists used), taken as given",
      "the relative monad 0 -> p*E1^v(-H) -> p*E0 -> p*E1(H) -> 0 with cohomology E is taken as given",
      "c1(E0) = 0 (E0 self-dual), so c(p*E0) = 1 + b R^2"};
  return list;
}

template <Scalar S>
void fill_common(MonadVerdict& v, const MonadConstants<S>& k, const EulerCharacteristics<S>& chis) {
  const auto& ring = q_ring();
  const auto to_poly = [](const S& s) { return Polynomial(s); };
  const auto to_poly_element = [](const PresentedElement<S>& e) {
    if constexpr (std::is_same_v<S, Polynomial>) {
      return e;
    } else {
      return PresentedElement<Polynomial>::from_rational(e.ring(), e);
    }
  };

  v.d = to_poly(k.d);
  v.c = to_poly(k.c);
  v.b = to_poly(k.b);
  v.c1_E1 = to_poly_element(k.c1_E1);
  v.c2_E1 = to_poly_element(k.c2_E1);
  const auto twisted = twisted_e1(k.a, k.d, k.c);
  for (int i = 0; i < 4; ++i) v.twist_e[i] = to_poly_element(twisted.c(i + 1));

  const auto f = monad_chern_product(k.a, k.d, k.c);
  v.monad_e = to_poly(f.component(4).integrate());

  const auto R = PresentedElement<S>::generator(ring, "R");
  const auto H = PresentedElement<S>::generator(ring, "H");
  const auto one = PresentedElement<S>::constant(ring, constant<S>(1));
  v.f_matches_e0 = f == one + R * R * k.b;
  const auto lhs = lift<S>(alpha_plane_class_q()) * k.a;
  const auto rhs = R * R * (k.b + k.c) + R * H * (k.d * constant<S>(2)) + H * H * k.a;
  v.c2_identity_holds = lhs == rhs;

  v.chi_E = to_poly(chis.chi_E);
  v.chi_sum = to_poly(chis.chi_sum);
  v.chi_E0 = to_poly(chis.chi_E0);
  v.phi = v.chi_E0 - (v.chi_E + v.chi_sum);
  v.assumptions = standard_assumptions();
}

} // namespace

MonadVerdict monad_verdict_symbolic() {
  MonadVerdict v;
  const auto k = derive_constants(Polynomial::variable());
  fill_common(v, k, compute_chis(k));
  v.phi_factorization = factor_over_rationals(v.phi);
  // The symbolic run reaches no verdict by itself; see verify_nonexistence.
  v.conclusion = Conclusion::NotApplicable;
  return v;
}

MonadVerdict monad_verdict(std::int64_t a) {
  if (a < 0) throw InputError("monad rank a must be nonnegative, got " + std::to_string(a));
  MonadVerdict v;
  v.a = a;
  const auto k = derive_constants(Rational(a));
  const auto chis = compute_chis(k);
  fill_common(v, k, chis);

  const auto add_side = [&](const char* name, const Rational& value) {
    v.side_conditions.push_back({name, value, value.is_integer()});
  };
  add_side("d", k.d);
  add_side("c", k.c);
  add_side("b", k.b);
  add_side("c2_E1", k.c2_E1.coefficient(Exponents{2}));

  if (a == 0) {
    v.conclusion = Conclusion::NotApplicable;
    return v;
  }
  if (!chis.chi_E.is_integer()) v.integrality_failures.push_back({a, "chi_E", chis.chi_E});
  if (!chis.chi_E0.is_integer()) v.integrality_failures.push_back({a, "chi_E0", chis.chi_E0});

  const Rational phi = chis.chi_E0 - (chis.chi_E + chis.chi_sum);
  if (!phi.is_zero()) {
    v.conclusion = Conclusion::ExcludedByPhi;
  } else if (!v.integrality_failures.empty()) {
    v.conclusion = Conclusion::ExcludedByIntegrality;
  } else {
    v.conclusion = Conclusion::NotExcluded;
  }
  return v;
}

std::vector<MonadVerdict> verify_nonexistence(std::int64_t a_max) {
  if (a_max < 1) throw InputError("a_max must be at least 1, got " + std::to_string(a_max));
  // Warm the shared rings and classes before fanning out.
  (void)alpha_plane_class_q();
  (void)beta_plane_class_q();
  (void)tangent_class_q();

  std::vector<MonadVerdict> out(static_cast<std::size_t>(a_max));
  std::atomic<std::int64_t> next{0};
  const auto worker = [&] {
    for (std::int64_t i = next++; i < a_max; i = next++) out[static_cast<std::size_t>(i)] = monad_verdict(i + 1);
  };
  const auto workers = std::clamp<std::int64_t>(std::thread::hardware_concurrency(), 1, a_max);
  std::vector<std::future<void>> pool;
  for (std::int64_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& job : pool) job.get();
  return out;
}

} // namespace chow
