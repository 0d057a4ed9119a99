#include "chow/selftest.hpp"

#include "chow/monad.hpp"
#include "chow/schubert.hpp"
#include "chow/twisted_chain.hpp"

#include <functional>
#include <sstream>

namespace chow {

namespace {

using Q = PresentedElement<Rational>;
using QP = PresentedElement<Polynomial>;

Polynomial poly(std::vector<Rational> coefficients) { return Polynomial(std::move(coefficients)); }

struct Outcome {
  std::string expected;
  std::string actual;
  bool pass;
};

template <class T>
Outcome compare(const T& expected, const T& actual) {
  using chow::to_string;
  return {to_string(expected), to_string(actual), expected == actual};
}

Outcome compare_text(const std::string& expected, const std::string& actual) { return {expected, actual, expected == actual}; }

Q q(std::string_view monomial, Rational c = Rational(1)) { return Q::monomial(q_ring(), monomial, c); }
QP qp(std::string_view monomial, const Polynomial& c) { return QP::monomial(q_ring(), monomial, c); }

std::string roots_string(const RationalFactorization& f) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < f.roots.size(); ++i) out << (i ? ", " : "") << f.roots[i].first;
  out << "}";
  return out.str();
}

std::vector<std::pair<std::string, std::function<Outcome()>>> corpus() {
  const GrassmannianShape g24(2, 4);
  const Polynomial a = Polynomial::variable();
  std::vector<std::pair<std::string, std::function<Outcome()>>> cases;

  cases.emplace_back("schubert: sigma_1^2 = sigma_2 + sigma_11 on G(2;4)", [=] {
    const auto s1 = SchubertElement::schubert_class(g24, Partition({1}));
    return compare(SchubertElement::schubert_class(g24, Partition({2})) +
                       SchubertElement::schubert_class(g24, Partition({1, 1})),
                   lr_multiply(s1, s1));
  });
  cases.emplace_back("schubert: W1.P_alpha = 1, W1.P_beta = 0 on G(2;4)", [=] {
    const auto w1 = named_class(g24, NamedClass::W1);
    const std::string got = to_string(poincare_pair(w1, named_class(g24, NamedClass::PAlpha))) + ", " +
                            to_string(poincare_pair(w1, named_class(g24, NamedClass::PBeta)));
    return compare_text("1, 0", got);
  });
  cases.emplace_back("schubert: W1 = sigma_2 on G(2;4)", [=] {
    return compare(SchubertElement::schubert_class(g24, Partition({2})), named_class(g24, NamedClass::W1));
  });
  cases.emplace_back("schubert: P_alpha pairs (1, 0) with (W1, W2)", [=] {
    const auto p = named_class(g24, NamedClass::PAlpha);
    const std::string got = to_string(poincare_pair(named_class(g24, NamedClass::W1), p)) + ", " +
                            to_string(poincare_pair(named_class(g24, NamedClass::W2), p));
    return compare_text("1, 0", got);
  });

  cases.emplace_back("q-ring: H^2.H^2 = 2[pt]", [] { return compare(q("R^2*H^2", 2), q("H^2") * q("H^2")); });
  cases.emplace_back("q-ring: R^2.H^2 = [pt]", [] { return compare(q("R^2*H^2"), q("R^2") * q("H^2")); });
  cases.emplace_back("q-ring: R^3.H = 0", [] { return compare(Q(q_ring()), q("R^3") * q("H")); });
  cases.emplace_back("q-ring: integral of R^2 H^2 = 1", [] { return compare(Rational(1), q("R^2*H^2").integrate()); });
  cases.emplace_back("q-ring: integral of H^4 - R H^3 = 0",
                     [] { return compare(Rational(0), (q("H^4") - q("R*H^3")).integrate()); });
  cases.emplace_back("q-ring: P_alpha.P_beta = 0",
                     [] { return compare(Q(q_ring()), alpha_plane_class_q() * beta_plane_class_q()); });

  cases.emplace_back("chern: f(t) = 1 + (a P_alpha - c R^2 - 2d RH - a H^2) t^2 + e [pt] t^4 on a probe grid", [] {
    const auto R = q("R"), H = q("H");
    for (int ia = -2; ia <= 4; ++ia)
      for (int id = -2; id <= 2; ++id)
        for (int ic = -2; ic <= 2; ++ic) {
          const Rational A(ia), D(id), C(ic);
          const Rational e = -Rational(3) * C - A * (Rational(2) * D + A) + (A - 1) * (A + Rational(4) * D) + Rational(2) * D * D;
          const Q expected = Q::constant(q_ring(), 1) + alpha_plane_class_q() * A - R * R * C - R * H * (Rational(2) * D) -
                             H * H * A + q("R^2*H^2", e);
          const Q got = monad_chern_product(A, D, C);
          if (!(expected == got)) return compare(expected, got);
        }
    return compare_text("all probes agree", "all probes agree");
  });
  cases.emplace_back("chern: f(t) = 1 + b R^2 t^2 with the derived constants", [=] {
    const auto k = derive_constants(a);
    return compare(QP::constant(q_ring(), 1) + qp("R^2", k.b), monad_chern_product(k.a, k.d, k.c));
  });
  cases.emplace_back("chern: dual of rank 2 with c1 = 0 keeps c2", [=] {
    const auto E = monad_cohomology_bundle(a);
    return compare(E.c(2), dual(E).c(2));
  });
  cases.emplace_back("chern: e1 = -aR/2 + aH", [=] {
    const auto k = derive_constants(a);
    return compare(qp("R", poly({0, Rational(-1, 2)})) + qp("H", a), twisted_e1(k.a, k.d, k.c).c(1));
  });
  cases.emplace_back("chern: e4 = (-7a^4/144 + 43a^3/144 - 41a^2/72 + a/3)[pt]", [=] {
    const auto k = derive_constants(a);
    return compare(qp("R^2*H^2", poly({0, Rational(1, 3), Rational(-41, 72), Rational(43, 144), Rational(-7, 144)})),
                   twisted_e1(k.a, k.d, k.c).c(4));
  });
  cases.emplace_back("chern: td(T_Q) eight-term expansion", [] {
    const Q expected = Q::constant(q_ring(), 1) + q("R", Rational(1, 2)) + q("H", Rational(3, 2)) +
                       q("R*H", Rational(11, 12)) + q("H^2") + q("R^2*H", Rational(1, 12)) +
                       q("R*H^2", Rational(3, 4)) + q("H^3", Rational(3, 8)) + q("R^2*H^2");
    return compare(expected, todd_class(tangent_class_q()));
  });

  cases.emplace_back("riemann-roch: c1(T_Q) = R + 3H", [] { return compare(q("R") + q("H", 3), tangent_class_q().c(1)); });
  cases.emplace_back("riemann-roch: c4(T_Q) = 9[pt]", [] { return compare(q("R^2*H^2", 9), tangent_class_q().c(4)); });
  cases.emplace_back("riemann-roch: chi(E) = a^2/12 - 23a/12 + 2", [=] {
    return compare(poly({2, Rational(-23, 12), Rational(1, 12)}), compute_chis(derive_constants(a)).chi_E);
  });
  cases.emplace_back("riemann-roch: plane monad cohomology at a = 1 is (1, 1, 4)", [] {
    const auto h = monad_cohomology_counts(1);
    return compare_text("1, 1, 4", std::to_string(h.h1_twist_minus1) + ", " + std::to_string(h.h1_twist_minus2) + ", " +
                                        std::to_string(h.h1_omega));
  });
  cases.emplace_back("riemann-roch: plane monad cohomology at a = 5 is (5, 5, 12)", [] {
    const auto h = monad_cohomology_counts(5);
    return compare_text("5, 5, 12", std::to_string(h.h1_twist_minus1) + ", " + std::to_string(h.h1_twist_minus2) +
                                         ", " + std::to_string(h.h1_omega));
  });

  cases.emplace_back("monad: (d, c, b) = (-a/2, -a(a-2)/6, (a^2+4a)/6), c2(E1) = a(5a-4)/24", [=] {
    const auto k = derive_constants(a);
    const std::string expected = to_string(poly({0, Rational(-1, 2)})) + "; " +
                                 to_string(poly({0, Rational(1, 3), Rational(-1, 6)})) + "; " +
                                 to_string(poly({0, Rational(2, 3), Rational(1, 6)})) + "; " +
                                 to_string(QP::monomial(projective_plane_ring(), "h^2", poly({0, Rational(-1, 6), Rational(5, 24)})));
    return compare_text(expected, to_string(k.d) + "; " + to_string(k.c) + "; " + to_string(k.b) + "; " + to_string(k.c2_E1));
  });
  cases.emplace_back("monad: chi_sum = 5a^4/216 - 29a^3/216 - a^2/54 + 113a/36", [=] {
    return compare(poly({0, Rational(113, 36), Rational(-1, 54), Rational(-29, 216), Rational(5, 216)}),
                   compute_chis(derive_constants(a)).chi_sum);
  });
  cases.emplace_back("monad: chi(E) = -3/2 at a = 2", [] {
    return compare(Rational(-3, 2), compute_chis(derive_constants(Rational(2))).chi_E);
  });
  cases.emplace_back("monad: Phi = -(5/216) a (a-2)(a-3)(a-4/5)", [] {
    const Polynomial x = Polynomial::variable();
    const Polynomial expected =
        x * (x - Rational(2)) * (x - Rational(3)) * (x - Rational(4, 5)) * Rational(-5, 216);
    return compare(expected, compute_phi().phi);
  });
  cases.emplace_back("monad: rational roots of Phi are {0, 4/5, 2, 3}", [] {
    const auto f = compute_phi().factorization;
    return compare_text("{0, 4/5, 2, 3}", f.identically_zero ? "Phi is identically zero" : roots_string(f));
  });
  cases.emplace_back("monad: a = 2 excluded_by_integrality with chi_E = -3/2", [] {
    const auto v = monad_verdict(2);
    return compare_text("excluded_by_integrality, -3/2",
                        std::string(to_string(v.conclusion)) + ", " + to_string(v.chi_E.coefficient(0)));
  });
  cases.emplace_back("monad: a = 3 excluded_by_integrality with chi_E0 = 9/2", [] {
    const auto v = monad_verdict(3);
    return compare_text("excluded_by_integrality, 9/2",
                        std::string(to_string(v.conclusion)) + ", " + to_string(v.chi_E0.coefficient(0)));
  });

  cases.emplace_back("chain: A(m,i) (1,1) = d_{m,i} (1,1) on seeded chains", [] {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto chain = random_chain({2, 3, 2, 1, 2}, seed);
      for (std::size_t m = 0; m < chain.degrees.size(); ++m)
        for (std::size_t i = 0; m + i < chain.degrees.size(); ++i)
          if (!eigen_check(product_matrix(chain, m, i), degree_product(chain.prefix(m + i + 1)) / degree_product(chain.prefix(m))))
            return compare_text("holds", "fails at seed " + std::to_string(seed));
    }
    return compare_text("holds", "holds");
  });
  cases.emplace_back("chain: lex-min of {(1,-1), (0,0)} is (0,0)", [] {
    const auto t = splitting_lex_min({{1, -1}, {0, 0}});
    return compare_text("(0, 0)", "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ")");
  });
  cases.emplace_back("chain: splitting bound for (a, delta) = (1, 6) is 6",
                     [] { return compare_text("6", std::to_string(pullback_splitting_bound(1, 6))); });
  return cases;
}

} // namespace

std::vector<GoldenResult> run_selftest() {
  std::vector<GoldenResult> out;
  for (const auto& [name, run] : corpus()) {
    GoldenResult r{name, "", "", false};
    try {
      auto o = run();
      r.expected = std::move(o.expected);
      r.actual = std::move(o.actual);
      r.pass = o.pass;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace chow
